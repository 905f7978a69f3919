from __future__ import annotations

import io
import json
from fractions import Fraction
import subprocess
import sys

import pytest

from assocalg import catalog
from assocalg.catalog import Label, canonical_table, family_table
from assocalg.cli import main
from assocalg.io import (document_to_table, export_catalog, label_from_entry, parse_document,
                         table_to_document)
from assocalg.scalar import FieldMode, Scalar


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, table):
    p = tmp_path / name
    p.write_text(json.dumps(table_to_document(table)))
    return str(p)


def test_verify(tmp_path, capsys):
    good = write(tmp_path, "c.json", canonical_table("C3_2"))
    assert run(capsys, "verify", good)[0] == 0
    bad = tmp_path / "bad.json"
    z = ["0", "0", "0"]
    bad.write_text(json.dumps({"format": 1, "dim": 3, "field": "real",
                               "table": [[z, z, ["0", "1", "0"]], [z, z, z], [z, z, ["1", "0", "0"]]]}))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1 and "(g,g,g)" in out
    doc = json.loads(bad.read_text())
    doc["table"][2][2][0] = "1/0"
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 2 and "table[2][2][0]" in err


def test_verify_accepts_catalog_export(tmp_path, capsys):
    path = tmp_path / "cat.json"
    assert run(capsys, "catalog", "export", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "NOT" not in out


def test_classify_reports(tmp_path, capsys):
    code, out, _ = run(capsys, "classify", write(tmp_path, "w.json", canonical_table(Label("W3_3", 4))))
    assert code == 0 and out.splitlines()[0] == "W3_3, k^2 = 4"
    code, out, _ = run(capsys, "classify", write(tmp_path, "z.json", canonical_table("C3_0")))
    assert out.splitlines()[0] == "C3_0"


def test_classify_trace_and_witness_json(tmp_path, capsys, monkeypatch):
    code, doc, _ = run(capsys, "scramble", "U3_3", "--seed", "5")
    code, out, _ = run(capsys, "classify", "-", "--trace", "--witness", "--json",
                       stdin=doc, monkeypatch=monkeypatch)
    rep = json.loads(out)
    assert rep["label"] == "U3_3"
    assert rep["trace"][0]["case"] == "unital3/ii-double-root"
    assert rep["witness_status"] == "ExactVerified" and len(rep["witness"]) == 3


def test_classify_non_associative(tmp_path, capsys):
    from assocalg.catalog import table_from_rows
    code, out, _ = run(capsys, "classify", write(tmp_path, "n.json", table_from_rows(["0 0 f", "0 0 0", "0 0 e"])))
    assert code == 1 and "(g,g,g)" in out


def test_iso(tmp_path, capsys):
    a = write(tmp_path, "a.json", canonical_table("W3_1"))
    b = write(tmp_path, "b.json", canonical_table("W3_4"))
    code, out, _ = run(capsys, "iso", a, b)
    assert code == 1 and out.strip() == "NOT isomorphic; separator: square_of_square_zero"
    k1 = write(tmp_path, "k1.json", family_table("W3_3", 1))
    km1 = write(tmp_path, "km1.json", family_table("W3_3", -1))
    code, out, _ = run(capsys, "iso", k1, km1)
    assert code == 0 and out.strip() == "isomorphic; witness diag(1,1,-1)"
    a = write(tmp_path, "a2.json", canonical_table("A2_1"))
    b = write(tmp_path, "b2.json", canonical_table("A2_2"))
    code, out, _ = run(capsys, "iso", a, b, "--oracle", "3")
    assert code == 1 and out.startswith("NOT isomorphic") and "oracle GF(3): none" in out
    r = write(tmp_path, "r.json", canonical_table("C3_0", "real"))
    assert run(capsys, "iso", r, write(tmp_path, "c.json", canonical_table("C3_0")))[0] == 2


def test_catalog_commands(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--field", "complex", "--dim", "3")
    lines = out.splitlines()
    assert len(lines) == 24 and sum("W3_3(k) family" in x for x in lines) == 1
    code, out, _ = run(capsys, "catalog", "show", "S3_3m", "--field", "real")
    assert code == 0
    T, _ = parse_document(out)
    assert T == canonical_table("S3_3m")
    assert run(capsys, "catalog", "show", "S3_3m", "--field", "complex")[0] == 2
    assert run(capsys, "catalog", "show", "Q3_1")[0] == 2
    assert run(capsys, "catalog", "show", "W3_3")[0] == 2


def test_scramble_pipeline(capsys, monkeypatch):
    code, doc, _ = run(capsys, "scramble", "C3_2", "--seed", "1")
    again = run(capsys, "scramble", "C3_2", "--seed", "1")[1]
    assert doc == again
    assert "matrix" in json.loads(doc)
    code, out, _ = run(capsys, "classify", "-", stdin=doc, monkeypatch=monkeypatch)
    assert out.splitlines()[0] == "C3_2"
    code, doc, _ = run(capsys, "scramble", "W3_3", "--k", "1+1i", "--seed", "9",
                       "--field", "complex")
    code, out, _ = run(capsys, "classify", "-", stdin=doc, monkeypatch=monkeypatch)
    assert out.splitlines()[0] == "W3_3, k^2 = 0+2i"
    assert run(capsys, "scramble", "W3_3", "--seed", "1")[0] == 2


def test_document_round_trip():
    for mode in FieldMode:
        for e in export_catalog(mode)["entries"]:
            T, _ = document_to_table(e["document"])
            assert table_to_document(T) == e["document"]
            assert T == canonical_table(label_from_entry(e), mode)


def test_document_errors():
    from assocalg.errors import ParseError
    with pytest.raises(ParseError):
        parse_document("{not json")
    with pytest.raises(ParseError):
        parse_document(json.dumps({"format": 2, "dim": 1, "field": "real", "table": [[["0"]]]}))
    with pytest.raises(ParseError):
        parse_document(json.dumps({"dim": 1, "field": "quaternion", "table": [[["0"]]]}))
    with pytest.raises(ParseError):
        parse_document(json.dumps({"dim": 2, "field": "real", "table": [[["0"]]]}))
    T, basis = parse_document(json.dumps({"table": [[["1/2+1i"]]], "field": "complex", "dim": 1,
                                          "basis": ["u"]}))
    assert T.constants[0][0][0] == Scalar(Fraction(1, 2), 1) and basis == ["u"]


def test_export_is_stable():
    assert export_catalog() == export_catalog()


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "all 4 checks passed" in out


def test_selftest_catches_swapped_tables(capsys, monkeypatch):
    tables = dict(catalog._TABLES)
    tables["W3_5"], tables["W3_6"] = tables["W3_6"], tables["W3_5"]
    monkeypatch.setattr(catalog, "_TABLES", tables)
    code, out, _ = run(capsys, "selftest", "--level", "quick")
    assert code == 1
    assert "FAIL invariant-table" in out and "failed: invariant-table" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "assocalg", "catalog", "list", "--dim", "1"],
                          capture_output=True, text=True, check=True)
    assert "A1_1" in proc.stdout
