from __future__ import annotations

import pytest

from assocalg.algebra import check_associativity, invariant_profile
from assocalg.catalog import (Label, canonical_table, catalog_list, entry, enumerate_curled2,
                              expected_invariants, fixed_labels, sample_labels,
                              separation_certificate, table_from_rows)
from assocalg.errors import MissingParameter, ModeMismatch, UnknownLabel
from assocalg.scalar import FieldMode, Scalar

R, C = FieldMode.REAL, FieldMode.COMPLEX


def test_canonical_examples():
    assert canonical_table("U3_4") == table_from_rows(["e f g", "f g 0", "g 0 0"])
    assert canonical_table(Label("W3_3", 0)) == table_from_rows(["0 0 0", "0 e 0", "0 0 e"])
    assert not any(canonical_table("C3_0").product(i, j) for i in range(3) for j in range(3))


def test_mode_and_parameter_errors():
    with pytest.raises(ModeMismatch):
        canonical_table("S3_3m", C)
    with pytest.raises(MissingParameter):
        canonical_table("W3_3")
    with pytest.raises(ModeMismatch):
        canonical_table(Label("W3_3", -1), R)
    with pytest.raises(UnknownLabel):
        Label("X3_1")


@pytest.mark.parametrize("mode,dim,fixed,stubs", [
    (C, 3, 23, 1), (R, 3, 25, 2), (C, 2, 7, 0), (R, 2, 8, 0), (C, 1, 2, 0),
])
def test_catalog_counts(mode, dim, fixed, stubs):
    labs = catalog_list(mode, dim)
    assert len([x for x in labs if not x.is_stub]) == fixed
    assert len([x for x in labs if x.is_stub]) == stubs


def test_real_extras():
    extra = {x.family for x in catalog_list(R, 3)} - {x.family for x in catalog_list(C, 3)}
    assert extra == {"U3_2m", "S3_3m", "W3_3m"}
    assert [x.family for x in catalog_list(C, 1)] == ["A1_0", "A1_1"]


@pytest.mark.parametrize("label,triple", [("W3_5", (2, 2, 1)), ("C3_4", (3, 0, 2))])
def test_expected_triples(label, triple):
    assert expected_invariants(label).triple == triple


@pytest.mark.parametrize("k2", [0, 1, 4, Scalar(0, 2), Scalar(-3, 1)])
def test_family_triple_constant(k2):
    assert expected_invariants(Label("W3_3", k2)).triple == (1, 1, 1)


@pytest.mark.parametrize("mode", list(FieldMode))
def test_every_entry_associative_and_profiled(mode):
    for lab in sample_labels(mode):
        e = entry(lab, mode)
        assert check_associativity(e.table) == []
        assert invariant_profile(e.table) == e.expected_profile, lab


def test_curled2_enumeration():
    sols = enumerate_curled2()
    assert len(sols) == 7
    assert (0, 0, 0, 0, 0, 0) in sols and (1, 1, 0, 1, 1, 0) in sols
    assert sols[1] == (0, 1, 0, 0, 1, 0)


@pytest.mark.parametrize("mode", list(FieldMode))
@pytest.mark.parametrize("dim", [1, 2, 3])
def test_separation_certificate_complete(mode, dim):
    cert = separation_certificate(mode, dim)
    n = len(fixed_labels(mode, dim))
    assert len(cert) == n * (n - 1) // 2
    assert all(v is not None for v in cert.values())


def test_label_text_round_trip():
    lab = Label("W3_3", 4)
    assert lab.text == "W3_3, k^2 = 4"
    assert Label.parse(lab.text) == lab
    assert Label.parse("W3_3(k=-2)") == lab
    assert Label("W3_3").text == "W3_3(k) family"
    assert Label.parse("W3_3(k) family").is_stub


def test_normalized_k():
    assert Label("W3_3", 4).k(R) == 2
    assert Label("W3_3", -4).k(C) == Scalar(0, 2)
    assert Label.member("W3_3", Scalar(-1, -1)).k(C) == Scalar(1, 1)


def test_metadata_flags():
    assert entry("U3_2").metadata == {"commutative": True, "unital": True, "zeropotent": False,
                                      "indecomposable": False}
    assert entry("C3_1").metadata["zeropotent"]
    assert entry("W3_10").metadata["indecomposable"]
