"""JSON documents for tables, reports and catalog exports."""

from __future__ import annotations

import json

from .algebra import StructureTable
from .catalog import CatalogEntry, Label, all_entries
from .errors import AlgebraError, ParseError
from .scalar import ExtScalar, FieldMode, format_ext, format_scalar, parse_scalar

FORMAT = 1


def table_to_document(A: StructureTable, basis=None) -> dict:
    if not A.is_rational:
        raise AlgebraError("documents hold Gaussian rational constants only")
    doc = {
        "format": FORMAT,
        "dim": A.dim,
        "field": A.mode.value,
        "table": [[[format_scalar(x) for x in A.constants[i][j]] for j in range(A.dim)]
                  for i in range(A.dim)],
    }
    if basis is not None:
        doc["basis"] = list(basis)
    return doc


def _require(cond, message, location=None):
    if not cond:
        raise ParseError(message, location)


def document_to_table(doc) -> tuple[StructureTable, list | None]:
    """Validate a decoded document and build its table."""
    _require(isinstance(doc, dict), "document must be a JSON object")
    fmt = doc.get("format", FORMAT)
    _require(fmt == FORMAT, f"unsupported format {fmt!r}", "format")
    for key in ("dim", "field", "table"):
        _require(key in doc, f"missing field {key!r}")
    n = doc["dim"]
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 1,
             "dim must be a positive integer", "dim")
    try:
        mode = FieldMode(doc["field"])
    except ValueError:
        raise ParseError(f"field must be 'real' or 'complex', got {doc['field']!r}", "field")
    basis = doc.get("basis")
    if basis is not None:
        _require(isinstance(basis, list) and len(basis) == n
                 and all(isinstance(b, str) for b in basis),
                 f"basis must list {n} names", "basis")
    rows = doc["table"]
    _require(isinstance(rows, list) and len(rows) == n, f"table must have {n} rows", "table")
    consts = []
    for i, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == n, f"row must have {n} cells", f"table[{i}]")
        out_row = []
        for j, cell in enumerate(row):
            loc = f"table[{i}][{j}]"
            _require(isinstance(cell, list) and len(cell) == n, f"cell must have {n} entries", loc)
            vec = []
            for s, text in enumerate(cell):
                try:
                    vec.append(parse_scalar(text))
                except ParseError as exc:
                    raise ParseError(str(exc), f"{loc}[{s}]") from None
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad scalar {text!r}: {exc}", f"{loc}[{s}]") from None
            out_row.append(vec)
        consts.append(out_row)
    try:
        return StructureTable(consts, mode), basis
    except AlgebraError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def decode(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def parse_document(text: str) -> tuple[StructureTable, list | None]:
    return document_to_table(decode(text))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def read_text(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", str(path)) from None


def load_table(path) -> tuple[StructureTable, list | None]:
    return parse_document(read_text(path))


def export_tables(doc) -> list[tuple[str, StructureTable]]:
    """(name, table) pairs of a catalog export."""
    _require(isinstance(doc, dict) and isinstance(doc.get("entries"), list),
             "catalog export must hold an entries list")
    out = []
    for n, e in enumerate(doc["entries"]):
        _require(isinstance(e, dict) and "document" in e, "entry without document", f"entries[{n}]")
        name = e.get("label", f"entry {n}")
        if e.get("k_squared") is not None:
            name += f", k^2 = {e['k_squared']}"
        try:
            table, _ = document_to_table(e["document"])
        except ParseError as exc:
            raise ParseError(str(exc), f"entries[{n}]") from None
        out.append((f"{name} ({table.mode.value})", table))
    return out


def matrix_text(M) -> list[list[str]]:
    rows = M.rows() if hasattr(M, "rows") else M
    return [[format_ext(x) if isinstance(x, ExtScalar) else format_scalar(x) for x in r]
            for r in rows]


def entry_document(e: CatalogEntry) -> dict:
    out = {
        "label": e.label.family,
        "document": table_to_document(e.table),
        "profile": e.expected_profile.as_dict(),
        "metadata": e.metadata,
    }
    if e.label.k_squared is not None:
        out["k_squared"] = format_scalar(e.label.k_squared)
    return out


def export_catalog(mode: FieldMode | str | None = None, dim: int | None = None) -> dict:
    modes = [FieldMode(mode)] if mode else list(FieldMode)
    entries = []
    for m in modes:
        for e in all_entries(m):
            if dim is None or e.label.dim == dim:
                entries.append(entry_document(e))
    return {"format": FORMAT, "entries": entries}


def label_from_entry(d: dict) -> Label:
    k2 = d.get("k_squared")
    return Label(d["label"], parse_scalar(k2) if k2 is not None else None)
