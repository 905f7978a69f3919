"""Command-line front end.

Exit codes: 0 success, 1 mathematical negative (non-associative, not
isomorphic, failed self-test), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .algebra import check_associativity
from .catalog import Label, canonical_table, catalog_list, default_mode, expected_invariants
from .classify import classify
from .errors import AlgebraError, NonAssociative, ParseError
from .io import (decode, document_to_table, dumps, export_catalog, export_tables, load_table,
                 matrix_text, parse_document, read_text, table_to_document)
from .iso import are_isomorphic, ff_oracle, scramble
from .scalar import FieldMode, format_scalar, parse_scalar


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return parse_document(sys.stdin.read())
    return load_table(path)


def _names(basis, n):
    if basis:
        return basis
    return list("efg")[:n] if n <= 3 else [f"e{i}" for i in range(n)]


def _violations_text(violations, names):
    return ", ".join("(" + ",".join(names[t] for t in v) + ")" for v in violations)


def _matrix_inline(M) -> str:
    rows = matrix_text(M)
    n = len(rows)
    if all(rows[i][j] == "0" for i in range(n) for j in range(n) if i != j):
        return "diag(" + ",".join(rows[i][i] for i in range(n)) + ")"
    return "[" + ", ".join("[" + ",".join(r) + "]" for r in rows) + "]"


def _resolve_label(text, field, k):
    lab = Label.parse(text)
    if lab.is_stub:
        if k is None:
            raise UsageError(f"{lab.family} needs --k")
        lab = Label.member(lab.family, parse_scalar(k))
    mode = FieldMode(field) if field else default_mode(lab)
    return lab, mode


# -- commands ----------------------------------------------------------------

def cmd_verify(args):
    doc = decode(sys.stdin.read() if args.path == "-" else read_text(args.path))
    if isinstance(doc, dict) and "entries" in doc:
        failed = 0
        for name, T in export_tables(doc):
            bad = check_associativity(T)
            failed += bool(bad)
            print(f"{name}: {'associative' if not bad else 'NOT associative'}")
        return 1 if failed else 0
    A, basis = document_to_table(doc)
    bad = check_associativity(A)
    if not bad:
        print("associative")
        return 0
    names = _names(basis, A.dim)
    print(f"NOT associative: {len(bad)} violating triples")
    print("violations: " + _violations_text(bad, names))
    return 1


def _report(A, res, args, seconds):
    rep = {
        "label": res.label.text,
        "profile": res.profile.as_dict(),
        "witness_status": res.witness_status.value,
    }
    if res.label.k_squared is not None:
        rep["k_squared"] = format_scalar(res.label.k_squared)
    if args.witness:
        rep["witness"] = matrix_text(res.witness) if res.witness is not None else None
    if args.trace:
        rep["trace"] = [{"case": c, "scalars": {k: _fmt(v) for k, v in s.items()}}
                        for c, s in res.trace]
    rep["timing_seconds"] = round(seconds, 4)
    return rep


def _fmt(v):
    if isinstance(v, int):
        return str(v)
    return matrix_text([[v]])[0][0]


def cmd_classify(args):
    A, basis = _read(args.path)
    t0 = time.perf_counter()
    try:
        res = classify(A)
    except NonAssociative as exc:
        print("NOT associative; violations: "
              + _violations_text(exc.violations, _names(basis, A.dim)))
        return 1
    rep = _report(A, res, args, time.perf_counter() - t0)
    if args.json:
        sys.stdout.write(dumps(rep))
        return 0
    print(rep["label"])
    prof = ", ".join(f"{k}={v}" for k, v in rep["profile"].items())
    print(f"profile: {prof}")
    if args.witness:
        if res.witness is None:
            print(f"witness: omitted ({res.witness_status.value})")
        else:
            print("witness:")
            for row in rep["witness"]:
                print("  " + " ".join(row))
    if args.trace:
        for step in rep["trace"]:
            sc = " ".join(f"{k}={v}" for k, v in step["scalars"].items())
            print(f"case {step['case']}" + (f" [{sc}]" if sc else ""))
    print(f"timing: {rep['timing_seconds']} s")
    return 0


def cmd_iso(args):
    A, _ = _read(args.a)
    B, _ = _read(args.b)
    if A.mode is not B.mode or A.dim != B.dim:
        raise UsageError("tables must share field and dimension")
    same, extra = are_isomorphic(A, B)
    if same:
        wit = _matrix_inline(extra) if extra is not None else "omitted"
        print(f"isomorphic; witness {wit}")
    else:
        print(f"NOT isomorphic; separator: {extra}")
    if args.oracle:
        hit = ff_oracle(A, B, args.oracle)
        found = "none" if hit is None else _matrix_inline([[str(x) for x in r] for r in hit.rows()])
        print(f"oracle GF({args.oracle}): {found}")
    return 0 if same else 1


def cmd_catalog(args):
    modes = [FieldMode(args.field)] if args.field else list(FieldMode)
    dims = [args.dim] if args.dim else [1, 2, 3]
    if args.action == "list":
        for mode in modes:
            for d in dims:
                for lab in catalog_list(mode, d):
                    if lab.is_stub:
                        print(f"{mode.value} {lab.text}")
                        continue
                    prof = expected_invariants(lab, mode)
                    print(f"{mode.value} {lab.text} "
                          f"(alpha,beta,gamma)={prof.triple} shape={prof.shape.value}")
        return 0
    if args.action == "show":
        if not args.label:
            raise UsageError("catalog show needs a label")
        lab, mode = _resolve_label(args.label, args.field, args.k)
        sys.stdout.write(dumps(table_to_document(canonical_table(lab, mode))))
        return 0
    if not args.label:
        raise UsageError("catalog export needs an output path")
    with open(args.label, "w", encoding="utf-8") as fh:
        fh.write(dumps(export_catalog(args.field, args.dim)))
    return 0


def cmd_scramble(args):
    if os.path.exists(args.source) or args.source == "-":
        A, _ = _read(args.source)
    else:
        lab, mode = _resolve_label(args.source, args.field, args.k)
        A = canonical_table(lab, mode)
    T, M = scramble(A, args.seed)
    doc = table_to_document(T)
    doc["matrix"] = matrix_text(M)
    sys.stdout.write(dumps(doc))
    return 0


def cmd_selftest(args):
    from .selftest import run_selftest

    results = run_selftest(args.level)
    failed = [r for r in results if not r.ok]
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail} ({r.seconds:.2f} s)")
    if failed:
        print("failed: " + ", ".join(r.name for r in failed))
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="assocalg",
                                description="Classify associative algebras of dimension <= 3.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check associativity of a table document")
    s.add_argument("path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", help="identify the isomorphism class of a table")
    s.add_argument("path", help="table document, or - for stdin")
    s.add_argument("--witness", action="store_true", help="print the basis-change matrix")
    s.add_argument("--trace", action="store_true", help="print the case path taken")
    s.add_argument("--json", action="store_true", help="machine-readable report")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("iso", help="decide whether two tables are isomorphic")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--oracle", type=int, metavar="P", help="also run the GF(P) search")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("catalog", help="list, show or export canonical tables")
    s.add_argument("action", choices=["list", "show", "export"])
    s.add_argument("label", nargs="?", help="label for show, output path for export")
    s.add_argument("--field", choices=[m.value for m in FieldMode])
    s.add_argument("--dim", type=int, choices=[1, 2, 3])
    s.add_argument("--k", help="family parameter")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("scramble", help="random unimodular change of basis")
    s.add_argument("source", help="catalog label or table document")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--k", help="family parameter")
    s.add_argument("--field", choices=[m.value for m in FieldMode])
    s.set_defaults(func=cmd_scramble)

    s = sub.add_parser("selftest", help="run built-in checks")
    s.add_argument("--level", choices=["quick", "full"], default="quick")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonAssociative as exc:
        print(f"NOT associative: {exc}")
        return 1
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
