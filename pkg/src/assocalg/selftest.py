"""Built-in consistency checks run by ``assocalg selftest``."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .algebra import check_associativity, invariant_profile
from .catalog import (canonical_table, enumerate_curled2, expected_invariants, fixed_labels,
                      sample_labels)
from .classify import classify
from .errors import AlgebraError
from .iso import ff_oracle, scramble
from .references import KNOWN_WITNESSES
from .scalar import FieldMode

# pairs whose invariants are closest; the oracle found no GF(p) witness for any of them
HARD_PAIRS = (("W3_7", "W3_10"), ("W3_8", "W3_9"), ("W3_1", "W3_4"), ("A2_1", "A2_2"))
FROZEN_ORACLE = {(a, b, p): None for a, b in HARD_PAIRS for p in (3, 5)}

CURLED2_SOLUTIONS = [
    (0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 1, 0), (0, 1, 1, 0, 0, 0),
    (1, 0, 0, 0, 0, 1), (1, 0, 0, 1, 0, 0), (1, 1, 0, 1, 1, 0), (1, 1, 1, 0, 0, 1),
]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _both_modes():
    for mode in FieldMode:
        for lab in sample_labels(mode):
            yield mode, lab


def check_catalog_associativity():
    bad = [f"{lab}/{mode.value}" for mode, lab in _both_modes()
           if check_associativity(canonical_table(lab, mode))]
    return not bad, "all tables associative" if not bad else "violations in " + ", ".join(bad)


def check_invariant_table():
    bad = []
    for mode, lab in _both_modes():
        got = invariant_profile(canonical_table(lab, mode))
        want = expected_invariants(lab, mode)
        if got != want:
            bad.append(f"{lab}/{mode.value}: {got.first_difference(want)}")
    return not bad, "profiles match" if not bad else "; ".join(bad)


def check_known_witnesses():
    bad = [w.name for w in KNOWN_WITNESSES if not w.check()]
    return not bad, f"{len(KNOWN_WITNESSES)} matrices verified" if not bad else ", ".join(bad)


def check_curled2():
    got = enumerate_curled2()
    return sorted(got) == sorted(CURLED2_SOLUTIONS), f"{len(got)} solutions"


def check_round_trip(seeds=range(5)):
    bad = []
    for mode, lab in _both_modes():
        base = canonical_table(lab, mode)
        for s in seeds:
            try:
                got = classify(scramble(base, s)[0]).label
            except AlgebraError as exc:
                got = type(exc).__name__
            if got != lab:
                bad.append(f"{lab}/{mode.value} seed {s}: {got}")
    return not bad, "all scrambles recovered" if not bad else "; ".join(bad[:5])


def check_oracle(primes=(5,)):
    bad = []
    for a, b in HARD_PAIRS:
        for p in primes:
            hit = ff_oracle(canonical_table(a, "real"), canonical_table(b, "real"), p)
            if hit != FROZEN_ORACLE[(a, b, p)]:
                bad.append(f"{a}/{b} GF({p})")
    return not bad, "oracle matches frozen values" if not bad else ", ".join(bad)


def check_separation():
    bad = []
    for mode in FieldMode:
        for dim in (1, 2, 3):
            profs = [expected_invariants(lab, mode) for lab in fixed_labels(mode, dim)]
            if len(set(profs)) != len(profs):
                bad.append(f"{mode.value} dim {dim}")
    return not bad, "fixed labels separated" if not bad else ", ".join(bad)


QUICK = (
    ("catalog-associativity", check_catalog_associativity),
    ("invariant-table", check_invariant_table),
    ("known-witnesses", check_known_witnesses),
    ("curled2-enumeration", check_curled2),
)
FULL = QUICK + (
    ("separation", check_separation),
    ("round-trip", check_round_trip),
    ("oracle", check_oracle),
)


def run_selftest(level: str = "quick") -> list[CheckResult]:
    checks = QUICK if level == "quick" else FULL
    out = []
    for name, fn in checks:
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, ok, detail, time.perf_counter() - t0))
    return out
