"""Canonical multiplication tables of all associative algebras of
dimension at most 3 over the reals and the complex numbers.

Tables are written row by row on the basis e, f, g; row i lists the
products e_i e, e_i f, e_i g.  The letter ``k`` stands for the family
parameter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product

from .algebra import InvariantProfile, Shape, StructureTable, invariant_profile
from .errors import MissingParameter, ModeMismatch, UnknownLabel
from .scalar import ExtScalar, FieldMode, Scalar, as_scalar, format_scalar, parse_scalar

LETTERS = "efg"
FAMILIES = ("W3_3", "W3_3m")

# name: (dim, real only, rows)
_TABLES = {
    "A1_0": (1, False, ["0"]),
    "A1_1": (1, False, ["e"]),
    "A2_0": (2, False, ["0 0", "0 0"]),
    "A2_1": (2, False, ["0 0", "e f"]),
    "A2_2": (2, False, ["0 e", "0 f"]),
    "A2_3": (2, False, ["0 0", "0 e"]),
    "A2_4": (2, False, ["e 0", "0 0"]),
    "A2_5": (2, False, ["e f", "f e"]),
    "A2_5m": (2, True, ["e f", "f -e"]),
    "A2_6": (2, False, ["e f", "f 0"]),
    "U3_0": (3, False, ["e f g", "f 0 0", "g 0 0"]),
    "U3_1": (3, False, ["e f g", "f 0 f", "g -f e"]),
    "U3_2": (3, False, ["e 0 0", "0 f 0", "0 0 g"]),
    "U3_2m": (3, True, ["e 0 0", "0 f g", "0 g -f"]),
    "U3_3": (3, False, ["e 0 0", "0 f g", "0 g 0"]),
    "U3_4": (3, False, ["e f g", "f g 0", "g 0 0"]),
    "C3_0": (3, False, ["0 0 0", "0 0 0", "0 0 0"]),
    "C3_1": (3, False, ["0 0 0", "0 0 e", "0 -e 0"]),
    "C3_2": (3, False, ["0 0 0", "e f 0", "0 g 0"]),
    "C3_3": (3, False, ["0 0 0", "0 0 0", "e f g"]),
    "C3_4": (3, False, ["0 0 e", "0 0 f", "0 0 g"]),
    "S3_1": (3, False, ["f g 0", "g 0 0", "0 0 0"]),
    "S3_2": (3, False, ["e 0 0", "0 g 0", "0 0 0"]),
    "S3_3": (3, False, ["e f 0", "f e 0", "0 0 0"]),
    "S3_3m": (3, True, ["e f 0", "f -e 0", "0 0 0"]),
    "S3_4": (3, False, ["e f 0", "f 0 0", "0 0 0"]),
    "W3_1": (3, False, ["0 0 0", "0 0 0", "0 0 e"]),
    "W3_2": (3, False, ["0 0 0", "0 0 0", "0 e 0"]),
    "W3_3": (3, False, ["0 0 0", "0 e 0", "0 ke e"]),
    "W3_3m": (3, True, ["0 0 0", "0 e 0", "0 ke -e"]),
    "W3_4": (3, False, ["e 0 0", "0 0 0", "0 0 0"]),
    "W3_5": (3, False, ["0 0 0", "0 0 0", "0 f g"]),
    "W3_6": (3, False, ["0 0 0", "0 0 f", "0 0 g"]),
    "W3_7": (3, False, ["e 0 0", "0 0 0", "0 f g"]),
    "W3_8": (3, False, ["e 0 0", "0 0 f", "0 0 g"]),
    "W3_9": (3, False, ["0 e 0", "e f 0", "0 g 0"]),
    "W3_10": (3, False, ["0 e 0", "e f g", "0 0 0"]),
}

ORDER = tuple(_TABLES)

_INDECOMPOSABLE = {
    "A1_0", "A1_1", "A2_1", "A2_2", "A2_3", "A2_5m", "A2_6",
    "U3_0", "U3_1", "U3_4", "C3_1", "C3_2", "C3_3", "C3_4", "S3_1",
    "W3_2", "W3_3", "W3_3m", "W3_9", "W3_10",
}

C, W, S = Shape.CURLED, Shape.WAVED, Shape.STRAIGHT
T_, F_ = True, False

# alpha, beta, gamma, commutative, unital, shape, zeropotent,
# square_of_square_zero, zeropotent_plane, power_pattern
_PROFILES = {
    "A1_0": (0, 1, 1, T_, F_, C, T_, T_, F_, "-"),
    "A1_1": (1, 0, 0, T_, T_, C, F_, F_, F_, "-"),
    "A2_0": (0, 2, 2, T_, F_, C, T_, T_, T_, "-"),
    "A2_1": (2, 1, 0, F_, F_, C, F_, F_, F_, "-"),
    "A2_2": (2, 0, 1, F_, F_, C, F_, F_, F_, "-"),
    "A2_3": (1, 1, 1, T_, F_, S, F_, T_, F_, "0^3|"),
    "A2_4": (1, 1, 1, T_, F_, S, F_, F_, F_, "0^2|1"),
    "A2_5": (2, 0, 0, T_, T_, S, F_, F_, F_, "0^1|1,1"),
    "A2_5m": (2, 0, 0, T_, T_, S, F_, F_, F_, "0^1|1,1 complex-pair"),
    "A2_6": (2, 0, 0, T_, T_, S, F_, F_, F_, "0^1|2"),
    "U3_0": (3, 0, 0, T_, T_, W, F_, F_, T_, "-"),
    "U3_1": (3, 0, 0, F_, T_, W, F_, F_, F_, "-"),
    "U3_2": (3, 0, 0, T_, T_, S, F_, F_, F_, "0^1|1,1,1"),
    "U3_2m": (3, 0, 0, T_, T_, S, F_, F_, F_, "0^1|1,1,1 complex-pair"),
    "U3_3": (3, 0, 0, T_, T_, S, F_, F_, F_, "0^1|2,1"),
    "U3_4": (3, 0, 0, T_, T_, S, F_, F_, F_, "0^1|3"),
    "C3_0": (0, 3, 3, T_, F_, C, T_, T_, T_, "-"),
    "C3_1": (1, 1, 1, F_, F_, C, T_, T_, T_, "-"),
    "C3_2": (3, 1, 1, F_, F_, C, F_, F_, T_, "-"),
    "C3_3": (3, 2, 0, F_, F_, C, F_, F_, T_, "-"),
    "C3_4": (3, 0, 2, F_, F_, C, F_, F_, T_, "-"),
    "S3_1": (2, 1, 1, T_, F_, S, F_, T_, T_, "0^4|"),
    "S3_2": (2, 1, 1, T_, F_, S, F_, F_, F_, "0^3|1"),
    "S3_3": (2, 1, 1, T_, F_, S, F_, F_, F_, "0^2|1,1"),
    "S3_3m": (2, 1, 1, T_, F_, S, F_, F_, F_, "0^2|1,1 complex-pair"),
    "S3_4": (2, 1, 1, T_, F_, S, F_, F_, T_, "0^2|2"),
    "W3_1": (1, 2, 2, T_, F_, W, F_, T_, T_, "-"),
    "W3_2": (1, 2, 2, F_, F_, W, F_, T_, T_, "-"),
    # family rows: commutative and zeropotent_plane depend on k, see _family_profile
    "W3_3": (1, 1, 1, F_, F_, W, F_, T_, T_, "-"),
    "W3_3m": (1, 1, 1, F_, F_, W, F_, T_, T_, "-"),
    "W3_4": (1, 2, 2, T_, F_, W, F_, F_, T_, "-"),
    "W3_5": (2, 2, 1, F_, F_, W, F_, F_, T_, "-"),
    "W3_6": (2, 1, 2, F_, F_, W, F_, F_, T_, "-"),
    "W3_7": (3, 1, 0, F_, F_, W, F_, F_, F_, "-"),
    "W3_8": (3, 0, 1, F_, F_, W, F_, F_, F_, "-"),
    "W3_9": (3, 0, 1, F_, F_, W, F_, F_, T_, "-"),
    "W3_10": (3, 1, 0, F_, F_, W, F_, F_, T_, "-"),
}


def _normalized_k(k_squared: Scalar, mode: FieldMode) -> ExtScalar:
    # principal root: lands in the closed right half-plane, and k >= 0 for real k^2 >= 0
    return ExtScalar.sqrt_of(k_squared)


@dataclass(frozen=True)
class Label:
    """An isomorphism class.  Family labels carry the exact k^2."""

    family: str
    k_squared: Scalar | None = None

    def __post_init__(self):
        if self.family not in _TABLES:
            raise UnknownLabel(f"unknown label {self.family!r}")
        if self.k_squared is not None:
            if self.family not in FAMILIES:
                raise UnknownLabel(f"{self.family} takes no parameter")
            object.__setattr__(self, "k_squared", as_scalar(self.k_squared))

    @classmethod
    def member(cls, family: str, k) -> "Label":
        """Family member for parameter ``k`` (any root of k^2 gives the same label)."""
        k = as_scalar(k) if not isinstance(k, ExtScalar) else k
        k2 = k * k
        if isinstance(k2, ExtScalar):
            k2 = k2.as_scalar()
            if k2 is None:
                raise UnknownLabel("k^2 must be a Gaussian rational")
        return cls(family, k2)

    @property
    def dim(self) -> int:
        return _TABLES[self.family][0]

    @property
    def real_only(self) -> bool:
        return _TABLES[self.family][1]

    @property
    def is_family(self) -> bool:
        return self.family in FAMILIES

    @property
    def is_stub(self) -> bool:
        return self.is_family and self.k_squared is None

    def k(self, mode: FieldMode | str = FieldMode.COMPLEX) -> ExtScalar | None:
        if self.k_squared is None:
            return None
        return _normalized_k(self.k_squared, FieldMode(mode))

    @property
    def text(self) -> str:
        if self.is_stub:
            return f"{self.family}(k) family"
        if self.k_squared is not None:
            return f"{self.family}, k^2 = {format_scalar(self.k_squared)}"
        return self.family

    def __str__(self):
        return self.text

    @classmethod
    def parse(cls, text: str) -> "Label":
        """Inverse of :attr:`text`; also accepts ``W3_3(k=2)`` style parameters."""
        t = text.strip()
        m = re.fullmatch(r"(\w+)\s*,\s*k\^2\s*=\s*(.+)", t)
        if m:
            return cls(m.group(1), parse_scalar(m.group(2)))
        m = re.fullmatch(r"(\w+)\s*\(\s*k\s*=\s*(.+)\)", t)
        if m:
            return cls.member(m.group(1), parse_scalar(m.group(2)))
        if t.endswith(" family"):
            t = t[: -len(" family")].replace("(k)", "")
        return cls(t)


_TERM = re.compile(r"([+-]?)(\d*|k)([efg])")


def _parse_cell(text: str, dim: int, k):
    vec = [as_scalar(0)] * dim
    if text == "0":
        return vec
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"bad cell {text!r}")
        pos = m.end()
        sign, coef, letter = m.groups()
        c = k if coef == "k" else as_scalar(int(coef) if coef else 1)
        if sign == "-":
            c = -c
        idx = LETTERS.index(letter)
        vec[idx] = vec[idx] + c
    if pos != len(text):
        raise ValueError(f"bad cell {text!r}")
    return vec


def table_from_rows(rows, mode=FieldMode.COMPLEX, k=None) -> StructureTable:
    """Build a table from the row notation used in this module."""
    dim = len(rows)
    cells = [[_parse_cell(c, dim, k) for c in row.split()] for row in rows]
    return StructureTable(cells, mode)


def family_table(family: str, k, mode: FieldMode | str = FieldMode.COMPLEX) -> StructureTable:
    """W3_3(k) or W3_3m(k) for an explicit (not necessarily normalized) k."""
    mode = FieldMode(mode)
    if family not in FAMILIES:
        raise UnknownLabel(f"{family} is not a family")
    if family == "W3_3m" and mode is not FieldMode.REAL:
        raise ModeMismatch("W3_3m exists only over the reals")
    k = k if isinstance(k, ExtScalar) else as_scalar(k)
    return table_from_rows(_TABLES[family][2], mode, k)


def _check_mode(label: Label, mode: FieldMode) -> None:
    if label.real_only and mode is not FieldMode.REAL:
        raise ModeMismatch(f"{label.family} exists only over the reals")
    if label.is_family and label.k_squared is not None and mode is FieldMode.REAL:
        if not label.k_squared.is_real() or label.k_squared < 0:
            raise ModeMismatch(f"k^2 = {label.k_squared} has no real k")


def default_mode(label: Label) -> FieldMode:
    return FieldMode.REAL if label.real_only else FieldMode.COMPLEX


def canonical_table(label: Label | str, mode: FieldMode | str | None = None) -> StructureTable:
    if isinstance(label, str):
        label = Label.parse(label)
    mode = default_mode(label) if mode is None else FieldMode(mode)
    _check_mode(label, mode)
    if label.is_family:
        if label.k_squared is None:
            raise MissingParameter(f"{label.family} needs a parameter")
        return family_table(label.family, label.k(mode), mode)
    return table_from_rows(_TABLES[label.family][2], mode)


def catalog_list(mode: FieldMode | str, dim: int) -> list[Label]:
    """All labels of the given dimension; families appear as parameterless stubs."""
    mode = FieldMode(mode)
    out = []
    for name in ORDER:
        d, real_only, _ = _TABLES[name]
        if d != dim or (real_only and mode is not FieldMode.REAL):
            continue
        out.append(Label(name))
    return out


def fixed_labels(mode: FieldMode | str, dim: int) -> list[Label]:
    return [lab for lab in catalog_list(mode, dim) if not lab.is_family]


def _family_profile(label: Label, mode: FieldMode, base: InvariantProfile) -> InvariantProfile:
    k2 = label.k_squared
    commutative = not k2
    if label.family == "W3_3m":
        plane = True
    elif mode is FieldMode.COMPLEX:
        plane = True
    else:
        # b^2 + k bc + c^2 splits over the reals iff k^2 >= 4
        plane = k2 >= 4
    return base.evolve(commutative=commutative, zeropotent_plane=plane)


def expected_invariants(label: Label | str, mode: FieldMode | str | None = None) -> InvariantProfile:
    if isinstance(label, str):
        label = Label.parse(label)
    mode = default_mode(label) if mode is None else FieldMode(mode)
    _check_mode(label, mode)
    prof = InvariantProfile(*_PROFILES[label.family])
    if label.is_family:
        if label.k_squared is None:
            raise MissingParameter(f"{label.family} needs a parameter")
        prof = _family_profile(label, mode, prof)
    return prof


def metadata(label: Label | str, mode: FieldMode | str | None = None) -> dict:
    if isinstance(label, str):
        label = Label.parse(label)
    prof = expected_invariants(label, mode)
    return {
        "commutative": prof.commutative,
        "unital": prof.unital,
        "zeropotent": prof.zeropotent,
        "indecomposable": label.family in _INDECOMPOSABLE,
    }


@dataclass(frozen=True)
class CatalogEntry:
    label: Label
    table: StructureTable
    expected_profile: InvariantProfile
    metadata: dict


def entry(label: Label | str, mode: FieldMode | str | None = None) -> CatalogEntry:
    if isinstance(label, str):
        label = Label.parse(label)
    mode = default_mode(label) if mode is None else FieldMode(mode)
    return CatalogEntry(label, canonical_table(label, mode), expected_invariants(label, mode),
                        metadata(label, mode))


SAMPLE_K = ("0", "1", "2", "1+1i")


def sample_labels(mode: FieldMode | str, dim: int | None = None) -> list[Label]:
    """Every fixed label plus the family members for the sample parameters."""
    mode = FieldMode(mode)
    dims = (1, 2, 3) if dim is None else (dim,)
    out = []
    for d in dims:
        for lab in catalog_list(mode, d):
            if not lab.is_family:
                out.append(lab)
                continue
            for text in SAMPLE_K:
                k = parse_scalar(text)
                if mode is FieldMode.REAL and not k.is_real():
                    continue
                out.append(Label.member(lab.family, k))
    return out


def all_entries(mode: FieldMode | str) -> list[CatalogEntry]:
    return [entry(lab, mode) for lab in sample_labels(mode)]


def separation_certificate(mode: FieldMode | str, dim: int) -> dict:
    """For each pair of distinct fixed labels, the first profile field that differs."""
    mode = FieldMode(mode)
    labs = fixed_labels(mode, dim)
    cert = {}
    for a, b in combinations(labs, 2):
        pa, pb = expected_invariants(a, mode), expected_invariants(b, mode)
        cert[(a.family, b.family)] = pa.first_difference(pb)
    return cert


def enumerate_curled2() -> list[tuple[int, int, int, int, int, int]]:
    """Solutions (k, l, a, b, c, d) of the curled two-dimensional equations.

    k, l range over {0, 1}; the equations force a, c into {0, l} and b, d
    into {0, k}, so a finite scan is exhaustive.
    """
    out = []
    for k, l in product((0, 1), repeat=2):
        for a, b, c, d in product((0, l), (0, k), (0, l), (0, k)):
            ok = (a * b == 0 and b * b == k * b and c * d == 0 and a * a == l * a
                  and c * c == l * c and d * d == k * d and k == b + d and l == a + c
                  and k * (a - c) == a * d - b * c and l * (d - b) == a * d - b * c)
            if ok and (k, l, a, b, c, d) not in out:
                out.append((k, l, a, b, c, d))
    return out


def curled2_table(k, l, a, b, c, d) -> StructureTable:
    """Two-dimensional table with e^2 = ke, f^2 = lf, ef = ae + bf, fe = ce + df."""
    return StructureTable([[[k, 0], [a, b]], [[c, d], [0, l]]])


def computed_profile(label: Label, mode) -> InvariantProfile:
    return invariant_profile(canonical_table(label, mode))
