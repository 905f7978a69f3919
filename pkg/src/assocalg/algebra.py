"""Structure-constant tables and their isomorphism invariants.

A table of dimension n stores ``constants[i][j][s]``, the coefficient of
e_s in the product e_i e_j.  Elements are coordinate vectors over the same
basis.  Entries are :class:`Scalar` values, or :class:`ExtScalar` when a
table was produced by a change of basis involving square roots.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from itertools import product

from . import linalg
from .errors import (AlgebraError, DimensionMismatch, ModeMismatch, NonAssociative,
                     RealModeTableWithComplexEntries)
from .poly import (cubic_discriminant, padd, pdet, pmul, pscale, psub, udeg, uderiv,
                   udivmod, ugcd, utrim, variables)
from .scalar import ONE, ZERO, ExtScalar, FieldMode, Scalar, as_scalar, is_real_value, simplify

GRID = range(8)


class Shape(str, Enum):
    CURLED = "curled"
    WAVED = "waved"
    STRAIGHT = "straight"


class Element(tuple):
    """Coordinate vector of an algebra element."""

    def __new__(cls, coords):
        return super().__new__(cls, (simplify(c) if isinstance(c, ExtScalar) else as_scalar(c)
                                     for c in coords))

    def __repr__(self):
        return "Element(" + ", ".join(str(c) for c in self) + ")"

    def __bool__(self):
        return any(self)


def _entry(c):
    if isinstance(c, ExtScalar):
        return simplify(c)
    return as_scalar(c)


class StructureTable:
    """Immutable multiplication table.

    >>> t = StructureTable([[[1]]])
    >>> t.dim, t.mode.value
    (1, 'complex')
    """

    __slots__ = ("dim", "mode", "constants", "_cache")

    def __init__(self, constants, mode: FieldMode | str = FieldMode.COMPLEX):
        mode = FieldMode(mode)
        n = len(constants)
        if n == 0:
            raise DimensionMismatch("empty table")
        rows = []
        for i, row in enumerate(constants):
            if len(row) != n:
                raise DimensionMismatch(f"row {i} has {len(row)} columns, expected {n}")
            cells = []
            for j, vec in enumerate(row):
                if len(vec) != n:
                    raise DimensionMismatch(f"product e{i}e{j} has {len(vec)} coordinates, expected {n}")
                cells.append(tuple(_entry(c) for c in vec))
            rows.append(tuple(cells))
        if mode is FieldMode.REAL:
            for i, j, s in product(range(n), repeat=3):
                if not is_real_value(rows[i][j][s]):
                    raise RealModeTableWithComplexEntries(
                        f"entry ({i},{j},{s}) = {rows[i][j][s]} is not real")
        self.dim = n
        self.mode = mode
        self.constants = tuple(rows)
        self._cache = {}

    @classmethod
    def zero(cls, dim: int, mode: FieldMode | str = FieldMode.COMPLEX) -> "StructureTable":
        return cls([[[0] * dim for _ in range(dim)] for _ in range(dim)], mode)

    @classmethod
    def from_products(cls, dim: int, products: dict, mode=FieldMode.COMPLEX) -> "StructureTable":
        """Build from ``{(i, j): coordinate vector}``; missing products are zero."""
        rows = [[list(products.get((i, j), [0] * dim)) for j in range(dim)] for i in range(dim)]
        return cls(rows, mode)

    def with_mode(self, mode) -> "StructureTable":
        return StructureTable(self.constants, mode)

    def product(self, i: int, j: int) -> Element:
        return Element(self.constants[i][j])

    @property
    def is_rational(self) -> bool:
        """True when no entry involves a square root."""
        return all(isinstance(c, Scalar) for row in self.constants for v in row for c in v)

    def __eq__(self, other):
        if not isinstance(other, StructureTable):
            return NotImplemented
        return (self.dim == other.dim and self.mode == other.mode
                and all(a == b for r1, r2 in zip(self.constants, other.constants)
                        for v1, v2 in zip(r1, r2) for a, b in zip(v1, v2)))

    def __hash__(self):
        return hash((self.dim, self.mode, tuple(str(c) for r in self.constants for v in r for c in v)))

    def __repr__(self):
        body = "; ".join(
            " ".join("(" + ",".join(str(c) for c in v) + ")" for v in row) for row in self.constants)
        return f"StructureTable<{self.dim}, {self.mode.value}>[{body}]"


def _conform(A: StructureTable, x) -> Element:
    if len(x) != A.dim:
        raise DimensionMismatch(f"element of length {len(x)} in a {A.dim}-dimensional algebra")
    return x if isinstance(x, Element) else Element(x)


def multiply(A: StructureTable, x, y) -> Element:
    x, y = _conform(A, x), _conform(A, y)
    n = A.dim
    out = [ZERO] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            f = x[i] * y[j]
            vec = A.constants[i][j]
            for s in range(n):
                if vec[s]:
                    out[s] = out[s] + f * vec[s]
    return Element(out)


def basis_vector(n: int, i: int) -> Element:
    return Element([ONE if k == i else ZERO for k in range(n)])


def power(A: StructureTable, x, k: int) -> Element:
    if k < 1:
        raise ValueError("powers start at 1")
    out = _conform(A, x)
    for _ in range(k - 1):
        out = multiply(A, out, x)
    return out


def combine(coeffs, vectors) -> Element:
    """Linear combination sum c_i v_i."""
    n = len(vectors[0])
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for s in range(n):
                if v[s]:
                    out[s] = out[s] + c * v[s]
    return Element(out)


def check_associativity(A: StructureTable) -> list[tuple[int, int, int]]:
    """Basis triples (i, j, k) where (e_i e_j) e_k differs from e_i (e_j e_k)."""
    n = A.dim
    basis = [basis_vector(n, i) for i in range(n)]
    bad = []
    for i, j, k in product(range(n), repeat=3):
        left = multiply(A, A.product(i, j), basis[k])
        right = multiply(A, basis[i], A.product(j, k))
        if left != right:
            bad.append((i, j, k))
    return bad


def require_associative(A: StructureTable) -> None:
    if "assoc" not in A._cache:
        A._cache["assoc"] = check_associativity(A)
    bad = A._cache["assoc"]
    if bad:
        raise NonAssociative(bad)


# -- subspaces ---------------------------------------------------------------

def square_span(A: StructureTable) -> list[Element]:
    """Basis of A^2 (echelon form)."""
    vecs = [A.product(i, j) for i in range(A.dim) for j in range(A.dim)]
    red, _ = linalg.row_reduce(vecs)
    return [Element(r) for r in red]


def left_annihilator(A: StructureTable) -> list[Element]:
    """Basis of {x : xA = 0}."""
    n = A.dim
    eqs = [[A.constants[i][j][s] for i in range(n)] for j in range(n) for s in range(n)]
    return [Element(v) for v in linalg.nullspace(eqs, n)]


def right_annihilator(A: StructureTable) -> list[Element]:
    """Basis of {x : Ax = 0}."""
    n = A.dim
    eqs = [[A.constants[i][j][s] for j in range(n)] for i in range(n) for s in range(n)]
    return [Element(v) for v in linalg.nullspace(eqs, n)]


def find_identity(A: StructureTable) -> Element | None:
    n = A.dim
    rows, rhs = [], []
    for i in range(n):
        for s in range(n):
            rows.append([A.constants[k][i][s] for k in range(n)])
            rhs.append(ONE if i == s else ZERO)
            rows.append([A.constants[i][k][s] for k in range(n)])
            rhs.append(ONE if i == s else ZERO)
    x = linalg.solve(rows, rhs)
    return None if x is None else Element(x)


def is_commutative(A: StructureTable) -> bool:
    n = A.dim
    return all(A.constants[i][j] == A.constants[j][i] for i in range(n) for j in range(i + 1, n))


def is_zeropotent(A: StructureTable) -> bool:
    """x^2 = 0 for every x, i.e. the table is alternating."""
    n = A.dim
    for i in range(n):
        if any(A.constants[i][i]):
            return False
        for j in range(i + 1, n):
            if any(a + b for a, b in zip(A.constants[i][j], A.constants[j][i])):
                return False
    return True


def square_of_square_zero(A: StructureTable) -> bool:
    """(A^2)^2 = 0."""
    sq = square_span(A)
    return all(not multiply(A, u, v) for u in sq for v in sq)


# -- shapes ------------------------------------------------------------------

def _symbolic_powers(A: StructureTable, upto: int):
    """Coordinates of x, x^2, ..., x^upto as polynomials in x's coordinates."""
    n = A.dim
    xs = variables(n)
    pw = [xs]
    for _ in range(upto - 1):
        prev = pw[-1]
        nxt = [{} for _ in range(n)]
        for t in range(n):
            if not prev[t]:
                continue
            for j in range(n):
                vec = A.constants[t][j]
                prod_tj = None
                for s in range(n):
                    if vec[s]:
                        if prod_tj is None:
                            prod_tj = pmul(prev[t], xs[j])
                        nxt[s] = padd(nxt[s], pscale(prod_tj, vec[s]))
        pw.append(nxt)
    return pw


def _curled_identically(A: StructureTable, pw) -> bool:
    n = A.dim
    x, x2 = pw[0], pw[1]
    for a in range(n):
        for b in range(a + 1, n):
            if psub(pmul(x[a], x2[b]), pmul(x[b], x2[a])):
                return False
    return True


def algebra_shape(A: StructureTable) -> Shape:
    """Exact shape decision by polynomial identity testing."""
    if "shape" in A._cache:
        return A._cache["shape"]
    n = A.dim
    pw = _symbolic_powers(A, max(n, 2))
    if _curled_identically(A, pw):
        shape = Shape.CURLED
    elif pdet(pw[:n]):
        shape = Shape.STRAIGHT
    else:
        shape = Shape.WAVED
    A._cache["shape"] = shape
    return shape


def element_shape(A: StructureTable, x) -> Shape:
    """Shape of a single nonzero element.

    Straight means the first ``dim`` powers form a basis.
    """
    x = _conform(A, x)
    if not x:
        raise AlgebraError("the zero element has no shape")
    n = A.dim
    pw = [x]
    for _ in range(max(n, 2) - 1):
        pw.append(multiply(A, pw[-1], x))
    if linalg.rank(pw[:2]) < 2:
        return Shape.CURLED
    if linalg.rank(pw[:n]) == n:
        return Shape.STRAIGHT
    return Shape.WAVED


def _grid(n: int):
    for v in product(GRID, repeat=n):
        if any(v):
            yield Element(v)


def find_straight_element(A: StructureTable, shape: Shape = Shape.STRAIGHT) -> Element | None:
    """First grid point (entries 0..7, lexicographic) of the requested kind.

    ``Shape.STRAIGHT`` asks for x whose first ``dim`` powers are a basis,
    ``Shape.WAVED`` for any x that is not curled.
    """
    shape = Shape(shape)
    key = ("grid", shape)
    if key in A._cache:
        return A._cache[key]
    target = algebra_shape(A)
    found = None
    if shape is Shape.STRAIGHT and target is Shape.STRAIGHT:
        found = next((x for x in _grid(A.dim) if element_shape(A, x) is Shape.STRAIGHT), None)
    elif shape is Shape.WAVED and target is not Shape.CURLED:
        found = next((x for x in _grid(A.dim) if element_shape(A, x) is not Shape.CURLED), None)
    A._cache[key] = found
    return found


def unitally_straight(A: StructureTable, one) -> bool:
    """det(1, x, x^2) is not identically zero."""
    n = A.dim
    pw = _symbolic_powers(A, 2)
    ones = [({(0,) * n: c} if c else {}) for c in one]
    return bool(pdet([ones] + pw[:n - 1]))


def find_unital_generator(A: StructureTable, one) -> Element | None:
    """First grid point h with 1, h, ..., h^(dim-1) a basis."""
    n = A.dim
    for x in _grid(n):
        pw = [Element(one), x]
        while len(pw) < n:
            pw.append(multiply(A, pw[-1], x))
        if linalg.rank(pw) == n:
            return x
    return None


# -- zeropotent planes -------------------------------------------------------

def _square_forms(A: StructureTable):
    """Symmetric Gram matrices of the coordinate quadratic forms of x^2."""
    n = A.dim
    half = Scalar(1, 0) / 2
    forms = []
    for s in range(n):
        forms.append([[(A.constants[i][j][s] + A.constants[j][i][s]) * half for j in range(n)]
                      for i in range(n)])
    return forms


def _bilinear(S, x, y):
    acc = ZERO
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj and S[i][j]:
                acc = acc + xi * S[i][j] * yj
    return acc


def _isotropic_planes(S, mode: FieldMode):
    """Planes (pairs of spanning vectors) on which a rank 1 or 2 form vanishes."""
    n = len(S)
    r = linalg.rank(S)
    ker = linalg.nullspace(S, n)
    if r == 1:
        return [tuple(ker)]
    w = ker[0]
    std = [basis_vector(n, i) for i in range(n)]
    u, v = next((p, q) for p, q in product(std, std)
                if linalg.rank([p, q, w]) == 3)
    a, b, c = _bilinear(S, u, u), _bilinear(S, u, v), _bilinear(S, v, v)
    if not a:
        dirs = [list(u), [c * ui - 2 * b * vi for ui, vi in zip(u, v)]]
        return [(d, w) for d in dirs]
    disc = b * b - a * c
    if mode is FieldMode.REAL and disc < 0:
        return []
    root = ExtScalar.sqrt_of(disc)
    planes = []
    for sgn in (1, -1):
        s = -b + root * sgn
        planes.append(([s * ui + a * vi for ui, vi in zip(u, v)], w))
    return planes


def zeropotent_plane(A: StructureTable) -> bool:
    """Whether the zeropotent elements contain a 2-dimensional subspace."""
    forms = _square_forms(A)
    nonzero = [S for S in forms if any(c for row in S for c in row)]
    if not nonzero:
        return A.dim >= 2
    if A.dim < 2:
        return False
    if any(linalg.rank(S) == A.dim for S in nonzero):
        return False
    if A.dim == 2:
        # a form on K^2 vanishing on the whole plane is zero
        return False
    for p, q in _isotropic_planes(nonzero[0], A.mode):
        if all(not _bilinear(S, p, p) and not _bilinear(S, q, q) and not _bilinear(S, p, q)
               for S in nonzero):
            return True
    return False


# -- power pattern -----------------------------------------------------------

def generator_relation(A: StructureTable, h) -> list:
    """c with h^(n+1) = sum_k c[k-1] h^k for a straight h."""
    n = A.dim
    pw = [Element(h)]
    for _ in range(n):
        pw.append(multiply(A, pw[-1], h))
    coords = linalg.coordinates(pw[n], pw[:n])
    if coords is None:
        raise AlgebraError("element is not straight")
    return coords


def _multiplicities(r):
    """Root multiplicities of a polynomial of degree <= 3, descending."""
    d = udeg(r)
    if d <= 0:
        return []
    g = ugcd(r, uderiv(r))
    dg = udeg(g)
    if dg <= 0:
        return [1] * d
    if dg == d - 1:
        return [d]
    return [2, 1]


def _has_nonreal_roots(r) -> bool:
    g = ugcd(r, uderiv(r))
    sq = udivmod(r, g)[0] if udeg(g) > 0 else utrim(r)
    d = udeg(sq)
    if d == 2:
        c0, c1, c2 = sq
        return c1 * c1 - 4 * c0 * c2 < 0
    if d == 3:
        return cubic_discriminant(sq) < 0
    return False


def power_pattern(A: StructureTable) -> str:
    """Root multiplicity pattern of a straight generator's power relation.

    For straight h the relation h^(n+1) = sum c_k h^k gives the polynomial
    q(X) = X^(n+1) - sum c_k X^k.  The pattern records the multiplicity of
    the root 0, the remaining multiplicities, and (Real mode) whether a
    complex conjugate pair occurs.  Non-straight algebras give ``"-"``.
    """
    if algebra_shape(A) is not Shape.STRAIGHT:
        return "-"
    h = find_straight_element(A)
    c = generator_relation(A, h)
    q = [ZERO] + [-x for x in c] + [ONE]
    z = next(k for k, x in enumerate(q) if x)
    r = q[z:]
    text = f"0^{z}|" + ",".join(str(m) for m in _multiplicities(r))
    if A.mode is FieldMode.REAL and _has_nonreal_roots(r):
        text += " complex-pair"
    return text


# -- profile -----------------------------------------------------------------

@dataclass(frozen=True)
class InvariantProfile:
    alpha: int
    beta: int
    gamma: int
    commutative: bool
    unital: bool
    shape: Shape
    zeropotent: bool
    square_of_square_zero: bool
    zeropotent_plane: bool
    power_pattern: str = "-"

    FIELDS = ("alpha", "beta", "gamma", "commutative", "unital", "shape", "zeropotent",
              "square_of_square_zero", "zeropotent_plane", "power_pattern")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    def first_difference(self, other: "InvariantProfile") -> str | None:
        for name in self.FIELDS:
            if getattr(self, name) != getattr(other, name):
                return name
        return None

    def as_dict(self) -> dict:
        d = {name: getattr(self, name) for name in self.FIELDS}
        d["shape"] = self.shape.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantProfile":
        d = dict(d)
        d["shape"] = Shape(d["shape"])
        return cls(**{k: d[k] for k in cls.FIELDS if k in d})

    def evolve(self, **changes) -> "InvariantProfile":
        return replace(self, **changes)


def invariant_profile(A: StructureTable) -> InvariantProfile:
    if "profile" in A._cache:
        return A._cache["profile"]
    require_associative(A)
    n = A.dim
    prof = InvariantProfile(
        alpha=len(square_span(A)),
        beta=len(left_annihilator(A)),
        gamma=len(right_annihilator(A)),
        commutative=is_commutative(A),
        unital=find_identity(A) is not None,
        shape=algebra_shape(A),
        zeropotent=is_zeropotent(A),
        square_of_square_zero=square_of_square_zero(A),
        zeropotent_plane=zeropotent_plane(A),
        power_pattern=power_pattern(A),
    )
    assert 0 <= prof.alpha <= n
    A._cache["profile"] = prof
    return prof


# -- constructions -----------------------------------------------------------

def change_basis(A: StructureTable, M) -> StructureTable:
    """The table B for which M is a witness from A to B.

    Row s of M holds the B-coordinates of the image of e_s, so the new basis
    vectors are the rows of M^-1 written in A-coordinates.
    """
    n = A.dim
    if len(M) != n or any(len(r) != n for r in M):
        raise DimensionMismatch(f"{len(M)}x{len(M[0]) if M else 0} matrix for a {n}-dimensional algebra")
    N = linalg.inverse(M)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(linalg.vecmat(multiply(A, N[i], N[j]), M))
        rows.append(row)
    return StructureTable(rows, A.mode)


def table_in_basis(A: StructureTable, basis) -> StructureTable:
    """Table of A rewritten on the given basis (vectors in A-coordinates)."""
    return change_basis(A, linalg.inverse([list(b) for b in basis]))


def direct_sum(A: StructureTable, B: StructureTable) -> StructureTable:
    if A.mode != B.mode:
        raise ModeMismatch(f"{A.mode.value} and {B.mode.value} tables cannot be summed")
    n, m = A.dim, B.dim
    N = n + m
    rows = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i, j in product(range(n), repeat=2):
        rows[i][j][:n] = A.constants[i][j]
    for i, j in product(range(m), repeat=2):
        rows[n + i][n + j][n:] = B.constants[i][j]
    return StructureTable(rows, A.mode)
