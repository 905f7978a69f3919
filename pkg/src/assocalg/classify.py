"""Classification of associative algebras of dimension 1 to 3.

Every result is reached twice: once from the invariant profile alone and
once by building a basis in which the input takes its canonical form.  The
two labels must agree, and the basis becomes the witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from . import linalg
from .algebra import (Element, InvariantProfile, Shape, StructureTable, algebra_shape,
                      basis_vector, combine, element_shape, find_identity, find_straight_element,
                      find_unital_generator, invariant_profile, left_annihilator, multiply,
                      require_associative, right_annihilator, square_span, unitally_straight)
from .catalog import (Label, canonical_table, enumerate_curled2, expected_invariants,
                      fixed_labels)
from .errors import (AlgebraError, DegenerateForm, InternalContradiction, ProfileNotInCatalog,
                     UnsupportedTower)
from .poly import cubic_discriminant, gaussian_rational_roots, udeg, uderiv, udivmod, ugcd
from .scalar import ONE, ZERO, ExtScalar, FieldMode, Scalar, as_scalar
from .witness import Witness, verify_witness


class WitnessStatus(str, Enum):
    EXACT_VERIFIED = "ExactVerified"
    OMITTED_CUBIC_ROOT = "OmittedCubicRoot"
    OMITTED_UNSUPPORTED = "OmittedUnsupported"


@dataclass
class ClassifyResult:
    label: Label
    profile: InvariantProfile
    trace: list = field(default_factory=list)
    witness: Witness | None = None
    witness_status: WitnessStatus = WitnessStatus.EXACT_VERIFIED

    @property
    def k_squared(self):
        return self.label.k_squared

    def case_ids(self) -> list[str]:
        return [case for case, _ in self.trace]


class _Outcome:
    """What a constructive branch produced: a label and optionally a basis."""

    def __init__(self, label, basis=None, status=WitnessStatus.EXACT_VERIFIED):
        self.label = label if isinstance(label, Label) else Label(label)
        self.basis = basis
        self.status = status


# -- small vector helpers ----------------------------------------------------

def _scale(v, c) -> Element:
    return Element([c * x for x in v])


def _sub(u, v) -> Element:
    return Element([a - b for a, b in zip(u, v)])


def _add(u, v) -> Element:
    return Element([a + b for a, b in zip(u, v)])


def _coords(v, basis):
    c = linalg.coordinates(v, basis)
    if c is None:
        raise InternalContradiction("vector expected in a span it does not lie in")
    return c


def _ratio(v, base):
    """The scalar c with v = c * base."""
    return _coords(v, [base])[0]


def _is_curled(A, x) -> bool:
    return linalg.rank([x, multiply(A, x, x)]) < 2


def _sqrt(x, mode: FieldMode):
    x = as_scalar(x) if not isinstance(x, ExtScalar) else x
    if isinstance(x, ExtScalar):
        s = x.as_scalar()
        if s is None:
            raise UnsupportedTower("square root of an irrational radicand")
        x = s
    return ExtScalar.sqrt_of(x)


def _std(n):
    return [basis_vector(n, i) for i in range(n)]


# -- two-dimensional building blocks -----------------------------------------

_CURLED2_TARGETS = (
    ("A2_0", [[1, 0], [0, 1]]),
    ("A2_1", [[1, 0], [0, 1]]),
    ("A2_2", [[1, 0], [0, 1]]),
    ("A2_2", [[0, 1], [1, 0]]),
    ("A2_1", [[0, 1], [1, 0]]),
    ("A2_1", [[1, 1], [0, 1]]),
    ("A2_2", [[1, 1], [0, 1]]),
)


@lru_cache(maxsize=None)
def _curled2_solutions():
    return tuple(enumerate_curled2())


def _curled_plane(A, u, v, trace, prefix):
    """Canonical basis of the curled plane span{u, v}; returns (label name, basis)."""
    k = _ratio(multiply(A, u, u), u) if multiply(A, u, u) else ZERO
    l = _ratio(multiply(A, v, v), v) if multiply(A, v, v) else ZERO
    e = _scale(u, 1 / k) if k else u
    f = _scale(v, 1 / l) if l else v
    a, b = _coords(multiply(A, e, f), [e, f])
    c, d = _coords(multiply(A, f, e), [e, f])
    key = (int(bool(k)), int(bool(l)), a, b, c, d)
    sols = _curled2_solutions()
    idx = next((i for i, s in enumerate(sols) if s == key), None)
    if idx is None:
        raise InternalContradiction(f"curled plane with unexpected constants {key}")
    name, m = _CURLED2_TARGETS[idx]
    n2 = linalg.inverse([[as_scalar(x) for x in r] for r in m])
    basis = [combine(row, [e, f]) for row in n2]
    trace.append((f"{prefix}/curled-solution-{idx + 1}",
                  {"k": key[0], "l": key[1], "a": a, "b": b, "c": c, "d": d}))
    return name, basis


def _unital_plane(A, one, z, mode):
    """Normal form of the unital plane span{one, z}.

    Returns (kind, f, D) with D the discriminant of z: ``split`` when
    f^2 = one, ``minus`` (reals, D < 0) when f^2 = -one, ``nil`` when f^2 = 0.
    """
    beta, gamma = _coords(multiply(A, z, z), [z, one])
    D = beta * beta + 4 * gamma
    h = _sub(_scale(z, 2), _scale(one, beta))
    if not D:
        return "nil", h, D
    if mode is FieldMode.COMPLEX or D > 0:
        return "split", _scale(h, 1 / _sqrt(D, mode)), D
    return "minus", _scale(h, 1 / _sqrt(-D, mode)), D


@dataclass
class _Plane:
    """Two-dimensional straight subalgebra in normal form.

    kind a: u nilpotent, v^2 = u.  kind b: u idempotent, v nilpotent,
    uv = 0.  kinds c, r, d: u is the identity and v^2 = u, -u, 0.
    """

    kind: str
    u: Element
    v: Element
    scalars: dict


_PLANE_LABEL = {"a": "A2_3", "b": "A2_4", "c": "A2_5", "r": "A2_5m", "d": "A2_6"}


def _straight_plane(A, g, mode) -> _Plane:
    g2 = multiply(A, g, g)
    g3 = multiply(A, g2, g)
    c, b = _coords(g3, [g, g2])
    if not b and not c:
        return _Plane("a", g2, g, {"b": b, "c": c})
    if not c:
        f = _scale(g, 1 / b)
        e = multiply(A, f, f)
        return _Plane("b", e, _sub(f, e), {"b": b, "c": c})
    one = _scale(_sub(g2, _scale(g, b)), 1 / c)
    kind, f, D = _unital_plane(A, one, g, mode)
    return _Plane({"split": "c", "minus": "r", "nil": "d"}[kind], one, f, {"b": b, "c": c, "D": D})


def _plane_case_name(p: _Plane, mode) -> str:
    if p.kind == "a":
        return "b=c=0"
    if p.kind == "b":
        return "c=0"
    D = p.scalars["D"]
    if p.kind == "d":
        return "D=0"
    if mode is FieldMode.COMPLEX:
        return "D!=0"
    return "D>0" if p.kind == "c" else "D<0"


# -- invariant path ----------------------------------------------------------

@lru_cache(maxsize=None)
def _profile_index(mode: FieldMode, dim: int):
    return {expected_invariants(lab, mode): lab for lab in fixed_labels(mode, dim)}


def waved_parameter(A: StructureTable):
    """Complete invariant of the one-parameter family.

    Returns (sign of det Q in Real mode or None, k^2, normalized k).  The
    family is W3_3 unless the Real-mode sign is negative (W3_3m).
    """
    sq = square_span(A)
    if len(sq) != 1:
        raise DegenerateForm("the square of the algebra is not a line")
    e = sq[0]
    p = next(i for i, x in enumerate(e) if x)
    std = _std(A.dim)
    comp = next([u, w] for i, u in enumerate(std) for w in std[i + 1:]
                if linalg.rank([e, u, w]) == 3)
    Q = [[multiply(A, x, y)[p] / e[p] for y in comp] for x in comp]
    half = Scalar(1, 0) / 2
    S = [[(Q[i][j] + Q[j][i]) * half for j in range(2)] for i in range(2)]
    T = [[(Q[i][j] - Q[j][i]) * half for j in range(2)] for i in range(2)]
    det_q, det_s, det_t = linalg.det(Q), linalg.det(S), linalg.det(T)
    if det_q != det_s + det_t:
        raise InternalContradiction("det Q differs from det S + det T")
    if not det_q:
        raise DegenerateForm("the product form is degenerate")
    lam = det_t / det_q
    if A.mode is FieldMode.REAL:
        sign = 1 if det_q > 0 else -1
        k2 = 4 * lam if sign > 0 else -4 * lam
    else:
        sign = None
        k2 = 4 * lam
    return sign, k2, ExtScalar.sqrt_of(k2)


def _family_label_from_invariants(A) -> Label:
    sign, k2, _ = waved_parameter(A)
    return Label("W3_3m" if sign == -1 else "W3_3", k2)


def _waved_tree(p: InvariantProfile, A) -> Label:
    if p.alpha == 1 and (p.beta, p.gamma) == (2, 2):
        if not p.commutative:
            return Label("W3_2")
        return Label("W3_1") if p.square_of_square_zero else Label("W3_4")
    if p.alpha == 1 and (p.beta, p.gamma) == (1, 1):
        return _family_label_from_invariants(A)
    if p.alpha == 2 and p.beta in (1, 2):
        return Label("W3_5") if p.beta == 2 else Label("W3_6")
    if p.alpha == 3 and p.beta in (0, 1):
        if p.zeropotent_plane:
            return Label("W3_10") if p.beta == 1 else Label("W3_9")
        return Label("W3_7") if p.beta == 1 else Label("W3_8")
    raise ProfileNotInCatalog(f"no waved algebra has profile {p}")


def label_from_invariants(A: StructureTable) -> Label:
    """Label determined by invariants alone (no basis construction)."""
    p = invariant_profile(A)
    if A.dim == 3 and p.shape is Shape.WAVED and not p.unital:
        return _waved_tree(p, A)
    lab = _profile_index(A.mode, A.dim).get(p)
    if lab is None:
        raise ProfileNotInCatalog(f"no catalog entry has profile {p}")
    return lab


# -- constructive branches ---------------------------------------------------

def _dim1(A, trace):
    k = A.constants[0][0][0]
    if not k:
        trace.append(("dim1/zero", {"k": k}))
        return _Outcome("A1_0", [Element([ONE])])
    trace.append(("dim1/idempotent", {"k": k}))
    return _Outcome("A1_1", [Element([1 / k])])


def _dim2(A, trace):
    mode = A.mode
    if algebra_shape(A) is Shape.CURLED:
        name, basis = _curled_plane(A, *_std(2), trace, "dim2")
        return _Outcome(name, basis)
    g = find_straight_element(A)
    p = _straight_plane(A, g, mode)
    trace.append((f"dim2/straight/{_plane_case_name(p, mode)}", dict(p.scalars)))
    return _Outcome(_PLANE_LABEL[p.kind], [p.u, p.v])


def _poly_in(A, coeffs, h, one):
    """coeffs[0] one + coeffs[1] h + coeffs[2] h^2 + ..."""
    out = _scale(one, coeffs[0])
    pw = one
    for c in coeffs[1:]:
        pw = multiply(A, pw, h)
        out = _add(out, _scale(pw, c))
    return out


def _unital3(A, one, trace):
    mode = A.mode
    n = A.dim
    if not unitally_straight(A, one):
        if all(A.constants[i][j] == A.constants[j][i] for i in range(n) for j in range(n)):
            nil = []
            for x in _std(n):
                if linalg.rank([one] + nil + [x]) < len(nil) + 2:
                    continue
                p, q = _coords(multiply(A, x, x), [one, x])
                nil.append(_sub(x, _scale(one, q / 2)))
                if len(nil) == 2:
                    break
            trace.append(("unital3/not-straight/commutative", {}))
            return _Outcome("U3_0", [one] + nil)
        f0 = None
        for i in range(n):
            for j in range(n):
                c = _sub(A.product(i, j), A.product(j, i))
                if c:
                    f0 = c
                    break
            if f0 is not None:
                break
        y = next(x for x in _std(n) if linalg.rank([one, f0, x]) == 3)
        p, q = _coords(multiply(A, y, y), [one, y])
        y = _sub(y, _scale(one, q / 2))
        s = _ratio(multiply(A, y, y), one)
        g = _scale(y, 1 / _sqrt(s, mode))
        if multiply(A, g, f0) == f0:
            g = _scale(g, -1)
        trace.append(("unital3/not-straight/noncommutative", {"s": s}))
        return _Outcome("U3_1", [one, f0, g])

    h = find_unital_generator(A, one)
    h2 = multiply(A, h, h)
    c0, b, a = _coords(multiply(A, h2, h), [one, h, h2])
    P = [-c0, -b, -a, ONE]
    g = ugcd(P, uderiv(P))
    scal = {"a": a, "b": b, "c": c0}
    if udeg(g) == 2:
        r = a / 3
        f = _sub(h, _scale(one, r))
        trace.append(("unital3/iii-triple-root", scal))
        return _Outcome("U3_4", [one, f, multiply(A, f, f)])
    if udeg(g) == 1:
        beta = -g[0]
        alpha = a - 2 * beta
        t = _sub(h, _scale(one, beta))
        e = _scale(multiply(A, t, t), 1 / (alpha - beta) ** 2)
        fi = _sub(one, e)
        trace.append(("unital3/ii-double-root", dict(scal, alpha=alpha, beta=beta)))
        return _Outcome("U3_3", [e, fi, multiply(A, t, fi)])
    disc = cubic_discriminant(P)
    scal["disc"] = disc
    if mode is FieldMode.REAL and disc < 0:
        name, case = "U3_2m", "unital3/i2-complex-pair"
    else:
        name, case = "U3_2", "unital3/i1-simple-roots"
    trace.append((case, scal))
    roots = [r for r in gaussian_rational_roots(P) if mode is FieldMode.COMPLEX or r.is_real()]
    if not roots:
        return _Outcome(name, None, WitnessStatus.OMITTED_CUBIC_ROOT)
    r = roots[0]
    quad, _ = udivmod(P, [-r, ONE])
    qr = quad[0] + quad[1] * r + quad[2] * r * r
    e = _scale(_poly_in(A, quad, h, one), 1 / qr)
    one2 = _sub(one, e)
    z = multiply(A, h, one2)
    kind, f, D = _unital_plane(A, one2, z, mode)
    trace[-1][1]["root"] = r
    if kind == "split":
        half = Scalar(1, 0) / 2
        return _Outcome(name, [e, _scale(_add(one2, f), half), _scale(_sub(one2, f), half)])
    if kind == "minus":
        return _Outcome(name, [e, one2, f])
    raise InternalContradiction("squarefree cubic produced a nilpotent plane")


def _curled3(A, trace):
    p = invariant_profile(A)
    n = A.dim
    std = _std(n)
    key = (p.alpha, p.beta, p.gamma)
    trace.append((f"curled3/alpha={p.alpha}", {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma}))
    if p.alpha == 0:
        return _Outcome("C3_0", std)
    if p.alpha == 1:
        for i in range(n):
            for j in range(i + 1, n):
                xy = A.product(i, j)
                if xy:
                    return _Outcome("C3_1", [xy, std[i], std[j]])
        raise InternalContradiction("alpha = 1 curled algebra without a nonzero product")
    if p.alpha != 3 or key not in ((3, 1, 1), (3, 2, 0), (3, 0, 2)):
        raise ProfileNotInCatalog(f"no curled algebra has (alpha, beta, gamma) = {key}")
    x = next(v for v in std if multiply(A, v, v))
    idem = _scale(x, 1 / _ratio(multiply(A, x, x), x))
    if key == (3, 1, 1):
        return _Outcome("C3_2", [left_annihilator(A)[0], idem, right_annihilator(A)[0]])
    if key == (3, 2, 0):
        return _Outcome("C3_3", left_annihilator(A) + [idem])
    return _Outcome("C3_4", right_annihilator(A) + [idem])


def _straight3(A, trace):
    mode = A.mode
    h = find_straight_element(A)
    h2 = multiply(A, h, h)
    h3 = multiply(A, h2, h)
    h4 = multiply(A, h3, h)
    c, b, a = _coords(h4, [h, h2, h3])
    scal = {"a": a, "b": b, "c": c}
    if c:
        raise InternalContradiction("straight non-unital algebra with c != 0")
    if not a and not b:
        trace.append(("straight3/a=b=0", scal))
        return _Outcome("S3_1", [h, h2, h3])
    if not b:
        trace.append(("straight3/b=0", scal))
        u = _scale(h, 1 / a)
        u2 = multiply(A, u, u)
        e = multiply(A, u2, u)
        return _Outcome("S3_2", [e, _sub(u, e), _sub(u2, e)])
    D = a * a + 4 * b
    scal["D"] = D
    g = _sub(_sub(h3, _scale(h2, a)), _scale(h, b))
    e = _scale(_sub(_scale(h2, a * a + b), _scale(h3, a)), 1 / (b * b))
    z = next(w for w in (h2, h3) if linalg.rank([e, w]) == 2)
    kind, f, _ = _unital_plane(A, e, z, mode)
    if not D:
        name, case = "S3_4", "straight3/D=0"
    elif mode is FieldMode.COMPLEX:
        name, case = "S3_3", "straight3/D!=0"
    elif D > 0:
        name, case = "S3_3", "straight3/D>0"
    else:
        name, case = "S3_3m", "straight3/D<0"
    expected = {"S3_4": "nil", "S3_3": "split", "S3_3m": "minus"}[name]
    if kind != expected:
        raise InternalContradiction(f"{name} branch produced a {kind} plane")
    trace.append((case, scal))
    return _Outcome(name, [e, f, g])


_KIND_ORDER = {"r": -1, "a": 0, "b": 1, "c": 2, "d": 3}


def _waved3_path(A, trace):
    """Two straight planes through non-curled elements and their intersection."""
    mode = A.mode
    n = A.dim
    f0 = find_straight_element(A, Shape.WAVED)
    f02 = multiply(A, f0, f0)
    g0 = next(x for x in _std(n) if linalg.rank([f0, f02, x]) == 3)
    g = g0
    if _is_curled(A, g0):
        s = _add(multiply(A, f0, g0), multiply(A, g0, f0))
        _, bb, _ = _coords(s, [f0, f02, g0])
        l = 0
        while True:
            l += 1
            if l == -bb:
                continue
            g = _add(_scale(f0, l), g0)
            if not _is_curled(A, g):
                break
            if l > 3:
                raise InternalContradiction("no non-curled completion found")
        trace.append(("waved/completion", {"l": l, "b": bb}))
    P1 = _straight_plane(A, f0, mode)
    P2 = _straight_plane(A, g, mode)
    if _KIND_ORDER[P2.kind] < _KIND_ORDER[P1.kind]:
        P1, P2 = P2, P1
    trace.append(("waved/first-plane:" + P1.kind, dict(P1.scalars)))
    trace.append(("waved/second-plane:" + P2.kind, dict(P2.scalars)))
    cols = [P1.u, P1.v, P2.u, P2.v]
    ns = linalg.nullspace([[c[i] for c in cols] for i in range(n)], 4)
    if len(ns) != 1:
        raise InternalContradiction("the two planes do not meet in a line")
    w = ns[0]
    v = combine(w[:2], [P1.u, P1.v])
    vv = multiply(A, v, v)
    idem = None if not vv else _scale(v, 1 / _ratio(vv, v))
    case = P1.kind + P2.kind

    def contradiction(tag):
        trace.append((f"waved/{tag}", {}))
        raise InternalContradiction(f"case {tag} cannot occur in a waved non-unital algebra")

    if case == "aa":
        e, f, e2, gg = P1.u, P1.v, P2.u, P2.v
        ell = _ratio(e2, e)
        a = _ratio(multiply(A, f, gg), e) if multiply(A, f, gg) else ZERO
        a2 = _ratio(multiply(A, gg, f), e) if multiply(A, gg, f) else ZERO
        g1 = _sub(_scale(f, a), gg)
        scal = {"a": a, "a'": a2, "l": ell}
        if a * a2 == ell:
            if a == a2:
                trace.append(("waved/aa1", scal))
                return _Outcome("W3_1", [e, g1, f])
            g1 = _scale(g1, 1 / (a - a2))
            trace.append(("waved/aa2", scal))
            return _Outcome("W3_2", [e, _sub(f, g1), g1])
        d = ell - a * a2
        if mode is FieldMode.COMPLEX or d > 0:
            fam, tag, s = "W3_3", "aa3", _sqrt(d, mode)
        else:
            fam, tag, s = "W3_3m", "aa4", _sqrt(-d, mode)
        g2 = _scale(g1, 1 / s)
        k = (a - a2) / s
        k2 = k * k
        k2 = k2.as_scalar() if isinstance(k2, ExtScalar) else k2
        if k != ExtScalar.sqrt_of(k2):
            g2, k = _scale(g2, -1), -k
        scal["k^2"] = k2
        trace.append((f"waved/{tag}", scal))
        return _Outcome(Label(fam, k2), [e, f, g2])
    if case == "bb":
        e, f, e2 = P1.u, P1.v, P2.u
        if idem is not None:
            trace.append(("waved/bb1", {}))
            return _Outcome("W3_4", [e, f, P2.v])
        trace.append(("waved/bb2", {}))
        name, (b1, b2) = _curled_plane(A, e, e2, trace, "waved/bb2")
        target = {"A2_1": "W3_5", "A2_2": "W3_6"}.get(name)
        if target is None:
            contradiction("bb2-" + name)
        return _Outcome(target, [f, b1, b2])
    if case in ("bc", "cc"):
        if idem is None:
            contradiction(case + "-nilpotent-meet")
        ones = [P.u for P in (P1, P2) if P.kind == "c"]
        if any(idem == o for o in ones):
            contradiction("bc1" if case == "bc" else "cc1-cc2")
        tag = "bc2" if case == "bc" else "cc3"
        trace.append((f"waved/{tag}", {}))
        first = P1.v if case == "bc" else _sub(P1.u, idem)
        second = _sub(P2.u, idem)
        name, (b1, b2) = _curled_plane(A, first, second, trace, f"waved/{tag}")
        target = {"A2_1": "W3_7", "A2_2": "W3_8"}.get(name)
        if target is None:
            contradiction(f"{tag}-{name}")
        return _Outcome(target, [idem, b1, b2])
    if case == "dd":
        if idem is not None:
            contradiction("dd1")
        nil, f, gg = P1.v, P1.u, P2.u
        fg, gf = multiply(A, f, gg), multiply(A, gg, f)
        if fg == f and gf == gg:
            name = "W3_9"
        elif fg == gg and gf == f:
            name = "W3_10"
        else:
            contradiction("dd2-unital")
        trace.append(("waved/dd2", {}))
        return _Outcome(name, [nil, f, _sub(gg, f)])
    contradiction(case)


# -- assembly ----------------------------------------------------------------

def _finish(A: StructureTable, out: _Outcome, trace) -> ClassifyResult:
    profile = invariant_profile(A)
    inv = label_from_invariants(A)
    if inv != out.label:
        raise InternalContradiction(
            f"invariants give {inv} but the constructive path gives {out.label}")
    if expected_invariants(out.label, A.mode) != profile:
        raise InternalContradiction(f"profile of the input does not match {out.label}")
    target = canonical_table(out.label, A.mode)
    if A == target:
        trace.append(("canonical-input", {}))
        return ClassifyResult(out.label, profile, trace, Witness(linalg.identity(A.dim)),
                              WitnessStatus.EXACT_VERIFIED)
    if out.basis is None:
        return ClassifyResult(out.label, profile, trace, None, out.status)
    try:
        M = linalg.inverse([list(b) for b in out.basis])
        ok = verify_witness(A, target, M)
    except UnsupportedTower:
        return ClassifyResult(out.label, profile, trace, None, WitnessStatus.OMITTED_UNSUPPORTED)
    if not ok:
        raise InternalContradiction(f"constructed basis does not realize {out.label}")
    return ClassifyResult(out.label, profile, trace, Witness(M), WitnessStatus.EXACT_VERIFIED)


def _require_rational(A: StructureTable) -> None:
    if not A.is_rational:
        raise AlgebraError("classification needs Gaussian rational structure constants")


def _run(A: StructureTable, branch, *args) -> ClassifyResult:
    _require_rational(A)
    require_associative(A)
    trace = []
    try:
        out = branch(A, *args, trace)
    except UnsupportedTower:
        out = _Outcome(label_from_invariants(A), None, WitnessStatus.OMITTED_UNSUPPORTED)
    return _finish(A, out, trace)


def classify_dim1(A: StructureTable) -> ClassifyResult:
    return _run(A, _dim1)


def classify_dim2(A: StructureTable) -> ClassifyResult:
    return _run(A, _dim2)


def classify_unital3(A: StructureTable) -> ClassifyResult:
    one = find_identity(A)
    if one is None:
        raise AlgebraError("algebra has no identity")
    return _run(A, _unital3, one)


def classify_curled3(A: StructureTable) -> ClassifyResult:
    return _run(A, _curled3)


def classify_straight3(A: StructureTable) -> ClassifyResult:
    return _run(A, _straight3)


def classify_waved3(A: StructureTable) -> ClassifyResult:
    return _run(A, _waved3_path)


def classify(A: StructureTable) -> ClassifyResult:
    _require_rational(A)
    require_associative(A)
    if A.dim == 1:
        return classify_dim1(A)
    if A.dim == 2:
        return classify_dim2(A)
    if A.dim != 3:
        raise AlgebraError(f"classification covers dimensions 1 to 3, not {A.dim}")
    if find_identity(A) is not None:
        return classify_unital3(A)
    shape = algebra_shape(A)
    if shape is Shape.CURLED:
        return classify_curled3(A)
    if shape is Shape.STRAIGHT:
        return classify_straight3(A)
    return classify_waved3(A)
