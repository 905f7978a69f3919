"""Small exact polynomial toolkit.

Multivariate polynomials are dicts ``{exponent tuple: coefficient}`` with
no zero coefficients stored.  Univariate polynomials are coefficient lists,
lowest degree first.
"""

from __future__ import annotations

import math

import mpmath

from .scalar import ONE, ZERO, Scalar, _mk, as_scalar


# -- multivariate ------------------------------------------------------------

def variables(n: int):
    """The coordinate functions x_0 .. x_{n-1} as polynomials."""
    out = []
    for i in range(n):
        exp = tuple(1 if j == i else 0 for j in range(n))
        out.append({exp: ONE})
    return out


def padd(p, q):
    out = dict(p)
    for k, c in q.items():
        v = out.get(k)
        v = c if v is None else v + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def pscale(p, c):
    if not c:
        return {}
    return {k: v * c for k, v in p.items()}


def psub(p, q):
    return padd(p, pscale(q, -ONE))


def pmul(p, q):
    out = {}
    for k1, c1 in p.items():
        for k2, c2 in q.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            v = out.get(k)
            v = c1 * c2 if v is None else v + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def pdet(m):
    """Determinant of a square matrix of polynomials (n <= 3)."""
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return psub(pmul(m[0][0], m[1][1]), pmul(m[0][1], m[1][0]))
    total = {}
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = pmul(m[0][j], pdet(minor))
        total = padd(total, term) if j % 2 == 0 else psub(total, term)
    return total


def peval(p, point):
    total = ZERO
    for k, c in p.items():
        t = c
        for x, e in zip(point, k):
            if e:
                t = t * x ** e
        total = total + t
    return total


# -- univariate --------------------------------------------------------------

def utrim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def udeg(p) -> int:
    return len(utrim(p)) - 1


def uderiv(p):
    return [c * k for k, c in enumerate(p)][1:]


def udivmod(p, q):
    p, q = utrim(p), utrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [ZERO] * max(len(p) - len(q) + 1, 1)
    rem = list(p)
    lead_inv = 1 / q[-1]
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        f = rem[-1] * lead_inv
        quot[shift] = f
        for i, c in enumerate(q):
            rem[shift + i] = rem[shift + i] - f * c
        rem = utrim(rem)
    return quot, rem


def umonic(p):
    p = utrim(p)
    inv = 1 / p[-1]
    return [c * inv for c in p]


def ugcd(p, q):
    """Monic gcd."""
    p, q = utrim(p), utrim(q)
    while q:
        _, r = udivmod(p, q)
        p, q = q, r
    return umonic(p) if p else []


def ueval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def cubic_discriminant(p) -> Scalar:
    """Discriminant of c3 X^3 + c2 X^2 + c1 X + c0 (lowest degree first)."""
    d, c, b, a = (as_scalar(x) for x in p)
    return (b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d
            + 18 * a * b * c * d)


def gaussian_rational_roots(p) -> list[Scalar]:
    """Distinct roots of ``p`` lying in Q(i), found exactly.

    Scaling by the common denominator makes the polynomial monic over the
    Gaussian integers, whose roots in Q(i) must be Gaussian integers.  High
    precision numerics locate candidates; each is checked exactly.
    """
    p = umonic(p)
    n = len(p) - 1
    den = 1
    for c in p:
        den = den * c._d // math.gcd(den, c._d)
    # Y = den * X turns p into a monic Z[i] polynomial
    scaled = [p[k] * den ** (n - k) for k in range(n + 1)]
    size = max(abs(c.to_complex()) for c in scaled) + 1
    dps = 30 + 2 * int(math.log10(size) + 1)
    roots = []
    with mpmath.workdps(dps):
        coeffs = [c.to_mp() for c in reversed(scaled)]
        try:
            approx = mpmath.polyroots(coeffs, maxsteps=200, extraprec=4 * dps)
        except mpmath.libmp.NoConvergence:
            approx = mpmath.polyroots(coeffs, maxsteps=2000, extraprec=10 * dps)
        for z in approx:
            cand = _mk(int(mpmath.nint(mpmath.re(z))), int(mpmath.nint(mpmath.im(z))), 1)
            if not ueval(scaled, cand) and cand not in roots:
                roots.append(cand)
    return [r / den for r in roots]
