"""Exact scalars.

Three layers:

* ``Fraction`` (stdlib) is the rational type.
* :class:`Scalar` is a Gaussian rational ``(a + b i) / d`` kept as three
  reduced Python ints, which is several times faster than a pair of
  ``Fraction`` objects in the inner loops of the classifier.
* :class:`ExtScalar` adjoins at most two independent square roots to the
  Gaussian rationals.  Every ``sqrt(r)`` denotes the principal branch, so
  numeric evaluation and the half-plane normalisation of family
  parameters agree with the exact representation.
"""

from __future__ import annotations

import math
import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import NegativeRadicand, ParseError, UnsupportedTower


class FieldMode(str, Enum):
    REAL = "real"
    COMPLEX = "complex"


def rat_normalize(num: int, den: int) -> Fraction:
    """Reduced rational ``num/den`` with positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def _mk(a: int, b: int, d: int) -> "Scalar":
    if d < 0:
        a, b, d = -a, -b, -d
    if a == 0 and b == 0:
        d = 1
    elif d != 1:
        g = math.gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
    s = object.__new__(Scalar)
    s._a = a
    s._b = b
    s._d = d
    return s


def _coerce(x):
    t = type(x)
    if t is Scalar:
        return x
    if t is int or t is bool:
        return _mk(int(x), 0, 1)
    if t is Fraction:
        return _mk(x.numerator, 0, x.denominator)
    return NotImplemented


class Scalar:
    """Exact Gaussian rational.  Immutable and hashable."""

    __slots__ = ("_a", "_b", "_d")

    def __new__(cls, re=0, im=0):
        if isinstance(re, Scalar) and im == 0:
            return re
        if isinstance(re, str):
            if im != 0:
                raise TypeError("string scalars carry their own imaginary part")
            return parse_scalar(re)
        r = Fraction(re)
        i = Fraction(im)
        d = r.denominator * i.denominator // math.gcd(r.denominator, i.denominator)
        return _mk(r.numerator * (d // r.denominator), i.numerator * (d // i.denominator), d)

    # -- accessors ---------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "Scalar":
        return _mk(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def sign(self) -> int:
        if self._b:
            raise TypeError(f"sign of non-real scalar {self}")
        return (self._a > 0) - (self._a < 0)

    def in_half_plane(self) -> bool:
        """Membership in {x+yi : x > 0, or x = 0 and y >= 0}."""
        return self._a > 0 or (self._a == 0 and self._b >= 0)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, o):
        if type(o) is not Scalar:
            o = _coerce(o)
            if o is NotImplemented:
                return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return _mk(self._a + o._a, self._b + o._b, d1)
        return _mk(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return _mk(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, o):
        if type(o) is not Scalar:
            o = _coerce(o)
            if o is NotImplemented:
                return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return _mk(self._a - o._a, self._b - o._b, d1)
        return _mk(self._a * d2 - o._a * d1, self._b * d2 - o._b * d1, d1 * d2)

    def __rsub__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, o):
        if type(o) is not Scalar:
            o = _coerce(o)
            if o is NotImplemented:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        if b1 == 0 and b2 == 0:
            return _mk(a1 * a2, 0, self._d * o._d)
        return _mk(a1 * a2 - b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b, d = self._a, self._b, self._d
        if a == 0 and b == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return _mk(d * a, -d * b, a * a + b * b)

    def __truediv__(self, o):
        if type(o) is not Scalar:
            o = _coerce(o)
            if o is NotImplemented:
                return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = _coerce(o)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison --------------------------------------------------------
    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __eq__(self, o):
        if type(o) is Scalar:
            return self._a == o._a and self._b == o._b and self._d == o._d
        if isinstance(o, (int, Fraction)):
            o = Fraction(o)
            return self._b == 0 and self._a * o.denominator == o.numerator * self._d
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def _real_cmp(self, o) -> int:
        o = _coerce(o)
        if o is NotImplemented or self._b or o._b:
            raise TypeError("ordering is only defined for real scalars")
        lhs, rhs = self._a * o._d, o._a * self._d
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, o):
        return self._real_cmp(o) < 0

    def __le__(self, o):
        return self._real_cmp(o) <= 0

    def __gt__(self, o):
        return self._real_cmp(o) > 0

    def __ge__(self, o):
        return self._real_cmp(o) >= 0

    def to_complex(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    def to_mp(self):
        return mpmath.mpc(mpmath.mpf(self._a) / self._d, mpmath.mpf(self._b) / self._d)

    def __repr__(self):
        return f"Scalar('{format_scalar(self)}')"

    def __str__(self):
        return format_scalar(self)


ZERO = _mk(0, 0, 1)
ONE = _mk(1, 0, 1)
I = _mk(0, 1, 1)


def as_scalar(x) -> Scalar:
    s = _coerce(x)
    if s is NotImplemented:
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {x!r} to Scalar")
    return s


# -- text format -------------------------------------------------------------

_RAT = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _parse_rational(text: str, whole: str) -> Fraction:
    if not _RAT.match(text):
        raise ParseError(f"malformed scalar {whole!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in scalar {whole!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_scalar(text: str) -> Scalar:
    """Parse ``p``, ``p/q``, ``p/q+r/s i``, ``r/s i`` and friends."""
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}")
    s = "".join(text.split())
    if not s:
        raise ParseError("empty scalar string")
    if not s.endswith("i"):
        return Scalar(_parse_rational(s, text))
    body = s[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real_txt, imag_txt = body[:split], body[split:]
        re_part = _parse_rational(real_txt, text)
    else:
        imag_txt = body
        re_part = Fraction(0)
    if imag_txt in ("", "+"):
        im_part = Fraction(1)
    elif imag_txt == "-":
        im_part = Fraction(-1)
    else:
        im_part = _parse_rational(imag_txt, text)
    return Scalar(re_part, im_part)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    x = as_scalar(x)
    if x.is_real():
        return _fmt_rat(x.re)
    im = x.im
    sign = "-" if im < 0 else "+"
    return f"{_fmt_rat(x.re)}{sign}{_fmt_rat(abs(im))}i"


# -- square roots ------------------------------------------------------------

def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _gaussian_int_sqrt(x: int, y: int):
    """Return (u, v) with (u + v i)^2 = x + y i, or None."""
    n = _isqrt_exact(x * x + y * y)
    if n is None or (n + x) % 2:
        return None
    u = _isqrt_exact((n + x) // 2)
    v = _isqrt_exact((n - x) // 2)
    if u is None or v is None:
        return None
    if y < 0:
        v = -v
    if u * u - v * v != x or 2 * u * v != y:
        return None
    return u, v


def exact_sqrt(x) -> Scalar | None:
    """Principal square root inside Q(i), or None if ``x`` is not a square there."""
    x = as_scalar(x)
    d = x._d
    root = _gaussian_int_sqrt(x._a * d, x._b * d)
    if root is None:
        return None
    w = _mk(root[0], root[1], d)
    return w if w.in_half_plane() else -w


_SMALL_PRIMES_LIMIT = 2000


def _strip_squares(n: int) -> tuple[int, int]:
    """Write n = s^2 * r, removing square factors of small primes only."""
    s = 1
    n_abs = abs(n)
    p = 2
    while p * p <= n_abs and p <= _SMALL_PRIMES_LIMIT:
        while n_abs % (p * p) == 0:
            n_abs //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, (n_abs if n >= 0 else -n_abs)


def _normalize_radicand(z: Scalar) -> tuple[Scalar, Scalar]:
    """Return (c, r) with principal sqrt(z) = c * principal sqrt(r), r a tidy non-square."""
    if z.is_real():
        if z._a < 0:
            c, r = _normalize_radicand(-z)
            return I * c, r
        num = z._a * z._d
        s, r = _strip_squares(num)
        return _mk(s, 0, z._d), _mk(r, 0, 1)
    d = z._d
    gx, gy = z._a * d, z._b * d
    s, _ = _strip_squares(math.gcd(gx, gy))
    return _mk(s, 0, d), _mk(gx // (s * s), gy // (s * s), 1)


def _branch_sign(r: Scalar, w: Scalar, gens: tuple) -> int:
    """Sign e with sqrt(r) = e * w * prod(sqrt(g)) for principal roots."""
    with mpmath.workdps(60):
        lhs = mpmath.sqrt(r.to_mp())
        rhs = w.to_mp()
        for g in gens:
            rhs *= mpmath.sqrt(g.to_mp())
        return 1 if abs(lhs - rhs) < abs(lhs + rhs) else -1


# -- quadratic towers --------------------------------------------------------

@lru_cache(maxsize=256)
def _mono_table(gens: tuple) -> tuple:
    """For masks m1, m2: (scalar factor, resulting mask) of their product."""
    n = 1 << len(gens)
    table = []
    for m1 in range(n):
        row = []
        for m2 in range(n):
            f = ONE
            both = m1 & m2
            for i, g in enumerate(gens):
                if both >> i & 1:
                    f = f * g
            row.append((f, m1 ^ m2))
        table.append(tuple(row))
    return tuple(table)


def _mul_coeffs(gens, x, y):
    tab = _mono_table(gens)
    out = [ZERO] * len(x)
    for m1, c1 in enumerate(x):
        if not c1:
            continue
        row = tab[m1]
        for m2, c2 in enumerate(y):
            if not c2:
                continue
            f, m = row[m2]
            out[m] = out[m] + c1 * c2 * f
    return out


def _inv_coeffs(gens, x):
    if not gens:
        return [x[0].inverse()]
    top = 1 << (len(gens) - 1)
    sub, g = gens[:-1], gens[-1]
    u, v = x[:top], x[top:]
    uu = _mul_coeffs(sub, u, u)
    vv = _mul_coeffs(sub, v, v)
    den = [a - b * g for a, b in zip(uu, vv)]
    dinv = _inv_coeffs(sub, den)
    return _mul_coeffs(sub, u, dinv) + [-c for c in _mul_coeffs(sub, v, dinv)]


def _embed_radicand(gens: tuple, r: Scalar):
    """Express principal sqrt(r) over ``gens``: returns (gens', w, mask)."""
    for i, g in enumerate(gens):
        if g == r:
            return gens, ONE, 1 << i
        w = exact_sqrt(r / g)
        if w is not None:
            return gens, w * _branch_sign(r, w, (g,)), 1 << i
    if len(gens) == 2:
        w = exact_sqrt(r / (gens[0] * gens[1]))
        if w is not None:
            return gens, w * _branch_sign(r, w, gens), 3
        raise UnsupportedTower(f"sqrt({r}) would be a third independent radical over {gens}")
    return gens + (r,), ONE, 1 << len(gens)


class ExtScalar:
    """``sum(c_m * prod_{i in m} sqrt(g_i))`` over at most two radicands ``g_i``.

    The radicands are pairwise independent non-squares in Q(i), so the
    products of their roots form a basis and equality is coefficientwise.
    """

    __slots__ = ("gens", "coeffs")

    def __init__(self, base=0):
        self.gens = ()
        self.coeffs = (as_scalar(base),)

    @classmethod
    def _raw(cls, gens: tuple, coeffs) -> "ExtScalar":
        # drop radicands whose every monomial has a zero coefficient
        gens = tuple(gens)
        coeffs = list(coeffs)
        i = 0
        while i < len(gens):
            bit = 1 << i
            if all(not c for m, c in enumerate(coeffs) if m & bit):
                keep = [c for m, c in enumerate(coeffs) if not m & bit]
                coeffs = keep
                gens = gens[:i] + gens[i + 1:]
            else:
                i += 1
        out = object.__new__(cls)
        out.gens = gens
        out.coeffs = tuple(coeffs)
        return out

    @classmethod
    def sqrt_of(cls, radicand) -> "ExtScalar":
        """Principal square root of a Gaussian rational."""
        z = as_scalar(radicand)
        w = exact_sqrt(z)
        if w is not None:
            return cls(w)
        c, r = _normalize_radicand(z)
        w = exact_sqrt(r)
        if w is not None:
            return cls(c * w)
        return cls._raw((r,), (ZERO, c))

    # -- structure ---------------------------------------------------------
    @property
    def depth(self) -> int:
        return len(self.gens)

    @property
    def base(self) -> Scalar:
        return self.coeffs[0]

    def terms(self) -> list[tuple[Scalar, tuple]]:
        """Nonzero (coefficient, radicands) pairs, base term first."""
        out = []
        for m, c in enumerate(self.coeffs):
            if c:
                out.append((c, tuple(g for i, g in enumerate(self.gens) if m >> i & 1)))
        return out

    def as_scalar(self) -> Scalar | None:
        return self.coeffs[0] if not self.gens else None

    def is_real(self) -> bool:
        if all(c.is_real() for c in self.coeffs) and all(g.is_real() and g > 0 for g in self.gens):
            return True
        # mixed towers such as (1+i) * sqrt(-2i) = 2 land here
        return abs(mpmath.im(self.to_mp(80))) < mpmath.mpf(10) ** -60

    # -- joining towers ----------------------------------------------------
    def _rewrite(self, gens: tuple):
        """Coefficients of self over ``gens`` (which must absorb self.gens)."""
        if self.gens == gens:
            return list(self.coeffs)
        emb = []
        for r in self.gens:
            g2, w, mask = _embed_radicand(gens, r)
            if g2 != gens:
                raise AssertionError("tower does not contain radicand")
            emb.append((w, mask))
        tab = _mono_table(gens)
        out = [ZERO] * (1 << len(gens))
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            f, mask = ONE, 0
            for i, (w, wm) in enumerate(emb):
                if m >> i & 1:
                    g, mask2 = tab[mask][wm]
                    f = f * w * g
                    mask = mask2
            out[mask] = out[mask] + c * f
        return out

    @staticmethod
    def _join(x: "ExtScalar", y: "ExtScalar"):
        if x.gens == y.gens:
            return x.gens, list(x.coeffs), list(y.coeffs)
        if not y.gens:
            return x.gens, list(x.coeffs), [y.coeffs[0]] + [ZERO] * (len(x.coeffs) - 1)
        if not x.gens:
            return y.gens, [x.coeffs[0]] + [ZERO] * (len(y.coeffs) - 1), list(y.coeffs)
        gens = x.gens
        for r in y.gens:
            gens, _, _ = _embed_radicand(gens, r)
        return gens, x._rewrite(gens), y._rewrite(gens)

    # -- arithmetic --------------------------------------------------------
    @staticmethod
    def _lift(o):
        if isinstance(o, ExtScalar):
            return o
        s = _coerce(o)
        if s is NotImplemented:
            return NotImplemented
        return ExtScalar(s)

    def __add__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return NotImplemented
        gens, a, b = self._join(self, o)
        return ExtScalar._raw(gens, [p + q for p, q in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return ExtScalar._raw(self.gens, [-c for c in self.coeffs])

    def __sub__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        if not isinstance(o, ExtScalar):
            s = _coerce(o)
            if s is NotImplemented:
                return NotImplemented
            return ExtScalar._raw(self.gens, [c * s for c in self.coeffs])
        gens, a, b = self._join(self, o)
        return ExtScalar._raw(gens, _mul_coeffs(gens, a, b))

    __rmul__ = __mul__

    def inverse(self) -> "ExtScalar":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        return ExtScalar._raw(self.gens, _inv_coeffs(self.gens, list(self.coeffs)))

    def __truediv__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ExtScalar(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return NotImplemented
        gens, a, b = self._join(self, o)
        return a == b

    __hash__ = None

    def to_mp(self, dps: int = 50):
        with mpmath.workdps(dps):
            total = mpmath.mpc(0)
            roots = [mpmath.sqrt(g.to_mp()) for g in self.gens]
            for m, c in enumerate(self.coeffs):
                if not c:
                    continue
                t = c.to_mp()
                for i, r in enumerate(roots):
                    if m >> i & 1:
                        t *= r
                total += t
            return total

    def to_complex(self) -> complex:
        return complex(self.to_mp())

    def __repr__(self):
        return f"ExtScalar('{format_ext(self)}')"

    def __str__(self):
        return format_ext(self)


def format_ext(x) -> str:
    if isinstance(x, Scalar) or not isinstance(x, ExtScalar):
        return format_scalar(as_scalar(x))
    parts = []
    for c, rads in x.terms():
        if not rads:
            parts.append(format_scalar(c))
            continue
        root = "*".join(f"sqrt({format_scalar(r)})" for r in rads)
        if c == 1:
            parts.append(root)
        elif c == -1:
            parts.append(f"-{root}")
        elif c.is_real():
            parts.append(f"{format_scalar(c)}*{root}")
        else:
            parts.append(f"({format_scalar(c)})*{root}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def scalar_sqrt(x, mode: FieldMode = FieldMode.COMPLEX) -> ExtScalar:
    """Exact square root; principal branch (non-negative in Real mode)."""
    x = as_scalar(x)
    if FieldMode(mode) is FieldMode.REAL:
        if not x.is_real():
            raise NegativeRadicand(f"non-real radicand {x} in Real mode")
        if x < 0:
            raise NegativeRadicand(f"sqrt({x}) is not real")
    return ExtScalar.sqrt_of(x)


def ext_arith(a, b=None, op: str = "add"):
    """Functional front end over ExtScalar arithmetic: add, mul, inv, eq."""
    a = ExtScalar._lift(a)
    if op == "inv":
        return a.inverse()
    b = ExtScalar._lift(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


def simplify(x):
    """Demote an ExtScalar without radicals to a plain Scalar."""
    if isinstance(x, ExtScalar) and not x.gens:
        return x.coeffs[0]
    return x


def is_real_value(x) -> bool:
    if isinstance(x, ExtScalar):
        return x.is_real()
    return as_scalar(x).is_real()
