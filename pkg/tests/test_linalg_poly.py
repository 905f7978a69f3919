from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assocalg import linalg
from assocalg.errors import SingularMatrix
from assocalg.poly import (cubic_discriminant, gaussian_rational_roots, pdet, peval, ugcd,
                           udivmod, uderiv, variables)
from assocalg.scalar import I, Scalar, as_scalar

from strategies import gaussians, unimodular


def S(rows):
    return [[as_scalar(x) for x in r] for r in rows]


def test_det_and_inverse():
    m = S([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    assert linalg.det(m) == 18
    assert linalg.matmul(m, linalg.inverse(m)) == linalg.identity(3)
    with pytest.raises(SingularMatrix):
        linalg.inverse(S([[1, 2], [2, 4]]))


def test_nullspace_and_coordinates():
    rows = S([[1, 1, 0], [0, 0, 0]])
    ns = linalg.nullspace(rows, 3)
    assert len(ns) == 2
    for v in ns:
        assert sum(a * b for a, b in zip(rows[0], v)) == 0
    assert linalg.coordinates(S([[3, 5]])[0], S([[1, 1], [0, 1]])) == [3, 2]
    assert linalg.coordinates(S([[1, 0]])[0], S([[1, 1]])) is None


@given(st.lists(gaussians, min_size=9, max_size=9))
def test_inverse_property(xs):
    m = [xs[0:3], xs[3:6], xs[6:9]]
    if linalg.det(m):
        assert linalg.matmul(linalg.inverse(m), m) == linalg.identity(3)
    else:
        assert linalg.rank(m) < 3


@given(unimodular(3))
def test_unimodular_strategy(m):
    assert linalg.det(m) in (1, -1)


def test_symbolic_det_matches_evaluation():
    x = variables(3)
    m = [[x[0], x[1], x[2]], [x[1], x[2], x[0]], [x[2], x[0], x[1]]]
    p = pdet(m)
    pt = [as_scalar(2), as_scalar(-1), Scalar(1, 1)]
    num = [[pt[0], pt[1], pt[2]], [pt[1], pt[2], pt[0]], [pt[2], pt[0], pt[1]]]
    assert peval(p, pt) == linalg.det(num)


def test_gaussian_roots():
    # (X - 1)(X - 2)(X - 3)
    assert sorted(r.re for r in gaussian_rational_roots(S([[-6, 11, -6, 1]])[0])) == [1, 2, 3]
    # (X - 1)(X^2 + 1)
    roots = gaussian_rational_roots(S([[-1, 1, -1, 1]])[0])
    assert set(map(str, roots)) == {str(as_scalar(1)), str(I), str(-I)}
    # X^3 - 2 has no root in Q(i)
    assert gaussian_rational_roots(S([[-2, 0, 0, 1]])[0]) == []


def test_gcd_multiplicity():
    p = S([[-4, 8, -5, 1]])[0]      # (X-1)(X-2)^2
    g = ugcd(p, uderiv(p))
    assert g == S([[-2, 1]])[0]
    q, r = udivmod(p, g)
    assert r == []
    assert cubic_discriminant(p) == 0
    assert cubic_discriminant(S([[-1, 1, -1, 1]])[0]) < 0
