"""Shared hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from assocalg.scalar import Scalar

small_fracs = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
rationals = st.builds(lambda q: Scalar(q), small_fracs)
gaussians = st.builds(Scalar, small_fracs, small_fracs)


def unimodular(n):
    """Integer matrices of determinant +-1 built from elementary operations."""
    ops = st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(-2, 2),
                             st.booleans()), min_size=1, max_size=8)

    def build(steps):
        m = [[Scalar(int(i == j)) for j in range(n)] for i in range(n)]
        for a, b, c, flip in steps:
            if a != b:
                m[a] = [x + c * y for x, y in zip(m[a], m[b])]
            if flip:
                m[a] = [-x for x in m[a]]
        return m

    return ops.map(build)
