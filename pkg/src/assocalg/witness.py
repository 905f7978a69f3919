"""Isomorphism witnesses and their exact verification.

A witness from A to B is an invertible matrix M whose row s holds the
B-coordinates of the image of the basis vector e_s.  It is valid when
sum_s a_ij^s m_st = sum_kl b_kl^t m_ik m_jl for all i, j, t.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import StructureTable, multiply
from .errors import DimensionMismatch, SingularMatrix
from .scalar import ExtScalar, as_scalar, format_ext, simplify


def _clean(x):
    return simplify(x) if isinstance(x, ExtScalar) else as_scalar(x)


@dataclass(frozen=True)
class Witness:
    matrix: tuple
    source_dim: int

    def __init__(self, matrix):
        rows = tuple(tuple(_clean(c) for c in row) for row in matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("witness must be square")
        if not linalg.det([list(r) for r in rows]):
            raise SingularMatrix("witness is singular")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "source_dim", n)

    def rows(self):
        return [list(r) for r in self.matrix]

    def text_rows(self):
        return [[format_ext(c) for c in r] for r in self.matrix]

    def __eq__(self, other):
        if isinstance(other, Witness):
            other = other.matrix
        try:
            return (len(self.matrix) == len(other)
                    and all(a == b for r1, r2 in zip(self.matrix, other) for a, b in zip(r1, r2)))
        except TypeError:
            return NotImplemented

    __hash__ = None


def verify_witness(A: StructureTable, B: StructureTable, M) -> bool:
    """Exact check of the isomorphism criterion for M from A to B."""
    rows = M.rows() if isinstance(M, Witness) else [list(r) for r in M]
    n = A.dim
    if B.dim != n or len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatch("witness and tables must share one dimension")
    if not linalg.det(rows):
        return False
    for i in range(n):
        for j in range(n):
            left = linalg.vecmat(A.constants[i][j], rows)
            right = multiply(B, rows[i], rows[j])
            if any(a != b for a, b in zip(left, right)):
                return False
    return True


def compose(first, second):
    """Witness A -> C from witnesses A -> B and B -> C."""
    a = first.rows() if isinstance(first, Witness) else first
    b = second.rows() if isinstance(second, Witness) else second
    return linalg.matmul(a, b)


def invert(M):
    """Witness B -> A from a witness A -> B."""
    rows = M.rows() if isinstance(M, Witness) else M
    return linalg.inverse(rows)
