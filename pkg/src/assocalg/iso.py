"""Isomorphism decisions, basis scrambling and a finite-field search oracle."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import StructureTable, change_basis, require_associative
from .classify import classify
from .errors import BadPrime, DimensionMismatch, ModeMismatch
from .scalar import I, ONE, ZERO, FieldMode, as_scalar
from .witness import Witness, compose, invert, verify_witness

__all__ = ["Witness", "verify_witness", "are_isomorphic", "scramble", "FFMatrix", "ff_oracle",
           "monomial_witness", "random_unimodular"]


def _check_pair(A: StructureTable, B: StructureTable) -> None:
    if A.mode is not B.mode:
        raise ModeMismatch(f"cannot compare a {A.mode.value} table with a {B.mode.value} table")
    if A.dim != B.dim:
        raise DimensionMismatch(f"dimensions {A.dim} and {B.dim} differ")


def monomial_witness(A: StructureTable, B: StructureTable):
    """First permutation matrix with unit entries that is a witness from A to B."""
    n = A.dim
    units = [ONE, -ONE] if A.mode is FieldMode.REAL else [ONE, -ONE, I, -I]
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product(units, repeat=n):
            M = [[ZERO] * n for _ in range(n)]
            for r, (c, u) in enumerate(zip(perm, signs)):
                M[r][c] = u
            if verify_witness(A, B, M):
                return M
    return None


def are_isomorphic(A: StructureTable, B: StructureTable):
    """Decide isomorphism by classification.

    Returns ``(True, witness or None)`` or ``(False, separator)`` where the
    separator names the first invariant that differs.
    """
    _check_pair(A, B)
    require_associative(A)
    require_associative(B)
    ra, rb = classify(A), classify(B)
    if ra.label != rb.label:
        sep = ra.profile.first_difference(rb.profile)
        if sep is None:
            sep = "k_squared" if ra.label.family == rb.label.family else "det_q_sign"
        return False, sep
    M = monomial_witness(A, B)
    if M is not None:
        return True, Witness(M)
    if ra.witness is None or rb.witness is None:
        return True, None
    M = compose(ra.witness, invert(rb.witness))
    return True, Witness(M)


def random_unimodular(n: int, rng: random.Random):
    while True:
        M = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        d = linalg.det([[as_scalar(x) for x in r] for r in M])
        if d == 1 or d == -1:
            return [[as_scalar(x) for x in r] for r in M]


def scramble(A: StructureTable, seed: int):
    """Deterministic unimodular change of basis.

    Returns the new table and the matrix M used; M is a witness from A to
    the new table.
    """
    M = random_unimodular(A.dim, random.Random(seed))
    return change_basis(A, M), M


# -- finite-field oracle -----------------------------------------------------

@dataclass(frozen=True)
class FFMatrix:
    prime: int
    entries: tuple

    def __post_init__(self):
        m = np.array(self.entries, dtype=np.int64) % self.prime
        if _det_batch(m[None])[0] % self.prime == 0:
            raise ValueError("matrix is singular mod p")

    def rows(self):
        return [list(r) for r in self.entries]


def _sqrt_minus_one(p: int):
    for x in range(p):
        if (x * x + 1) % p == 0:
            return x
    return None


def _reduce(x, p: int) -> int:
    x = as_scalar(x)
    if x._d % p == 0:
        raise BadPrime(f"denominator {x._d} is divisible by {p}")
    val = x._a
    if x._b:
        r = _sqrt_minus_one(p)
        if r is None:
            raise BadPrime(f"-1 has no square root mod {p}")
        val += x._b * r
    return val * pow(x._d, -1, p) % p


def _reduce_table(A: StructureTable, p: int):
    n = A.dim
    return np.array([[[_reduce(A.constants[i][j][s], p) for s in range(n)]
                      for j in range(n)] for i in range(n)], dtype=np.int64)


def _det_batch(M):
    n = M.shape[1]
    if n == 1:
        return M[:, 0, 0]
    if n == 2:
        return M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]
    return (M[:, 0, 0] * (M[:, 1, 1] * M[:, 2, 2] - M[:, 1, 2] * M[:, 2, 1])
            - M[:, 0, 1] * (M[:, 1, 0] * M[:, 2, 2] - M[:, 1, 2] * M[:, 2, 0])
            + M[:, 0, 2] * (M[:, 1, 0] * M[:, 2, 1] - M[:, 1, 1] * M[:, 2, 0]))


def ff_oracle(A: StructureTable, B: StructureTable, p: int, chunk: int = 1 << 17):
    """Exhaustive search for a witness from A to B over GF(p).

    Matrices are scanned in lexicographic order of their row-major entries;
    the first invertible solution is returned, or None.
    """
    _check_pair(A, B)
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise BadPrime(f"{p} is not prime")
    n = A.dim
    if n > 3 or p > 7:
        raise BadPrime("search space too large: need dim <= 3 and p <= 7")
    a = _reduce_table(A, p)
    b = _reduce_table(B, p)
    total = p ** (n * n)
    weights = p ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        M = ((idx[:, None] // weights[None, :]) % p).reshape(-1, n, n)
        ok = _det_batch(M) % p != 0
        lhs = np.einsum("ijs,Nst->Nijt", a, M) % p
        x = np.einsum("Nik,klt->Nilt", M, b) % p
        rhs = np.einsum("Njl,Nilt->Nijt", M, x) % p
        ok &= np.all((lhs == rhs).reshape(len(idx), -1), axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            m = M[hits[0]]
            return FFMatrix(p, tuple(tuple(int(v) for v in r) for r in m))
    return None
