"""Tables built from a single-generator relation, used as independent fixtures."""

from __future__ import annotations

from assocalg.algebra import StructureTable
from assocalg.scalar import as_scalar


def unital_from_cubic(a, b, c, mode="complex"):
    """Basis (1, h, h^2) with h^3 = a h^2 + b h + c."""
    a, b, c = (as_scalar(x) for x in (a, b, c))
    # powers h^0..h^4 as coordinates on (1, h, h^2)
    pw = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(2):
        prev = pw[-1]
        # h * (x0 + x1 h + x2 h^2) = x0 h + x1 h^2 + x2 h^3
        pw.append([prev[2] * c, prev[0] + prev[2] * b, prev[1] + prev[2] * a])
    consts = [[[as_scalar(x) for x in pw[i + j]] for j in range(3)] for i in range(3)]
    return StructureTable(consts, mode)


def nilpotent_tower(a, b, mode="complex"):
    """Basis (h, h^2, h^3) with h^4 = a h^3 + b h^2."""
    a, b = as_scalar(a), as_scalar(b)
    # coordinates of h^1..h^6 on (h, h^2, h^3)
    pw = {1: [1, 0, 0], 2: [0, 1, 0], 3: [0, 0, 1]}
    for k in (4, 5, 6):
        prev = pw[k - 1]
        # h * (x1 h + x2 h^2 + x3 h^3) = x1 h^2 + x2 h^3 + x3 h^4
        pw[k] = [as_scalar(0), prev[0] + prev[2] * b, prev[1] + prev[2] * a]
    consts = [[[as_scalar(x) for x in pw[i + j + 2]] for j in range(3)] for i in range(3)]
    return StructureTable(consts, mode)
