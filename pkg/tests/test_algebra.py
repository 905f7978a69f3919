from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from assocalg import linalg
from assocalg.algebra import (Element, Shape, StructureTable, algebra_shape, basis_vector,
                              change_basis, check_associativity, direct_sum, element_shape,
                              find_identity, find_straight_element, invariant_profile,
                              is_zeropotent, multiply, square_of_square_zero, zeropotent_plane)
from assocalg.catalog import Label, canonical_table, family_table, sample_labels, table_from_rows
from assocalg.errors import (AlgebraError, DimensionMismatch, ModeMismatch, NonAssociative,
                             RealModeTableWithComplexEntries, SingularMatrix)
from assocalg.scalar import I, FieldMode, Scalar, as_scalar

from strategies import gaussians, unimodular

E, F, G = (basis_vector(3, i) for i in range(3))


def vec(*xs):
    return Element([as_scalar(x) for x in xs])


def test_multiply_examples():
    assert multiply(canonical_table("C3_4"), E, G) == E
    k = Scalar(3, -1)
    assert multiply(family_table("W3_3", k), G, F) == vec(k, 0, 0)
    C0 = canonical_table("C3_0")
    assert not multiply(C0, vec(1, 2, 3), vec(-1, 0, 5))


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        multiply(canonical_table("C3_0"), vec(1, 0), E)


def test_associativity_counterexample():
    bad = table_from_rows(["0 0 f", "0 0 0", "0 0 e"])
    assert (2, 2, 2) in check_associativity(bad)
    with pytest.raises(NonAssociative):
        invariant_profile(bad)
    assert check_associativity(StructureTable.zero(3)) == []


def test_real_mode_rejects_complex_entries():
    with pytest.raises(RealModeTableWithComplexEntries):
        StructureTable([[[I]]], FieldMode.REAL)


@pytest.mark.parametrize("label,triple", [
    ("C3_0", (0, 3, 3)), ("C3_1", (1, 1, 1)), ("C3_2", (3, 1, 1)), ("C3_3", (3, 2, 0)),
    ("C3_4", (3, 0, 2)), ("W3_7", (3, 1, 0)), ("W3_5", (2, 2, 1)),
])
def test_profile_triples(label, triple):
    assert invariant_profile(canonical_table(label)).triple == triple


def test_zero_algebra_profile():
    p = invariant_profile(canonical_table("C3_0"))
    assert p.zeropotent and p.shape is Shape.CURLED


def test_element_shape_examples():
    assert element_shape(canonical_table("C3_0"), vec(1, 2, 3)) is Shape.CURLED
    assert element_shape(canonical_table("W3_1"), G) is Shape.WAVED
    assert element_shape(canonical_table("U3_2"), vec(1, 2, 3)) is Shape.STRAIGHT
    with pytest.raises(AlgebraError):
        element_shape(canonical_table("U3_2"), vec(0, 0, 0))


@pytest.mark.parametrize("label,shape", [
    ("C3_3", Shape.CURLED), ("U3_0", Shape.WAVED), ("S3_1", Shape.STRAIGHT),
    ("A1_1", Shape.CURLED), ("A2_5", Shape.STRAIGHT), ("A2_2", Shape.CURLED),
])
def test_algebra_shape_examples(label, shape):
    assert algebra_shape(canonical_table(label)) is shape


def test_find_identity_examples():
    assert find_identity(canonical_table("U3_2")) == vec(1, 1, 1)
    assert find_identity(canonical_table("C3_0")) is None
    assert find_identity(canonical_table("W3_9")) is None


def test_find_straight_element_examples():
    assert find_straight_element(canonical_table("U3_4")) == vec(1, 1, 0)
    assert find_straight_element(canonical_table("C3_1")) is None
    x = find_straight_element(canonical_table("S3_2"))
    A = canonical_table("S3_2")
    pw = [x, multiply(A, x, x)]
    pw.append(multiply(A, pw[1], x))
    assert linalg.rank(pw) == 3


def test_zeropotent_examples():
    assert is_zeropotent(canonical_table("C3_1"))
    assert is_zeropotent(canonical_table("C3_0"))
    assert not is_zeropotent(canonical_table("C3_2"))


def test_square_of_square_zero_separates_w1_w4():
    assert square_of_square_zero(canonical_table("W3_1"))
    assert not square_of_square_zero(canonical_table("W3_4"))


@pytest.mark.parametrize("k2,want", [(0, False), (1, False), (4, True), (9, True)])
def test_zeropotent_plane_of_family_over_reals(k2, want):
    # b^2 + k bc + c^2 factors over R exactly when k^2 >= 4
    assert zeropotent_plane(canonical_table(Label("W3_3", k2), "real")) is want
    assert zeropotent_plane(canonical_table(Label("W3_3", k2), "complex"))


def test_zeropotent_plane_w7_w10():
    assert not zeropotent_plane(canonical_table("W3_7"))
    assert zeropotent_plane(canonical_table("W3_10"))


def test_change_basis_examples():
    A21 = canonical_table("A2_1")
    swapped = change_basis(A21, [[0, 1], [1, 0]])
    assert swapped == table_from_rows(["e f", "0 0"])
    assert change_basis(A21, linalg.identity(2)) == A21
    k = as_scalar(2)
    assert change_basis(family_table("W3_3", k), [[1, 0, 0], [0, 1, 0], [0, 0, -1]]) == \
        family_table("W3_3", -k)
    with pytest.raises(SingularMatrix):
        change_basis(A21, [[1, 1], [1, 1]])


def test_direct_sum_examples():
    A11 = canonical_table("A1_1")
    assert direct_sum(direct_sum(A11, A11), A11) == canonical_table("U3_2")
    A10 = canonical_table("A1_0")
    assert direct_sum(A10, A10) == canonical_table("A2_0")
    mixed = direct_sum(A11, canonical_table("A2_3"))
    assert mixed == table_from_rows(["e 0 0", "0 0 0", "0 0 f"])
    with pytest.raises(ModeMismatch):
        direct_sum(A11, canonical_table("A1_1", "real"))


_LABELS = [(m, lab) for m in FieldMode for lab in sample_labels(m)]


@settings(max_examples=80)
@given(st.sampled_from(_LABELS), unimodular(3), unimodular(2))
def test_profile_invariant_under_basis_change(pair, m3, m2):
    mode, lab = pair
    A = canonical_table(lab, mode)
    M = {3: m3, 2: m2}.get(A.dim, [[as_scalar(-1)]])
    B = change_basis(A, M)
    assert invariant_profile(B) == invariant_profile(A)
    assert change_basis(B, linalg.inverse(M)) == A


@given(st.sampled_from(_LABELS), st.lists(gaussians, min_size=9, max_size=9),
       gaussians, gaussians)
def test_multiply_bilinear(pair, xs, a, b):
    mode, lab = pair
    A = canonical_table(lab, mode)
    n = A.dim
    x, y, z = (Element(xs[3 * t:3 * t + n]) for t in range(3))
    left = multiply(A, Element([a * p + b * q for p, q in zip(x, y)]), z)
    right = Element([a * p + b * q for p, q in zip(multiply(A, x, z), multiply(A, y, z))])
    assert left == right


@pytest.mark.parametrize("label", ["C3_0", "C3_1", "C3_2", "C3_4", "A2_2"])
def test_curled_shape_holds_on_samples(label):
    A = canonical_table(label)
    rng = random.Random(5)
    for _ in range(500):
        x = Element([Scalar(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(A.dim)])
        if x:
            assert element_shape(A, x) is Shape.CURLED
