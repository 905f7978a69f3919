"""Exact classification of associative algebras of dimension at most 3
over the real and complex numbers."""

from __future__ import annotations

from .algebra import (InvariantProfile, Shape, StructureTable, algebra_shape, change_basis,
                      check_associativity, invariant_profile, is_zeropotent)
from .catalog import Label, canonical_table, catalog_list, expected_invariants
from .classify import ClassifyResult, WitnessStatus, classify, waved_parameter
from .iso import FFMatrix, Witness, are_isomorphic, ff_oracle, scramble, verify_witness
from .scalar import ExtScalar, FieldMode, Scalar, parse_scalar

__version__ = "0.1.0"
