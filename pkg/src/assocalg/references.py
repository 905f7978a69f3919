"""Explicit transformation matrices between known presentations.

Each record names a source table (rows in the catalog's cell notation, or a
catalog label), a target, and a matrix that must be a witness from source
to target.  Used by the self-test and the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import StructureTable
from .catalog import canonical_table, family_table, table_from_rows
from .scalar import I, FieldMode
from .witness import verify_witness


@dataclass(frozen=True)
class KnownWitness:
    name: str
    source: object
    target: object
    matrix: tuple

    def tables(self) -> tuple[StructureTable, StructureTable]:
        return _resolve(self.source), _resolve(self.target)

    def check(self) -> bool:
        src, dst = self.tables()
        return verify_witness(src, dst, [list(r) for r in self.matrix])


def _resolve(ref) -> StructureTable:
    if isinstance(ref, StructureTable):
        return ref
    if isinstance(ref, str):
        return canonical_table(ref)
    if isinstance(ref, tuple) and ref and ref[0] == "family":
        _, fam, k, mode = ref
        t = family_table(fam, k, mode)
        return t.with_mode(FieldMode.COMPLEX)
    return table_from_rows(list(ref))


KNOWN_WITNESSES = (
    # planes
    KnownWitness("A2_1 to ef=f presentation", "A2_1", ("e f", "0 0"), ((0, 1), (1, 0))),
    KnownWitness("fe=f presentation to A2_2", ("e 0", "f 0"), "A2_2", ((0, 1), (1, 0))),
    KnownWitness("ef=f, fe=e presentation to A2_1", ("e f", "e f"), "A2_1", ((1, 1), (0, 1))),
    KnownWitness("ef=e, fe=f presentation to A2_2", ("e e", "f f"), "A2_2", ((1, 1), (0, 1))),
    # curled, three dimensions
    KnownWitness("curled c1 second table", ("0 0 0", "0 0 f", "e 0 g"), "C3_2",
                 ((1, 0, 0), (0, 0, 1), (0, 1, 0))),
    KnownWitness("curled c1 third table", ("0 0 e", "0 0 0", "0 f g"), "C3_2",
                 ((0, 0, 1), (1, 0, 0), (0, 1, 0))),
    KnownWitness("curled c2 left block", ("0 0 0", "e f g", "0 0 0"), "C3_3",
                 ((1, 0, 0), (0, 0, 1), (0, 1, 0))),
    KnownWitness("curled c2 k=1 first table", ("0 0 0", "e f g", "e f g"), "C3_3",
                 ((1, 0, 0), (0, -1, 1), (0, 0, 1))),
    KnownWitness("curled c2 k=1 second table", ("0 0 0", "e f f", "e g g"), "C3_2",
                 ((1, 0, 0), (0, 1, 0), (0, 1, -1))),
    KnownWitness("curled c3 first table", ("0 e 0", "0 f g", "0 0 0"), "C3_2",
                 ((0, 0, 1), (0, 1, 0), (1, 0, 0))),
    KnownWitness("curled c3 last table", ("0 e e", "0 f g", "0 f g"), "C3_2",
                 ((0, 0, 1), (0, 1, 0), (-1, 1, 0))),
    # unital and waved
    KnownWitness("U3_1 sign variant", ("e f g", "f 0 -f", "g f e"), "U3_1",
                 ((1, 0, 0), (0, -1, 0), (0, 0, -1))),
    KnownWitness("W3_3(1) to W3_3(-1)", ("family", "W3_3", 1, "complex"),
                 ("family", "W3_3", -1, "complex"), ((1, 0, 0), (0, 1, 0), (0, 0, -1))),
    KnownWitness("W3_3m(2) read over C to W3_3(2i)", ("family", "W3_3m", 2, "real"),
                 ("family", "W3_3", 2 * I, "complex"), ((1, 0, 0), (0, 1, 0), (0, 0, -I))),
)
