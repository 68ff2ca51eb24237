"""Built-in pairs of groups for enumeration and verification.

Each entry fixes the ambient group by explicit permutation generators,
the normal subgroup by generator words, a prime, a default field degree,
the declared quotient kind, an optional block selector, and the expected
vertex counts of the two mutation quivers.
"""

from __future__ import annotations

from .field import Field
from .grouprep import (PermGroup, central_primitive_idempotents, covers,
                       group_handle, principal_block,
                       seed_radical_from_normal)
from .clifford import CoveringPair


def _cyc(n: int) -> tuple:
    return tuple((i + 1) % n for i in range(n))


def _shift(perm, off: int, deg: int) -> tuple:
    """Embed a permutation into a larger point set at an offset."""
    out = list(range(deg))
    for i, j in enumerate(perm):
        out[off + i] = off + j
    return tuple(out)


class CatalogEntry:
    """One named inclusion G normal in Gtilde with field data.

    block_index selects a block of kG from the sorted central primitive
    idempotent list; None means the principal block.  expected maps
    "sub"/"super" to the vertex counts of the two quivers."""

    def __init__(self, name: str, degree: int, gtilde_gens: list,
                 g_words: list, p: int, m: int = 1,
                 quotient_kind: str = "cyclic", block_index=None,
                 expected=None):
        self.name = name
        self.degree = degree
        self.gtilde_gens = [tuple(g) for g in gtilde_gens]
        self.g_words = [list(w) for w in g_words]
        self.p = p
        self.m = m
        self.quotient_kind = quotient_kind
        self.block_index = block_index
        self.expected = dict(expected or {})

    def __repr__(self) -> str:
        return (f"CatalogEntry({self.name}, p={self.p}, m={self.m}, "
                f"{self.quotient_kind})")


ENTRIES = [
    CatalogEntry("C2", 2, [(1, 0)], [[0]], p=2,
                 quotient_kind="p-group",
                 expected={"sub": 2, "super": 2}),
    CatalogEntry("C3", 3, [_cyc(3)], [[0]], p=3,
                 quotient_kind="p-group",
                 expected={"sub": 2, "super": 2}),
    CatalogEntry("C5", 5, [_cyc(5)], [[0]], p=5,
                 quotient_kind="p-group",
                 expected={"sub": 2, "super": 2}),
    CatalogEntry("C3-C3xC3", 6,
                 [_shift(_cyc(3), 0, 6), _shift(_cyc(3), 3, 6)],
                 [[0]], p=3, quotient_kind="p-group",
                 expected={"sub": 2, "super": 2}),
    CatalogEntry("C5-C5xC2", 7,
                 [_shift(_cyc(5), 0, 7), _shift(_cyc(2), 5, 7)],
                 [[0]], p=5, quotient_kind="cyclic",
                 expected={"sub": 2, "super": 2}),
    CatalogEntry("S3-S3xC3", 6,
                 [_shift((1, 0, 2), 0, 6), _shift((1, 2, 0), 0, 6),
                  _shift(_cyc(3), 3, 6)],
                 [[0], [1]], p=3, quotient_kind="p-group",
                 expected={"sub": 6, "super": 6}),
    CatalogEntry("A4-S4", 4, [(1, 0, 2, 3), (1, 2, 3, 0)],
                 [[0, 1, 0, -2], [0, 1, 1, 0, -2, -2]],
                 p=3, quotient_kind="cyclic",
                 expected={"sub": 2, "super": 6}),
    CatalogEntry("A5-S5", 5, [(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)],
                 [[0, 1, 0, -2], [1]],
                 p=5, quotient_kind="cyclic",
                 expected={"sub": 6, "super": 70}),
    CatalogEntry("C3-S3", 3, [(1, 0, 2), (1, 2, 0)], [[1]],
                 p=5, quotient_kind="cyclic", block_index=1,
                 expected={"sub": 2, "super": 2}),
]

CATALOG = {e.name: e for e in ENTRIES}


def build(entry: CatalogEntry, m: int | None = None) -> CoveringPair:
    """Construct the covering pair: groups from the stored generators and
    words, blocks by the entry's selector, the covering block chosen as
    the principal block when it lies over b and as the unique other
    coverer otherwise."""
    f = Field(entry.p, m if m is not None else entry.m)
    gtilde = PermGroup(entry.degree, entry.gtilde_gens)
    g = gtilde.subgroup_from_words(entry.g_words)
    gh = group_handle(g, f)
    gh.algebra.radical_rows()
    gth = group_handle(gtilde, f)
    seed_radical_from_normal(gth, gh)
    if entry.block_index is None:
        b = principal_block(gh)
    else:
        b = central_primitive_idempotents(gh)[entry.block_index]
    bt = principal_block(gth)
    if not covers(bt, b):
        cands = [c for c in central_primitive_idempotents(gth)
                 if covers(c, b)]
        assert len(cands) == 1, "covering block is not unique"
        bt = cands[0]
    meta = {"quotient_kind": entry.quotient_kind,
            "h2_trivial": entry.quotient_kind in
            ("p-group", "cyclic", "dihedral-2p"),
            "basic_quotient_algebra": entry.quotient_kind in
            ("p-group", "cyclic", "dihedral-2p")}
    return CoveringPair(g, gtilde, b, bt, meta, name=entry.name)
