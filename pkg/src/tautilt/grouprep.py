"""Finite permutation groups, their group algebras over F_{p^m}, module
construction by generator matrices, restriction / induction / conjugation
along a normal subgroup, and the block decomposition with its covering
relation.

Groups stay small enough for full element enumeration, so subgroups are
plain permutation groups on the same points and multiplication is exact
table lookup.  Radicals of large ambient algebras are transported instead
of recomputed: along a normal subgroup of index prime to p the radical is
generated by the subgroup's radical, and a block cut multiplies the radical
by the block idempotent.
"""

from __future__ import annotations

import numpy as np

from .field import Field, rank, rref, solve
from .algebra import Algebra, AMod, split_commutative, zero_module


class NotSubgroup(Exception):
    pass


class NotNormal(Exception):
    pass


def compose(a, b):
    """Permutation product: apply b first, then a."""
    return tuple(a[x] for x in b)


def perm_inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_from_cycles(degree: int, cycles) -> tuple:
    out = list(range(degree))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            out[x] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


class PermGroup:
    """Permutation group with fully enumerated elements.

    Enumeration is breadth first over left multiplication by generators,
    identity first, so element order and every derived structure are
    reproducible.  Each element remembers a parent edge (previous element,
    generator index); evaluating those words yields module matrices."""

    def __init__(self, degree: int, generators):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            assert sorted(g) == list(range(degree)), "not a permutation"
        ident = tuple(range(degree))
        self.elements = [ident]
        self.index = {ident: 0}
        self.parent = [(-1, -1)]
        head = 0
        while head < len(self.elements):
            cur = self.elements[head]
            for gi, g in enumerate(self.generators):
                nxt = compose(g, cur)
                if nxt not in self.index:
                    self.index[nxt] = len(self.elements)
                    self.elements.append(nxt)
                    self.parent.append((head, gi))
            head += 1
        self.order = len(self.elements)
        self.gen_indices = [self.index[g] for g in self.generators]
        self._table = None
        self._handles = {}

    def table(self):
        """Index form of the multiplication: table[i, j] = index of e_i e_j."""
        if self._table is None:
            n = self.order
            e = np.array(self.elements, dtype=np.int64)
            prod = e[:, e]  # prod[a, b] = e_a composed with e_b
            t = np.empty((n, n), dtype=np.int64)
            for a in range(n):
                for b in range(n):
                    t[a, b] = self.index[tuple(prod[a, b])]
            self._table = t
        return self._table

    def inverse_index(self, i: int) -> int:
        return self.index[perm_inverse(self.elements[i])]

    def evaluate_word(self, word) -> tuple:
        """Product of generators by index; negative entries use inverses
        (-1 is the inverse of generator 0, and so on)."""
        acc = tuple(range(self.degree))
        for t in word:
            g = self.generators[t] if t >= 0 else perm_inverse(
                self.generators[-t - 1])
            acc = compose(acc, g)
        return acc

    def subgroup_from_words(self, words) -> "PermGroup":
        return PermGroup(self.degree, [self.evaluate_word(w) for w in words])

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def direct_product(g1: PermGroup, g2: PermGroup) -> PermGroup:
    """Product group acting on the disjoint union of the two point sets."""
    d1, d2 = g1.degree, g2.degree
    gens = [tuple(g) + tuple(range(d1, d1 + d2)) for g in g1.generators]
    gens += [tuple(range(d1)) + tuple(x + d1 for x in g) for g in g2.generators]
    return PermGroup(d1 + d2, gens)


class GroupAlgebraHandle:
    """Group algebra with basis the enumerated elements, generators the
    group generators, and the coefficient-of-identity symmetric form."""

    def __init__(self, group: PermGroup, field: Field):
        self.group = group
        self.field = field
        n = group.order
        t = group.table()
        mult = np.zeros((n, n, n), dtype=np.int64)
        mult[np.arange(n)[:, None], np.arange(n)[None, :], t] = 1
        lam = np.zeros(n, dtype=np.int64)
        lam[0] = 1
        self.algebra = Algebra(field, mult, lam.copy(), group.gen_indices,
                               symmetric_form=lam)
        self._blocks = None

    def __repr__(self) -> str:
        return (f"GroupAlgebraHandle(order={self.group.order}, "
                f"q={self.field.q})")


def group_handle(group: PermGroup, field: Field) -> GroupAlgebraHandle:
    key = (field.p, field.m)
    if key not in group._handles:
        group._handles[key] = GroupAlgebraHandle(group, field)
    return group._handles[key]


class KGMod:
    """Module given by one invertible matrix per group generator; the full
    action is rebuilt along the enumeration's parent words and validated."""

    def __init__(self, handle: GroupAlgebraHandle, matrices, check: bool = True):
        self.handle = handle
        f = handle.field
        self.matrices = [f.arr(m) for m in matrices]
        g = handle.group
        assert len(self.matrices) == len(g.generators)
        d = self.matrices[0].shape[0] if self.matrices else 1
        for m in self.matrices:
            assert m.shape == (d, d)
            if check:
                assert rank(f, m) == d, "generator matrix not invertible"
        acts = np.zeros((g.order, d, d), dtype=np.int64)
        acts[0] = f.eye(d)
        for i in range(1, g.order):
            j, gi = g.parent[i]
            acts[i] = f.matmul(self.matrices[gi], acts[j])
        if check:
            # generator times every element: by induction on word length
            # this forces multiplicativity on all pairs
            t = g.table()
            for gi, mat in zip(g.gen_indices, self.matrices):
                for x in range(g.order):
                    assert np.array_equal(f.matmul(mat, acts[x]),
                                          acts[t[gi, x]]), \
                        "matrices violate a group relation"
        self.amod = AMod(handle.algebra, acts, check=check)
        self.dim = d

    def element_matrix(self, perm):
        return self.amod.acts[self.handle.group.index[tuple(perm)]]

    def __repr__(self) -> str:
        return f"KGMod(dim={self.dim}, group_order={self.handle.group.order})"


def trivial_module(h: GroupAlgebraHandle) -> KGMod:
    one = h.field.eye(1)
    return KGMod(h, [one.copy() for _ in h.group.generators], check=False)


def tensor_modules(u: KGMod, v: KGMod) -> KGMod:
    assert u.handle is v.handle, "tensor needs modules over one handle"
    from .field import kron
    f = u.handle.field
    mats = [kron(f, a, b) for a, b in zip(u.matrices, v.matrices)]
    return KGMod(u.handle, mats, check=False)


def restrict(u: KGMod, sub: PermGroup) -> KGMod:
    """Restriction along a subgroup on the same points."""
    big = u.handle.group
    for g in sub.generators:
        if g not in big.index:
            raise NotSubgroup("generator outside the ambient group")
    sub_h = group_handle(sub, u.handle.field)
    mats = [u.element_matrix(g) for g in sub.generators]
    return KGMod(sub_h, mats, check=False)


def _check_normal(big: PermGroup, sub: PermGroup):
    for g in sub.generators + [tuple(range(sub.degree))]:
        if g not in big.index:
            raise NotSubgroup("subgroup not inside the ambient group")
    for s in big.generators:
        si = perm_inverse(s)
        for g in sub.generators:
            if compose(si, compose(g, s)) not in sub.index:
                raise NotNormal("subgroup not closed under conjugation")


def coset_representatives(big: PermGroup, sub: PermGroup):
    """Left cosets of sub in big: (representative element indices, map
    element index -> coset number).  The representative is the
    lexicographically least permutation of its coset, so the identity
    represents the first coset."""
    coset_of = np.full(big.order, -1, dtype=np.int64)
    reps = []
    for p in sorted(big.elements):
        i = big.index[p]
        if coset_of[i] >= 0:
            continue
        c = len(reps)
        reps.append(i)
        for g in sub.elements:
            coset_of[big.index[compose(p, g)]] = c
    return reps, coset_of


def induce(u: KGMod, into: GroupAlgebraHandle) -> KGMod:
    """Induction along a normal subgroup, on the basis t_i tensor u."""
    big = into.group
    sub = u.handle.group
    _check_normal(big, sub)
    assert (into.field.p, into.field.m) == (u.handle.field.p, u.handle.field.m)
    f = into.field
    reps, coset_of = coset_representatives(big, sub)
    r, d = len(reps), u.dim
    mats = []
    for s in big.generators:
        m = np.zeros((r * d, r * d), dtype=np.int64)
        for i, ti in enumerate(reps):
            sti = compose(s, big.elements[ti])
            j = int(coset_of[big.index[sti]])
            h = compose(perm_inverse(big.elements[reps[j]]), sti)
            m[j * d:(j + 1) * d, i * d:(i + 1) * d] = u.element_matrix(h)
        mats.append(m)
    return KGMod(into, mats, check=True)


def conjugate_module(x, u: KGMod) -> KGMod:
    """Twist of the action by the automorphism g -> x^{-1} g x."""
    g = u.handle.group
    xi = perm_inverse(tuple(x))
    mats = []
    for s in g.generators:
        tw = compose(xi, compose(s, tuple(x)))
        if tw not in g.index:
            raise NotNormal("conjugating element does not normalize the group")
        mats.append(u.element_matrix(tw))
    return KGMod(u.handle, mats, check=False)


def mackey_check(u: KGMod, into: GroupAlgebraHandle) -> bool:
    """Restriction of the induced module matches the sum of coset twists."""
    from .algebra import direct_sum, is_iso
    big = into.group
    sub = u.handle.group
    ind = induce(u, into)
    res = restrict(ind, sub)
    reps, _ = coset_representatives(big, sub)
    twists = [conjugate_module(big.elements[t], u) for t in reps]
    total = (twists[0].amod if len(twists) == 1
             else direct_sum([t.amod for t in twists]))
    return is_iso(res.amod, total)


# ---------------------------------------------------------------------------
# radical transport
# ---------------------------------------------------------------------------


def seed_radical_from_normal(into: GroupAlgebraHandle,
                             sub: GroupAlgebraHandle) -> bool:
    """Radical of the big group algebra as (radical of the subgroup) times
    coset representatives.  Valid when the normal subgroup has index prime
    to the characteristic; returns False (and seeds nothing) otherwise."""
    a = into.algebra
    if a._radical is not None:
        return True
    big, small = into.group, sub.group
    _check_normal(big, small)
    idx = big.order // small.order
    if idx % into.field.p == 0:
        return False
    jr = sub.algebra.radical_rows()
    f = into.field
    reps, _ = coset_representatives(big, small)
    blocks = []
    for t in reps:
        tperm = big.elements[t]
        cols = np.array([big.index[compose(g, tperm)] for g in small.elements],
                        dtype=np.int64)
        blk = np.zeros((jr.shape[0], big.order), dtype=np.int64)
        blk[:, cols] = jr
        blocks.append(blk)
    rows = np.vstack(blocks) if blocks else f.zeros((0, big.order))
    red, piv = rref(f, rows)
    assert len(piv) == idx * jr.shape[0]
    a._radical = red[: len(piv)]
    if a._op is not None and a._op._radical is None:
        a._op._radical = a._radical
    return True


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------


class BlockIdem:
    """Primitive central idempotent with its cut algebra.

    ``rows`` embeds the block basis back into the group algebra; the block
    algebra inherits the coefficient-of-identity form and, when the ambient
    radical is known, a precomputed radical (radical times idempotent)."""

    def __init__(self, idempotent, block_algebra: Algebra, rows,
                 handle: GroupAlgebraHandle):
        self.idempotent = idempotent
        self.block_algebra = block_algebra
        self.rows = rows
        self.handle = handle

    @property
    def dim(self) -> int:
        return self.block_algebra.dim

    def __repr__(self) -> str:
        return f"BlockIdem(dim={self.dim})"


def _block_from_idempotent(h: GroupAlgebraHandle, e) -> BlockIdem:
    a, f = h.algebra, h.field
    n = a.dim
    le = a.lmat(e)
    gen_set = set(a.generators)
    order = list(a.generators) + [c for c in range(n) if c not in gen_set]
    rows = []
    gpos = []
    ech = f.zeros((0, n))
    for c in order:
        v = le[:, c]
        cand = np.vstack([ech, v[None, :]])
        red, piv = rref(f, cand)
        if len(piv) > ech.shape[0]:
            ech = red[: len(piv)]
            if c in gen_set:
                gpos.append(len(rows))
            rows.append(v)
    rows = np.stack(rows)
    block, r = a.subalgebra_on(rows, e, generators=gpos, inherit_form=True)
    if a._radical is not None and a._radical.shape[0]:
        je = f.matmul(a.rmat(e), a._radical.T).T
        coords = solve(f, rows.T, je.T).T
        red, piv = rref(f, coords)
        block._radical = red[: len(piv)]
    elif a._radical is not None:
        block._radical = f.zeros((0, rows.shape[0]))
    return BlockIdem(e, block, rows, h)


def central_primitive_idempotents(h: GroupAlgebraHandle) -> list:
    """Complete orthogonal set of primitive central idempotents, realized
    as block algebras; deterministic order by coefficient vectors."""
    if h._blocks is not None:
        return h._blocks
    a, f = h.algebra, h.field
    zrows = a.center_rows()
    zsub, _ = a.subalgebra_on(zrows, a.unit)
    rng = np.random.default_rng(0)
    local = split_commutative(zsub, rng)
    idems = [f.matmul(c[None, :], zrows)[0] for c in local]
    idems.sort(key=lambda v: tuple(v))
    total = f.zeros(a.dim)
    for i, e in enumerate(idems):
        assert a.is_idempotent(e)
        total = f.add(total, e)
        for e2 in idems[i + 1:]:
            assert not np.any(a.mul(e, e2))
    assert np.array_equal(total, f.arr(a.unit))
    h._blocks = [_block_from_idempotent(h, e) for e in idems]
    return h._blocks


def block_cut(b: BlockIdem, u) -> AMod:
    """The summand e*U as a module over the block algebra (possibly zero)."""
    m = u.amod if isinstance(u, KGMod) else u
    assert m.alg is b.handle.algebra, "module not over the block's group"
    f = b.handle.field
    if m.n == 0:
        return zero_module(b.block_algebra)
    p = m.act(b.idempotent)
    red, piv = rref(f, p.T)
    w = red[: len(piv)]
    if w.shape[0] == 0:
        return zero_module(b.block_algebra)
    acts = np.zeros((b.dim, w.shape[0], w.shape[0]), dtype=np.int64)
    for j in range(b.dim):
        aj = m.act(b.rows[j])
        acts[j] = solve(f, w.T, f.matmul(aj, w.T))
    return AMod(b.block_algebra, acts, check=True)


def kg_from_amod(h: GroupAlgebraHandle, m: AMod) -> KGMod:
    """Generator-matrix view of a module given over the full group algebra."""
    assert m.alg is h.algebra
    return KGMod(h, [m.acts[i] for i in h.group.gen_indices], check=False)


def lift_block_module(b: BlockIdem, m: AMod) -> KGMod:
    """View a module over the block algebra as a module over the whole
    group: each group generator acts through its image in the block."""
    assert m.alg is b.block_algebra
    h = b.handle
    f = h.field
    le = h.algebra.lmat(b.idempotent)
    mats = []
    for gi in h.group.gen_indices:
        coords = solve(f, b.rows.T, le[:, gi][:, None])[:, 0]
        mats.append(m.act(coords))
    return KGMod(h, mats, check=True)


def principal_block(h: GroupAlgebraHandle) -> BlockIdem:
    """The block acting nontrivially on the trivial module: its idempotent
    has nonzero coefficient sum."""
    f = h.field
    hits = [b for b in central_primitive_idempotents(h)
            if f.sumv(f.arr(b.idempotent))]
    assert len(hits) == 1
    return hits[0]


def covers(btilde: BlockIdem, b: BlockIdem) -> bool:
    """Does the big group's block lie over the subgroup's block: nonzero
    product of the two idempotents inside the big group algebra."""
    bigh, subh = btilde.handle, b.handle
    assert (bigh.field.p, bigh.field.m) == (subh.field.p, subh.field.m)
    emb = np.zeros(bigh.group.order, dtype=np.int64)
    for i, g in enumerate(subh.group.elements):
        emb[bigh.group.index[g]] = b.idempotent[i]
    prod = bigh.algebra.mul(btilde.idempotent, emb)
    return bool(np.any(prod))


def inertia_of_block(b: BlockIdem, big: PermGroup) -> PermGroup:
    """Stabilizer of the block under conjugation, as a group generated by
    the subgroup's generators plus the stabilizing coset representatives."""
    sub = b.handle.group
    _check_normal(big, sub)
    reps, _ = coset_representatives(big, sub)
    e = b.idempotent
    gens = list(sub.generators)
    for t in reps:
        if t == 0:
            continue
        x = big.elements[t]
        xi = perm_inverse(x)
        conj = np.zeros_like(e)
        for i, g in enumerate(sub.elements):
            conj[sub.index[compose(x, compose(g, xi))]] = e[i]
        if np.array_equal(conj, e):
            gens.append(x)
    return PermGroup(big.degree, gens)
