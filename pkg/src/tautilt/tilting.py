"""Support tau-tilting pairs over a symmetric algebra and their mutation
theory: rigidity tests, left mutation by exchange, the brick-labeled Hasse
quiver, semibricks, two-term silting complexes with g-vectors, and two-term
simple-minded collections.

All heavy work is funneled through a per-algebra context that canonicalizes
indecomposables and memoizes hom spaces, translates and radical maps, so
the enumeration touches each isomorphism class once.
"""

from __future__ import annotations

import numpy as np

from .field import nullspace, rank, rref
from .algebra import (Algebra, AMod, ModMap, NotSymmetric, _end_algebra,
                      comp_dims, decompose, direct_sum, dual_module, ext1_dim,
                      hom_dim, hom_matrices, is_iso, minimal_presentation,
                      quotient_module, s_count, submodule, tau, zero_module)


class Brick:
    """A module with one-dimensional endomorphism algebra."""

    def __init__(self, module: AMod, check: bool = True):
        self.module = module
        if check:
            assert module.n > 0 and hom_dim(module, module) == 1, \
                "not a brick: endomorphisms are not scalars"

    def __repr__(self) -> str:
        return f"Brick(dim={self.module.n})"


class Semibrick:
    """Pairwise hom-orthogonal collection of bricks."""

    def __init__(self, parts: list, check: bool = True):
        self.parts = list(parts)
        if check:
            for i, a in enumerate(self.parts):
                for j, b in enumerate(self.parts):
                    if i != j:
                        assert hom_dim(a.module, b.module) == 0, \
                            "not a semibrick: maps between distinct parts"

    def __len__(self) -> int:
        return len(self.parts)


class STiltPair:
    """Support tau-tilting pair: a basic tau-rigid module M together with a
    basic projective P satisfying Hom(P, M) = 0 and |M| + |P| = #simples."""

    def __init__(self, alg: Algebra, m_parts: list, p_parts: list):
        self.alg = alg
        self.m_parts = list(m_parts)
        self.p_parts = list(p_parts)

    def module(self) -> AMod:
        if not self.m_parts:
            return zero_module(self.alg)
        if len(self.m_parts) == 1:
            return self.m_parts[0]
        return direct_sum(self.m_parts)

    def projective(self) -> AMod:
        if not self.p_parts:
            return zero_module(self.alg)
        if len(self.p_parts) == 1:
            return self.p_parts[0]
        return direct_sum(self.p_parts)

    def __repr__(self) -> str:
        return (f"STiltPair(m={[m.n for m in self.m_parts]}, "
                f"p={[p.n for p in self.p_parts]})")


class TwoTermComplex:
    """Complex of projectives concentrated in two degrees: p1 -> p0."""

    def __init__(self, p1: AMod, p0: AMod, d: ModMap):
        self.p1 = p1
        self.p0 = p0
        self.d = d


class HasseQuiver:
    """Mutation quiver of support tau-tilting pairs; arrows point from
    larger to smaller torsion classes and carry brick labels.  ``complete``
    is False when the vertex budget stopped the search early."""

    def __init__(self, vertices: list, arrows: list, complete: bool):
        self.vertices = vertices
        self.arrows = arrows
        self.complete = complete


class TwoSMC:
    """Two-term simple-minded collection: bricks in degree 0 and bricks
    placed in degree 1."""

    def __init__(self, degree0: list, degree1: list):
        self.degree0 = list(degree0)
        self.degree1 = list(degree1)


# ---------------------------------------------------------------------------
# membership tests
# ---------------------------------------------------------------------------


def in_fac(m: AMod, v: AMod) -> bool:
    """Is v a quotient of a finite direct sum of copies of m?"""
    if v.n == 0:
        return True
    if m.n == 0:
        return False
    mats = hom_matrices(m, v)
    if not mats:
        return False
    stacked = np.concatenate(mats, axis=1)
    return rank(m.alg.field, stacked) == v.n


def in_sub(m: AMod, v: AMod) -> bool:
    """Is v a submodule of a finite direct sum of copies of m?"""
    return in_fac(dual_module(m), dual_module(v))


def in_torsion_closure(s: AMod, v: AMod) -> bool:
    """Is v in the smallest torsion class containing s?  Peels the trace of
    s off the top of v until it stabilizes."""
    f = s.alg.field
    while v.n:
        mats = hom_matrices(s, v)
        if not mats:
            return False
        cols = np.concatenate(mats, axis=1)
        red, piv = rref(f, cols.T)
        if not piv:
            return False
        v, _ = quotient_module(v, red[: len(piv)])
    return True


def is_tau_rigid(m: AMod) -> bool:
    if m.alg.symmetric_form is None:
        raise NotSymmetric("tau-rigidity needs a symmetric algebra")
    if m.n == 0:
        return True
    return hom_dim(m, tau(m)) == 0


def is_support_tau_tilting(m: AMod) -> bool:
    if m.alg.symmetric_form is None:
        raise NotSymmetric("support tau-tilting needs a symmetric algebra")
    if m.n == 0:
        return True
    if not is_tau_rigid(m):
        return False
    return len(decompose(m)) == s_count(m)


# ---------------------------------------------------------------------------
# per-algebra context: canonical indecomposables with memoized data
# ---------------------------------------------------------------------------


class _Ctx:
    def __init__(self, alg: Algebra, seed: int = 0):
        assert alg.symmetric_form is not None
        self.alg = alg
        self.rng = np.random.default_rng(seed)
        simples, pims, _, _ = alg.simples_pims()
        self.n_simples = len(simples)
        self.reps: list = []
        self._buckets: dict = {}
        self._hom: dict = {}
        self._radend: dict = {}
        self._tau: dict = {}
        self.pim_idx = [self.canon(p) for p in pims]
        self.simple_idx = [self.canon(s) for s in simples]

    def canon(self, m: AMod) -> int:
        key = (m.n, comp_dims(m))
        bucket = self._buckets.setdefault(key, [])
        for i in bucket:
            if is_iso(self.reps[i], m, self.rng):
                return i
        self.reps.append(m)
        idx = len(self.reps) - 1
        bucket.append(idx)
        return idx

    def hom(self, i: int, j: int) -> list:
        if (i, j) not in self._hom:
            self._hom[(i, j)] = hom_matrices(self.reps[i], self.reps[j])
        return self._hom[(i, j)]

    def rad_end(self, i: int) -> list:
        """Radical of End(rep_i) as matrices (empty for a brick)."""
        if i not in self._radend:
            mats = self.hom(i, i)
            if len(mats) == 1:
                self._radend[i] = []
            else:
                end = _end_algebra(self.reps[i], mats)
                jrows = end.radical_rows()
                self._radend[i] = [self.alg.field.lincomb(row, mats)
                                   for row in jrows]
        return self._radend[i]

    def rad_maps(self, i: int, j: int) -> list:
        """Basis of the radical of Hom(rep_i, rep_j): everything when the
        reps are non-isomorphic, the radical endomorphisms when i == j."""
        return self.rad_end(i) if i == j else self.hom(i, j)

    def tau_idx(self, i: int):
        """Canonical index of tau(rep_i), or None when rep_i is projective."""
        if i not in self._tau:
            if i in self.pim_idx:
                self._tau[i] = None
            else:
                self._tau[i] = self.canon(tau(self.reps[i], self.rng))
        return self._tau[i]

    def hom_tau_dim(self, i: int, j: int) -> int:
        tj = self.tau_idx(j)
        return 0 if tj is None else len(self.hom(i, tj))

    def in_fac_idx(self, u_indices, x: int) -> bool:
        xd = self.reps[x].n
        mats = []
        for u in set(u_indices):
            mats.extend(self.hom(u, x))
        if not mats:
            return False
        return rank(self.alg.field, np.concatenate(mats, axis=1)) == xd

    def support(self, indices) -> frozenset:
        out = set()
        for i in indices:
            fp = comp_dims(self.reps[i])
            out.update(k for k, c in enumerate(fp) if c)
        return frozenset(out)

    def pair_valid(self, m_idx, p_pos) -> bool:
        if len(m_idx) != len(set(m_idx)) or len(p_pos) != len(set(p_pos)):
            return False
        if len(m_idx) + len(p_pos) != self.n_simples:
            return False
        for i in m_idx:
            for j in m_idx:
                if self.hom_tau_dim(i, j):
                    return False
        supp = self.support(m_idx)
        return all(k not in supp for k in p_pos)

    # -- exchange --

    def minimal_approx(self, x: int, u_indices):
        """Minimal left approximation of rep_x into summands of the u's:
        list of (u_index, map matrix), one entry per needed copy."""
        f = self.alg.field
        u_classes = sorted(set(u_indices))
        comps = []
        for u in u_classes:
            hx = self.hom(x, u)
            if not hx:
                continue
            # maps that factor through a radical map into rep_u
            vecs = []
            for w in u_classes:
                for g in self.hom(x, w):
                    for r in self.rad_maps(w, u):
                        vecs.append(f.matmul(r, g).reshape(-1))
            full = np.stack([h.reshape(-1) for h in hx])
            if vecs:
                radspan = np.stack(vecs)
                red, piv = rref(f, radspan)
                base = red[: len(piv)]
            else:
                base = f.zeros((0, full.shape[1]))
            ech = base
            for h in hx:
                cand = np.vstack([ech, h.reshape(-1)[None, :]])
                red, piv = rref(f, cand)
                if len(piv) > ech.shape[0]:
                    ech = red[: len(piv)]
                    comps.append((u, h))
        return comps

    def mutate(self, m_idx: tuple, p_pos: tuple, at: int):
        """Left mutation at position ``at`` of m_idx, or None when illegal.
        Returns (new_m_idx, new_p_pos)."""
        x = m_idx[at]
        u_indices = m_idx[:at] + m_idx[at + 1:]
        if self.in_fac_idx(u_indices, x):
            return None
        comps = self.minimal_approx(x, u_indices)
        f = self.alg.field
        if comps:
            summands = [self.reps[u] for u, _ in comps]
            big = summands[0] if len(summands) == 1 else direct_sum(summands)
            fmat = np.concatenate([h for _, h in comps], axis=0)
            red, piv = rref(f, fmat.T)
            coker, _ = quotient_module(big, red[: len(piv)])
        else:
            coker = zero_module(self.alg)
        new_idx = []
        for piece, mult in decompose(coker, self.rng):
            c = self.canon(piece)
            if c not in u_indices:
                new_idx.append(c)
        assert len(set(new_idx)) <= 1, "exchange produced several new classes"
        if new_idx:
            new_m = tuple(sorted(u_indices + (new_idx[0],)))
            new_p = p_pos
        else:
            lost = self.support((x,)) - self.support(u_indices)
            lost = lost - set(p_pos)
            assert len(lost) == 1, "support did not shrink by one simple"
            new_m = tuple(sorted(u_indices))
            new_p = tuple(sorted(p_pos + (next(iter(lost)),)))
        assert self.pair_valid(new_m, new_p), "exchange left the tilting fan"
        assert (new_m, new_p) != (m_idx, p_pos)
        return new_m, new_p

    def label(self, m_idx: tuple, at: int) -> AMod:
        """Brick label X / (sum of images of radical maps M -> X)."""
        x = m_idx[at]
        f = self.alg.field
        cols = []
        for j in m_idx:
            for g in self.rad_maps(j, x):
                cols.append(g)
        if cols:
            stacked = np.concatenate(cols, axis=1)
            red, piv = rref(f, stacked.T)
            rows = red[: len(piv)]
        else:
            rows = f.zeros((0, self.reps[x].n))
        out, _ = quotient_module(self.reps[x], rows)
        return out

    def pair(self, m_idx, p_pos) -> STiltPair:
        _, pims, _, _ = self.alg.simples_pims()
        return STiltPair(self.alg, [self.reps[i] for i in m_idx],
                         [pims[k] for k in p_pos])


def _ctx(alg: Algebra) -> _Ctx:
    if not hasattr(alg, "_tilt_ctx"):
        alg._tilt_ctx = _Ctx(alg)
    return alg._tilt_ctx


def _pair_indices(x: STiltPair):
    ctx = _ctx(x.alg)
    m_idx = tuple(sorted(ctx.canon(m) for m in x.m_parts))
    p_pos = []
    for p in x.p_parts:
        c = ctx.canon(p)
        p_pos.append(ctx.pim_idx.index(c))
    return ctx, m_idx, tuple(sorted(p_pos))


# ---------------------------------------------------------------------------
# mutation, labels, semibricks
# ---------------------------------------------------------------------------


def left_mutation(x: STiltPair, at: int):
    """Exchange the summand m_parts[at]; None when that summand admits no
    left mutation (it generates part of the torsion class of the rest)."""
    if not 0 <= at < len(x.m_parts):
        raise IndexError(f"no summand at position {at}")
    ctx, m_idx, p_pos = _pair_indices(x)
    c = ctx.canon(x.m_parts[at])
    res = ctx.mutate(m_idx, p_pos, m_idx.index(c))
    if res is None:
        return None
    return ctx.pair(*res)


def brick_label(x: STiltPair, at: int):
    """Brick labeling the mutation arrow at the given summand, or None when
    there is no left mutation there."""
    if not 0 <= at < len(x.m_parts):
        raise IndexError(f"no summand at position {at}")
    ctx, m_idx, _ = _pair_indices(x)
    c = ctx.canon(x.m_parts[at])
    out = ctx.label(m_idx, m_idx.index(c))
    return Brick(out) if out.n else None


def left_semibrick(x: STiltPair) -> Semibrick:
    """M / (sum of images of all radical maps M -> M), as bricks."""
    parts = []
    for at in range(len(x.m_parts)):
        b = brick_label(x, at)
        if b is not None:
            parts.append(b)
    return Semibrick(parts)


def dual_pair(x: STiltPair) -> AMod:
    """tau(M) + P: the support tau-inverse-tilting module on the other side
    of the torsion pair."""
    if x.alg.symmetric_form is None:
        raise NotSymmetric("dual pair needs a symmetric algebra")
    mods = []
    m = x.module()
    if m.n:
        t = tau(m)
        if t.n:
            mods.append(t)
    mods.extend(x.p_parts)
    if not mods:
        return zero_module(x.alg)
    return mods[0] if len(mods) == 1 else direct_sum(mods)


def right_semibrick(n: AMod) -> Semibrick:
    """Largest semibrick in the socle-like subspace of n: intersection of
    kernels of all radical maps n -> n, split into bricks."""
    if n.n == 0:
        return Semibrick([])
    ctx = _ctx(n.alg)
    f = n.alg.field
    parts = []
    summand_idx = [ctx.canon(rep) for rep, _ in decompose(n, ctx.rng)]
    for y in summand_idx:
        mats = []
        for w in summand_idx:
            mats.extend(ctx.rad_maps(y, w))
        if mats:
            stacked = np.concatenate(mats, axis=0)
            kern = nullspace(f, stacked)
        else:
            kern = f.eye(ctx.reps[y].n)
        if kern.shape[1]:
            piece = submodule(ctx.reps[y], kern.T)
            for rep, mult in decompose(piece, ctx.rng):
                parts.extend([Brick(rep)] * mult)
    return Semibrick(parts)


# ---------------------------------------------------------------------------
# Hasse quiver enumeration
# ---------------------------------------------------------------------------


def enumerate_hasse(alg: Algebra, max_vertices: int = 10000) -> HasseQuiver:
    """Breadth-first left-mutation closure from the pair (regular, 0).

    Stops expanding once max_vertices is exceeded and reports the quiver as
    incomplete instead of failing."""
    ctx = _ctx(alg)
    top = (tuple(sorted(ctx.pim_idx)), ())
    index_of = {top: 0}
    order = [top]
    arrows = []
    complete = True
    head = 0
    while head < len(order):
        m_idx, p_pos = order[head]
        src = head
        head += 1
        for at in range(len(m_idx)):
            res = ctx.mutate(m_idx, p_pos, at)
            if res is None:
                continue
            if res not in index_of:
                if len(order) >= max_vertices:
                    complete = False
                    continue
                index_of[res] = len(order)
                order.append(res)
            lab = ctx.label(m_idx, at)
            assert lab.n, "legal mutation carries a nonzero brick label"
            arrows.append((src, index_of[res], Brick(lab)))
    vertices = [ctx.pair(m, p) for m, p in order]
    return HasseQuiver(vertices, arrows, complete)


# ---------------------------------------------------------------------------
# two-term silting and simple-minded collections
# ---------------------------------------------------------------------------


def two_term_silting(x: STiltPair) -> TwoTermComplex:
    """The silting complex (P1 + P -> P0) built from the minimal
    presentation P1 -> P0 of M, with P pushed into degree -1."""
    f = x.alg.field
    m = x.module()
    p1m, p0, d = minimal_presentation(m)
    pextra = x.projective()
    if pextra.n == 0:
        return TwoTermComplex(p1m, p0, d)
    if p1m.n == 0:
        p1 = pextra
    else:
        p1 = direct_sum([p1m, pextra])
    mat = np.concatenate(
        [d.matrix, f.zeros((p0.n, pextra.n))], axis=1)
    return TwoTermComplex(p1, p0, ModMap(p1, p0, mat, check=False))


def is_two_term_presilting(t: TwoTermComplex) -> bool:
    """No maps from the complex to its shift: every p1 -> p0 map must be a
    combination of h(d(.)) and d(h'(.)) homotopies."""
    f = t.p0.alg.field
    maps10 = hom_matrices(t.p1, t.p0)
    if not maps10:
        return True
    d = t.d.matrix
    vecs = []
    for h in hom_matrices(t.p0, t.p0):
        vecs.append(f.matmul(h, d).reshape(-1))
    for h in hom_matrices(t.p1, t.p1):
        vecs.append(f.matmul(d, h).reshape(-1))
    if vecs:
        base = np.stack(vecs)
        red, piv = rref(f, base)
        span = red[: len(piv)]
    else:
        span = f.zeros((0, t.p0.n * t.p1.n))
    for g in maps10:
        cand = np.vstack([span, g.reshape(-1)[None, :]])
        red, piv = rref(f, cand)
        if len(piv) > span.shape[0]:
            return False
    return True


def g_vector(t: TwoTermComplex):
    """Class [p0] - [p1] in the basis of projective indecomposables."""
    alg = t.p0.alg
    simples, _, _, _ = alg.simples_pims()
    out = []
    for s in simples:
        out.append(hom_dim(t.p0, s) - hom_dim(t.p1, s))
    return tuple(out)


def two_smc(x: STiltPair) -> TwoSMC:
    """Degree-0 bricks from the left semibrick of the pair, degree-1 bricks
    from the right semibrick of its dual module."""
    deg0 = left_semibrick(x).parts
    deg1 = right_semibrick(dual_pair(x)).parts
    return TwoSMC(deg0, deg1)


def validate_two_smc(c: TwoSMC) -> bool:
    """Orthogonality conditions plus the cardinality proxy for generation."""
    parts0 = [b.module for b in c.degree0]
    parts1 = [b.module for b in c.degree1]
    if not parts0 and not parts1:
        return False
    alg = (parts0 + parts1)[0].alg
    for m in parts0 + parts1:
        if hom_dim(m, m) != 1:
            return False
    for group in (parts0, parts1):
        for i, a in enumerate(group):
            for j, b in enumerate(group):
                if i != j and hom_dim(a, b):
                    return False
    for a in parts0:
        for b in parts1:
            if hom_dim(a, b) or ext1_dim(a, b):
                return False
    simples, _, _, _ = alg.simples_pims()
    return len(parts0) + len(parts1) == len(simples)
