"""Finite dimensional associative algebras over F_{p^m} and their modules.

An algebra is given by its structure tensor on a fixed basis.  Modules are
given by one action matrix per basis element.  On top of that sit the
homological operations used by tau-tilting theory: radicals, simples and
their projective covers, Krull-Schmidt decomposition, syzygies, minimal
presentations, duals, and the translate tau = Omega^2 for symmetric
algebras.

Hom spaces are computed through projective presentations: Hom(Ae, N) is
canonically e*N, so a map out of M is a tuple of slice vectors subject to
one relation per presentation generator.  That keeps every linear system
small even when the modules are not.
"""

from __future__ import annotations

import numpy as np

from .field import (Field, NoSolution, charpoly, inv_matrix, kron, nullspace,
                    rank, rref, solve)


class FieldNotSplitting(Exception):
    """A simple module has endomorphism field larger than the base field.

    ``degree`` is the extension degree of the base field that would split
    the offending simple.
    """

    def __init__(self, degree: int, message: str | None = None):
        self.degree = int(degree)
        super().__init__(message or f"splitting needs a degree {degree} extension")


class ZeroModule(Exception):
    """Operation undefined on the zero module."""


class NotSymmetric(Exception):
    """Operation requires a symmetric algebra (one with a symmetric form)."""


# ---------------------------------------------------------------------------
# polynomial helpers over a Field (coefficient vectors, low degree first)
# ---------------------------------------------------------------------------


def _ptrim(a):
    a = np.asarray(a, dtype=np.int64)
    end = len(a)
    while end > 1 and a[end - 1] == 0:
        end -= 1
    return a[:end]


def _pdeg(a) -> int:
    a = _ptrim(a)
    return 0 if (len(a) == 1 and a[0] == 0) else len(a) - 1


def _pis_zero(a) -> bool:
    return not np.asarray(a).any()


def _ppad(a, n: int):
    a = np.asarray(a, dtype=np.int64)
    if len(a) >= n:
        return a
    out = np.zeros(n, dtype=np.int64)
    out[: len(a)] = a
    return out


def _padd(f: Field, a, b):
    n = max(len(a), len(b))
    return _ptrim(f.add(_ppad(a, n), _ppad(b, n)))


def _psub(f: Field, a, b):
    n = max(len(a), len(b))
    return _ptrim(f.sub(_ppad(a, n), _ppad(b, n)))


def _pmul(f: Field, a, b):
    a, b = _ptrim(a), _ptrim(b)
    if _pis_zero(a) or _pis_zero(b):
        return np.zeros(1, dtype=np.int64)
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i, c in enumerate(a):
        if c:
            out[i:i + len(b)] = f.add(out[i:i + len(b)], f.mul(int(c), b))
    return out


def _pdivmod(f: Field, a, b):
    a, b = _ptrim(a).copy(), _ptrim(b)
    db = len(b) - 1
    assert not _pis_zero(b)
    lead_inv = int(f.inv(int(b[-1])))
    if len(a) - 1 < db:
        return np.zeros(1, dtype=np.int64), a
    quo = np.zeros(len(a) - db, dtype=np.int64)
    for k in range(len(a) - db - 1, -1, -1):
        c = int(f.mul(int(a[k + db]), lead_inv))
        if c:
            quo[k] = c
            a[k:k + db + 1] = f.sub(a[k:k + db + 1], f.mul(c, b))
    return quo, _ptrim(a)


def _pmonic(f: Field, a):
    a = _ptrim(a)
    if _pis_zero(a):
        return a
    return f.mul(int(f.inv(int(a[-1]))), a)


def _pgcd(f: Field, a, b):
    a, b = _ptrim(a), _ptrim(b)
    while not _pis_zero(b):
        _, r = _pdivmod(f, a, b)
        a, b = b, r
    return _pmonic(f, a)


def _pxgcd(f: Field, a, b):
    # returns (g, u, v) with u*a + v*b = g and g monic
    r0, r1 = _ptrim(a), _ptrim(b)
    u0, u1 = np.array([1], dtype=np.int64), np.zeros(1, dtype=np.int64)
    v0, v1 = np.zeros(1, dtype=np.int64), np.array([1], dtype=np.int64)
    while not _pis_zero(r1):
        q, r = _pdivmod(f, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _psub(f, u0, _pmul(f, q, u1))
        v0, v1 = v1, _psub(f, v0, _pmul(f, q, v1))
    if _pis_zero(r0):
        return r0, u0, v0
    c = int(f.inv(int(r0[-1])))
    return f.mul(c, r0), f.mul(c, u0), f.mul(c, v0)


def _pderiv(f: Field, a):
    a = _ptrim(a)
    if len(a) == 1:
        return np.zeros(1, dtype=np.int64)
    out = np.zeros(len(a) - 1, dtype=np.int64)
    for k in range(1, len(a)):
        out[k - 1] = f.mul(k % f.p, int(a[k]))
    return _ptrim(out)


def _ppow_mod(f: Field, base, e: int, mod):
    result = np.array([1], dtype=np.int64)
    base = _pdivmod(f, base, mod)[1]
    while e > 0:
        if e & 1:
            result = _pdivmod(f, _pmul(f, result, base), mod)[1]
        base = _pdivmod(f, _pmul(f, base, base), mod)[1]
        e >>= 1
    return result


def _proots(f: Field, a):
    xs = np.arange(f.q, dtype=np.int64)
    acc = np.zeros(f.q, dtype=np.int64)
    for c in _ptrim(a)[::-1]:
        acc = f.add(f.mul(acc, xs), int(c))
    return xs[acc == 0]


def _equal_degree_split(f: Field, mu, d: int, rng):
    """Proper divisor of a squarefree mu whose irreducible factors all have
    degree d (at least two of them)."""
    n = _pdeg(mu)
    for _ in range(60):
        a = _ptrim(rng.integers(0, f.q, size=n, dtype=np.int64))
        if _pdeg(a) < 1:
            continue
        g = _pgcd(f, a, mu)
        if 0 < _pdeg(g) < n:
            return g
        if f.p == 2:
            # additive trace map to F_2 lands in {0,1} on each factor
            b = np.zeros(1, dtype=np.int64)
            t = a
            for _ in range(d * f.m):
                b = _padd(f, b, t)
                t = _pdivmod(f, _pmul(f, t, t), mu)[1]
            g = _pgcd(f, b, mu)
        else:
            b = _ppow_mod(f, a, (f.q**d - 1) // 2, mu)
            g = _pgcd(f, _psub(f, b, np.array([1], dtype=np.int64)), mu)
        if 0 < _pdeg(g) < n:
            return g
    return None


def _seed_divisor(f: Field, mu, rng):
    """Some nontrivial proper divisor of mu, or None when mu is a power of
    a single irreducible (a primary minimal polynomial)."""
    deg = _pdeg(mu)
    if deg <= 1:
        return None
    roots = _proots(f, mu)
    if roots.size:
        return np.array([int(f.neg(int(roots[0]))), 1], dtype=np.int64)
    dmu = _pderiv(f, mu)
    if _pis_zero(dmu):
        # mu(t) = nu(t^p): take the p-th root coefficientwise
        root = np.zeros(deg // f.p + 1, dtype=np.int64)
        for k in range(len(root)):
            c = int(mu[k * f.p])
            root[k] = f.frob_inv(c, 1) if f.m > 1 else c
        return _seed_divisor(f, _ptrim(root), rng)
    rad = _pgcd(f, mu, dmu)
    if _pdeg(rad) > 0:
        sf = _pdivmod(f, mu, rad)[0]
        return _seed_divisor(f, sf, rng)
    x = np.array([0, 1], dtype=np.int64)
    h = x
    for d in range(1, deg // 2 + 1):
        h = _ppow_mod(f, h, f.q, mu)
        g = _pgcd(f, _psub(f, h, x), mu)
        gd = _pdeg(g)
        if 0 < gd < deg:
            return g
        if gd == deg:
            return _equal_degree_split(f, mu, d, rng)
    return None


def _coprime_split(f: Field, mu, rng):
    """mu = f1*f2 with gcd(f1, f2) = 1, both nonconstant, or None."""
    g = _seed_divisor(f, mu, rng)
    if g is None:
        return None
    f1 = np.array([1], dtype=np.int64)
    rest = mu
    cur = _pgcd(f, rest, g)
    while _pdeg(cur) >= 1:
        f1 = _pmul(f, f1, cur)
        rest, r = _pdivmod(f, rest, cur)
        assert _pis_zero(r)
        cur = _pgcd(f, rest, g)
    if _pdeg(f1) >= 1 and _pdeg(rest) >= 1:
        return _pmonic(f, f1), _pmonic(f, rest)
    return None


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------


class Algebra:
    """Associative unital algebra given by structure constants.

    ``mult[i, j]`` is the coordinate vector of ``b_i * b_j``; ``unit`` the
    coordinate vector of 1; ``generators`` a list of basis indices that
    together with the unit generate multiplicatively; ``symmetric_form``
    an optional linear functional lambda with lambda(ab) = lambda(ba) and
    nondegenerate Gram matrix.
    """

    def __init__(self, field: Field, mult, unit, generators, symmetric_form=None,
                 check: bool = True):
        self.field = field
        self.mult = field.arr(mult)
        n = self.mult.shape[0]
        assert self.mult.shape == (n, n, n)
        self.dim = n
        self.unit = field.arr(unit)
        self.generators = list(generators)
        self.symmetric_form = None if symmetric_form is None else field.arr(symmetric_form)
        # lmul[i] acts on column vectors as left multiplication by b_i
        self.lmul = self.mult.transpose(0, 2, 1)
        self.rmul = self.mult.transpose(1, 2, 0)
        self._op = None
        self._center = None
        self._radical = None
        self._sp = None
        self._regular = None
        if check:
            self._check()

    def _check(self) -> None:
        f, n = self.field, self.dim
        assert np.array_equal(f.lincomb(self.unit, self.lmul), f.eye(n)), "unit law fails"
        assert np.array_equal(f.lincomb(self.unit, self.rmul), f.eye(n)), "unit law fails"
        if f.m == 1 and n <= 40:
            left = np.einsum("ijr,rkl->ijkl", self.mult, self.mult) % f.p
            right = np.einsum("jkr,irl->ijkl", self.mult, self.mult) % f.p
            assert np.array_equal(left, right), "associativity fails"
        else:
            idx = list(range(n)) if n <= 12 else sorted(
                set(self.generators) | set(range(0, n, max(1, n // 8))))
            for i in idx:
                for j in idx:
                    prod = f.lincomb(self.mult[i, j], self.lmul)
                    assert np.array_equal(prod, f.matmul(self.lmul[i], self.lmul[j])), \
                        "associativity fails"
        if self.symmetric_form is not None:
            gram = self.gram_matrix()
            if not np.array_equal(gram, gram.T):
                raise NotSymmetric("form is not symmetric")
            if rank(f, gram) != n:
                raise NotSymmetric("form is degenerate")

    def gram_matrix(self):
        f, lam = self.field, self.symmetric_form
        if f.m == 1:
            return np.einsum("ijk,k->ij", self.mult, lam) % f.p
        return np.stack([f.sumv(f.mul(self.mult[i], lam[None, :]), axis=1)
                         for i in range(self.dim)])

    # -- element arithmetic --

    def lmat(self, x):
        return self.field.lincomb(x, self.lmul)

    def rmat(self, x):
        return self.field.lincomb(x, self.rmul)

    def mul(self, x, y):
        return self.field.matmul(self.lmat(x), self.field.arr(y)[:, None])[:, 0]

    def power(self, x, k: int):
        f = self.field
        result = self.unit.copy()
        base = f.arr(x)
        while k > 0:
            if k & 1:
                result = self.mul(base, result)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_idempotent(self, x) -> bool:
        return np.array_equal(self.mul(x, x), self.field.arr(x))

    # -- derived algebras --

    def opposite(self) -> "Algebra":
        if self._op is None:
            op = Algebra(self.field, self.mult.transpose(1, 0, 2), self.unit,
                         self.generators, self.symmetric_form, check=False)
            op._op = self
            # the radical is a two-sided ideal: same subspace on both sides
            op._radical = self._radical
            self._op = op
        return self._op

    def center_rows(self):
        if self._center is None:
            f = self.field
            idx = sorted(set(self.generators))
            if not idx:
                self._center = f.eye(self.dim)
            else:
                eqs = np.vstack([f.sub(self.lmul[i], self.rmul[i]) for i in idx])
                self._center = nullspace(f, eqs).T
        return self._center

    def subalgebra_on(self, rows, unit_coords, generators=None,
                      inherit_form=False):
        """Algebra structure on the span of ``rows`` (must be closed under
        multiplication and contain ``unit_coords``).

        ``generators`` are row indices generating the subalgebra (defaults
        to all rows); ``inherit_form`` restricts the ambient symmetric form
        to the span."""
        f = self.field
        rows = f.arr(rows)
        k = rows.shape[0]
        prods = np.zeros((k * k, self.dim), dtype=np.int64)
        for i in range(k):
            li = self.lmat(rows[i])
            prods[i * k:(i + 1) * k] = f.matmul(li, rows.T).T
        rhs = np.vstack([prods, f.arr(unit_coords)[None, :]])
        sol = solve(f, rows.T, rhs.T)
        mult = sol[:, : k * k].T.reshape(k, k, k)
        unit = sol[:, k * k]
        form = None
        if inherit_form and self.symmetric_form is not None:
            form = f.matmul(rows, f.arr(self.symmetric_form)[:, None])[:, 0]
        gens = list(range(k)) if generators is None else list(generators)
        sub = Algebra(f, mult, unit, gens, symmetric_form=form,
                      check=inherit_form)
        return sub, rows

    def quotient_by_ideal(self, ideal_rows):
        """Quotient algebra A/I with coordinate projection and a section."""
        f = self.field
        ideal_rows = f.arr(ideal_rows)
        if ideal_rows.size:
            red, piv = rref(f, ideal_rows)
            red = red[: len(piv)]
        else:
            red, piv = f.zeros((0, self.dim)), []
        comp_idx = [j for j in range(self.dim) if j not in set(piv)]
        comp = f.eye(self.dim)[comp_idx]
        k = len(piv)
        basis = np.vstack([red, comp]) if k else comp
        t = inv_matrix(f, basis.T)
        proj = t[k:, :]
        sect = basis.T[:, k:]
        nq = self.dim - k
        mult = np.zeros((nq, nq, nq), dtype=np.int64)
        for i in range(nq):
            li = self.lmat(comp[i])
            mult[i] = f.matmul(proj, f.matmul(li, comp.T)).T
        unit = f.matmul(proj, self.unit[:, None])[:, 0]
        q = Algebra(f, mult, unit, list(range(nq)), check=False)
        return q, proj, sect

    def regular_module(self) -> "AMod":
        if self._regular is None:
            self._regular = AMod(self, self.lmul.copy(), check=False)
        return self._regular

    # -- radical --

    def radical_rows(self):
        """Echelonized basis of the Jacobson radical.

        Level i cuts the running subspace by the characteristic polynomial
        coefficient form (x, y) -> c_{p^i}(L_x L_y); level 0 is the plain
        trace form.  The level-i form is p^i-semilinear in x, so kernel
        coordinates are de-twisted by inverse Frobenius.
        """
        if self._radical is not None:
            return self._radical
        f, n = self.field, self.dim
        rows = f.eye(n)
        level = 0
        while f.p**level <= n and rows.shape[0] > 0:
            r = rows.shape[0]
            if f.m == 1:
                L = np.tensordot(rows, self.lmul, axes=(1, 0)) % f.p
            else:
                L = np.stack([f.lincomb(v, self.lmul) for v in rows])
            if level == 0:
                if f.m == 1:
                    gram = np.einsum("aij,bji->ab", L, L) % f.p
                else:
                    gram = np.zeros((r, r), dtype=np.int64)
                    for a in range(r):
                        for b in range(a, r):
                            t = f.sumv(f.mul(L[a], L[b].T))
                            gram[a, b] = t
                            gram[b, a] = t
            else:
                coef_index = n - f.p**level
                gram = np.zeros((r, r), dtype=np.int64)
                for a in range(r):
                    for b in range(r):
                        prod = f.matmul(L[a], L[b])
                        gram[a, b] = charpoly(f, prod)[coef_index]
            kern = nullspace(f, gram.T)
            if kern.shape[1] == 0:
                rows = f.zeros((0, n))
                break
            coords = f.frob_inv(kern.T, level) if (f.m > 1 and level > 0) else kern.T
            rows = f.matmul(coords, rows)
            red, piv = rref(f, rows)
            rows = red[: len(piv)]
            level += 1
        self._radical = rows
        if self._op is not None and self._op._radical is None:
            self._op._radical = rows
        return self._radical

    # -- simples and projective indecomposables --

    def simples_pims(self, seed: int = 0):
        """(simples, pims, primitive idempotents, pim basis rows), one per
        isomorphism class; raises FieldNotSplitting when some simple has
        endomorphisms beyond the base field."""
        if self._sp is None:
            self._sp = _simples_pims(self, np.random.default_rng(seed))
        return self._sp

    def split_ok(self) -> bool:
        try:
            self.simples_pims()
            return True
        except FieldNotSplitting:
            return False


def algebra_radical(a: Algebra):
    return a.radical_rows()


# ---------------------------------------------------------------------------
# commutative splitting and idempotents
# ---------------------------------------------------------------------------


def minpoly_in(a: Algebra, x):
    f = a.field
    vecs = [a.unit.copy()]
    v = a.unit.copy()
    while True:
        v = a.mul(x, v)
        stack = np.stack(vecs)
        try:
            c = solve(f, stack.T, v)
        except NoSolution:
            vecs.append(v)
            continue
        k = len(vecs)
        mu = np.zeros(k + 1, dtype=np.int64)
        mu[:k] = f.neg(c)
        mu[k] = 1
        return mu


def _eval_poly_at(a: Algebra, coeffs, x):
    acc = a.field.zeros(a.dim)
    for c in _ptrim(coeffs)[::-1]:
        acc = a.mul(x, acc)
        if c:
            acc = a.field.add(acc, a.field.mul(int(c), a.unit))
    return acc


def _crt_idem(a: Algebra, x, f1, f2):
    f = a.field
    g, u, v = _pxgcd(f, f1, f2)
    assert _pdeg(g) == 0 and int(g[0]) == 1, "factors are not coprime"
    e = _eval_poly_at(a, _pmul(f, v, f2), x)
    assert a.is_idempotent(e)
    return e


def _split_candidates(a: Algebra, rng):
    n = a.dim
    eye = a.field.eye(n)
    for i in range(n):
        yield eye[i]
    if n <= 16:
        for i in range(n):
            for j in range(i + 1, n):
                yield a.field.add(eye[i], eye[j])
    for _ in range(200):
        yield rng.integers(0, a.field.q, size=n, dtype=np.int64)


def split_commutative(a: Algebra, rng) -> list:
    """Orthogonal primitive idempotents of a commutative algebra, summing
    to the unit.  A piece whose residue field is a proper extension stays
    whole; callers decide whether that is an error."""
    f = a.field
    if a.dim == 1:
        return [a.unit.copy()]
    for x in _split_candidates(a, rng):
        mu = minpoly_in(a, x)
        cs = _coprime_split(f, mu, rng)
        if cs is None:
            continue
        e = _crt_idem(a, x, *cs)
        if not e.any() or np.array_equal(e, a.unit):
            continue
        out = []
        for idem in (e, f.sub(a.unit, e)):
            red, piv = rref(f, a.lmat(idem).T)
            rows = red[: len(piv)]
            sub, rows = a.subalgebra_on(rows, idem)
            for c in split_commutative(sub, rng):
                out.append(f.matmul(c[None, :], rows)[0])
        return out
    return [a.unit.copy()]


def p_power_lift(a: Algebra, u):
    """Idempotent lift of u modulo the radical: u^(p^k) with p^k >= dim."""
    f = a.field
    k = 0
    while f.p**k < max(a.dim, 2):
        k += 1
    e = a.power(u, f.p**k)
    assert a.is_idempotent(e), "residue was not idempotent modulo the radical"
    return e


def _corner_rows(a: Algebra, e):
    f = a.field
    both = f.matmul(a.lmat(e), a.rmat(e))
    red, piv = rref(f, both.T)
    return red[: len(piv)]


def _find_split_idem(a: Algebra, rng):
    """A nontrivial exact idempotent, or None when every candidate has a
    primary minimal polynomial."""
    for x in _split_candidates(a, rng):
        mu = minpoly_in(a, x)
        cs = _coprime_split(a.field, mu, rng)
        if cs is None:
            continue
        e = _crt_idem(a, x, *cs)
        if e.any() and not np.array_equal(e, a.unit):
            return e
    return None


def _is_commutative(a: Algebra) -> bool:
    return np.array_equal(a.mult, a.mult.transpose(1, 0, 2))


def _primitive_idem_below(abar: Algebra, c, rng):
    """Primitive idempotent of the semisimple algebra abar under the given
    idempotent.  Raises FieldNotSplitting when the final corner is a proper
    field extension."""
    f = abar.field
    cur = f.arr(c)
    while True:
        rows = _corner_rows(abar, cur)
        corner, rows = abar.subalgebra_on(rows, cur)
        if corner.dim == 1:
            return cur
        if _is_commutative(corner):
            pieces = split_commutative(corner, rng)
            if len(pieces) == 1:
                raise FieldNotSplitting(corner.dim)
            cur = f.matmul(pieces[0][None, :], rows)[0]
            continue
        e = _find_split_idem(corner, rng)
        assert e is not None, "noncommutative semisimple corner must split"
        cur = f.matmul(e[None, :], rows)[0]


def _greedy_module_rows(f: Field, start, columns):
    """Independent row collection: start rows first, then columns of the
    given matrix, keeping an incremental echelon form."""
    rows = []
    ech = f.zeros((0, columns.shape[0]))
    for v in list(start) + [columns[:, j] for j in range(columns.shape[1])]:
        cand = np.vstack([ech, v[None, :]])
        red, piv = rref(f, cand)
        if len(piv) > ech.shape[0]:
            rows.append(v)
            ech = red[: len(piv)]
    return np.stack(rows) if rows else f.zeros((0, columns.shape[0]))


def _simples_pims(a: Algebra, rng):
    f, n = a.field, a.dim
    jrows = a.radical_rows()
    abar, proj, sect = a.quotient_by_ideal(jrows)
    zrows = abar.center_rows()
    zsub, zr = abar.subalgebra_on(zrows, abar.unit)
    cents = [f.matmul(c[None, :], zr)[0] for c in split_commutative(zsub, rng)]
    cents.sort(key=lambda v: tuple(int(t) for t in v))
    prim_bar = [_primitive_idem_below(abar, c, rng) for c in cents]
    # lift one idempotent per class, orthogonalizing against earlier lifts
    idems = []
    s = f.zeros(n)
    for fb in prim_bar:
        u = f.matmul(sect, fb[:, None])[:, 0]
        one_minus_s = f.sub(a.unit, s)
        u = a.mul(a.mul(one_minus_s, u), one_minus_s)
        e = p_power_lift(a, u)
        assert e.any()
        for prev in idems:
            assert not a.mul(e, prev).any() and not a.mul(prev, e).any()
        idems.append(e)
        s = f.add(s, e)
    regular = a.regular_module()
    pims, simples, rows_list = [], [], []
    for e in idems:
        rows = _greedy_module_rows(f, [e], a.rmat(e))
        pim = submodule(regular, rows)
        jm, _ = radical_mod(pim)
        simple, _ = quotient_module(pim, jm)
        pims.append(pim)
        simples.append(simple)
        rows_list.append(rows)
    for s_mod in simples:
        d = len(_hom_direct(s_mod, s_mod))
        if d != 1:
            raise FieldNotSplitting(d)
    order = sorted(range(len(idems)),
                   key=lambda i: (simples[i].n, pims[i].n,
                                  tuple(int(t) for t in idems[i])))
    simples = [simples[i] for i in order]
    pims = [pims[i] for i in order]
    idems = [idems[i] for i in order]
    rows_list = [rows_list[i] for i in order]
    # checksum: sum over classes of dim(PIM) * multiplicity in the regular
    # module, with multiplicity = dim of e*(A/J)
    chk = 0
    for e, pim in zip(idems, pims):
        stacked = np.vstack([jrows, a.lmat(e).T]) if jrows.size else a.lmat(e).T
        mult_in_top = rank(f, stacked) - jrows.shape[0]
        chk += pim.n * mult_in_top
    assert chk == n, f"dimension checksum {chk} != {n}"
    return simples, pims, idems, rows_list


def simples_and_pims(a: Algebra):
    simples, pims, _, _ = a.simples_pims()
    return list(zip(simples, pims))


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------


class AMod:
    """Module over an Algebra: acts[i] is the matrix of basis element i,
    acting on column vectors."""

    def __init__(self, alg: Algebra, acts, check: bool = True):
        self.alg = alg
        self.acts = alg.field.arr(acts)
        assert self.acts.ndim == 3 and self.acts.shape[0] == alg.dim
        self.n = self.acts.shape[1]
        assert self.acts.shape == (alg.dim, self.n, self.n)
        self._pres = None
        self._slices = {}
        self._pimacts = {}
        self._fp = None
        if check and self.n:
            f = alg.field
            assert np.array_equal(f.lincomb(alg.unit, self.acts), f.eye(self.n))
            for i in alg.generators:
                for j in alg.generators:
                    lhs = f.matmul(self.acts[i], self.acts[j])
                    rhs = f.lincomb(alg.mult[i, j], self.acts)
                    assert np.array_equal(lhs, rhs), "action is not multiplicative"

    def act(self, x):
        """Action matrix of an arbitrary algebra element."""
        return self.alg.field.lincomb(x, self.acts)

    def __repr__(self) -> str:
        return f"AMod(dim={self.n})"


class ModMap:
    """Module homomorphism; the matrix maps source coordinates to target
    coordinates."""

    def __init__(self, source: AMod, target: AMod, matrix, check: bool = True):
        self.source = source
        self.target = target
        self.matrix = source.alg.field.arr(matrix)
        assert self.matrix.shape == (target.n, source.n)
        if check and source.n and target.n:
            f = source.alg.field
            for i in source.alg.generators:
                lhs = f.matmul(self.matrix, source.acts[i])
                rhs = f.matmul(target.acts[i], self.matrix)
                assert np.array_equal(lhs, rhs), "matrix does not intertwine"


def zero_module(alg: Algebra) -> AMod:
    return AMod(alg, np.zeros((alg.dim, 0, 0), dtype=np.int64), check=False)


def module_from_action(alg: Algebra, acts) -> AMod:
    return AMod(alg, acts, check=True)


def direct_sum(mods: list) -> AMod:
    assert mods
    alg = mods[0].alg
    total = sum(m.n for m in mods)
    acts = np.zeros((alg.dim, total, total), dtype=np.int64)
    off = 0
    for m in mods:
        acts[:, off:off + m.n, off:off + m.n] = m.acts
        off += m.n
    return AMod(alg, acts, check=False)


def submodule(m: AMod, rows) -> AMod:
    """Module structure on the span of ``rows``; closure is enforced by the
    solvability of the coordinate change."""
    f = m.alg.field
    rows = f.arr(rows)
    k = rows.shape[0]
    if k == 0:
        return zero_module(m.alg)
    images = np.concatenate([f.matmul(m.acts[i], rows.T) for i in range(m.alg.dim)],
                            axis=1)
    coords = solve(f, rows.T, images)
    acts = coords.reshape(k, m.alg.dim, k).transpose(1, 0, 2)
    return AMod(m.alg, acts, check=False)


def quotient_module(m: AMod, rows):
    """(M / span(rows), projection as a ModMap)."""
    f = m.alg.field
    rows = f.arr(rows)
    if rows.size:
        red, piv = rref(f, rows)
        red = red[: len(piv)]
    else:
        red, piv = f.zeros((0, m.n)), []
    comp_idx = [j for j in range(m.n) if j not in set(piv)]
    k, nq = len(piv), len(comp_idx)
    if nq == 0:
        q = zero_module(m.alg)
        return q, ModMap(m, q, f.zeros((0, m.n)), check=False)
    basis = np.vstack([red, f.eye(m.n)[comp_idx]]) if k else f.eye(m.n)[comp_idx]
    t = inv_matrix(f, basis.T)
    proj = t[k:, :]
    sect = basis.T[:, k:]
    acts = np.zeros((m.alg.dim, nq, nq), dtype=np.int64)
    for i in range(m.alg.dim):
        acts[i] = f.matmul(proj, f.matmul(m.acts[i], sect))
    q = AMod(m.alg, acts, check=False)
    return q, ModMap(m, q, proj, check=False)


def radical_mod(m: AMod):
    """(rows spanning J(A)M, inclusion of that submodule)."""
    f = m.alg.field
    jrows = m.alg.radical_rows()
    if jrows.shape[0] == 0 or m.n == 0:
        z = zero_module(m.alg)
        return f.zeros((0, m.n)), ModMap(z, m, f.zeros((m.n, 0)), check=False)
    cols = np.concatenate([m.act(j) for j in jrows], axis=1)
    red, piv = rref(f, cols.T)
    rows = red[: len(piv)]
    sub = submodule(m, rows)
    return rows, ModMap(sub, m, rows.T, check=False)


def top_mod(m: AMod):
    rows, _ = radical_mod(m)
    return quotient_module(m, rows)


# ---------------------------------------------------------------------------
# hom spaces
# ---------------------------------------------------------------------------


def _pim_slice(m: AMod, i: int):
    """Column basis of e_i M, identified with Hom(P_i, M)."""
    if i not in m._slices:
        f = m.alg.field
        _, _, idems, _ = m.alg.simples_pims()
        mat = m.act(idems[i])
        red, piv = rref(f, mat.T)
        m._slices[i] = red[: len(piv)].T
    return m._slices[i]


def _pim_action_stack(m: AMod, i: int):
    """act_M(r) stacked over the basis rows r of the i-th PIM."""
    if i not in m._pimacts:
        f = m.alg.field
        _, _, _, rows_list = m.alg.simples_pims()
        rows = rows_list[i]
        if f.m == 1:
            m._pimacts[i] = np.tensordot(rows, m.acts, axes=(1, 0)) % f.p
        else:
            m._pimacts[i] = np.stack([m.act(r) for r in rows])
    return m._pimacts[i]


def _part_block(mtgt: AMod, i: int, v):
    """Matrix of the map P_i -> target sending the generator to v: column s
    is act(basis row s of P_i) applied to v."""
    f = mtgt.alg.field
    stack = _pim_action_stack(mtgt, i)
    if f.m == 1:
        return (np.tensordot(stack, v, axes=(2, 0)) % f.p).T
    return np.stack([f.matmul(stack[t], v[:, None])[:, 0]
                     for t in range(stack.shape[0])]).T


def _hom_direct(msrc: AMod, mtgt: AMod):
    f = msrc.alg.field
    gens = msrc.alg.generators
    nN, nM = mtgt.n, msrc.n
    if gens:
        blocks = np.vstack([
            f.sub(kron(f, f.eye(nN), msrc.acts[g].T), kron(f, mtgt.acts[g], f.eye(nM)))
            for g in gens
        ])
        ns = nullspace(f, blocks)
    else:
        ns = f.eye(nN * nM)
    return [ns[:, j].reshape(nN, nM) for j in range(ns.shape[1])]


class _Pres:
    __slots__ = ("parts0", "parts1", "p0", "p1", "cover", "section", "d_full",
                 "d_gencols", "omega", "offsets0", "offsets1")


def _cover_data(m: AMod):
    """Minimal-cover combinatorics: part indices and the cover matrix,
    chosen greedily so the induced map on tops is an isomorphism."""
    f = m.alg.field
    simples, pims, idems, rows_list = m.alg.simples_pims()
    top, proj = top_mod(m)
    parts = []
    blocks = []
    ech = f.zeros((0, top.n))
    for i in range(len(pims)):
        sl = _pim_slice(m, i)
        if sl.shape[1] == 0:
            continue
        timg = f.matmul(proj.matrix, sl)
        for j in range(sl.shape[1]):
            cand = np.vstack([ech, timg[:, j][None, :]])
            red, piv = rref(f, cand)
            if len(piv) > ech.shape[0]:
                ech = red[: len(piv)]
                parts.append(i)
                blocks.append(_part_block(m, i, sl[:, j]))
    assert sum(simples[i].n for i in parts) == top.n, "cover misses part of the top"
    cover = np.concatenate(blocks, axis=1) if blocks else f.zeros((m.n, 0))
    return parts, cover


def _direct_sum_of_pims(alg: Algebra, parts: list) -> AMod:
    _, pims, _, _ = alg.simples_pims()
    if not parts:
        return zero_module(alg)
    if len(parts) == 1:
        return pims[parts[0]]
    return direct_sum([pims[i] for i in parts])


def _presentation(m: AMod) -> "_Pres":
    if m._pres is None:
        m._pres = _build_presentation(m)
    return m._pres


def _build_presentation(m: AMod) -> "_Pres":
    f = m.alg.field
    pres = _Pres()
    if m.n == 0:
        z = zero_module(m.alg)
        pres.parts0, pres.parts1 = [], []
        pres.p0, pres.p1, pres.omega = z, z, z
        pres.cover = f.zeros((0, 0))
        pres.section = f.zeros((0, 0))
        pres.d_full = f.zeros((0, 0))
        pres.d_gencols = f.zeros((0, 0))
        pres.offsets0, pres.offsets1 = [], []
        return pres
    _, pims, _, _ = m.alg.simples_pims()
    parts0, cover = _cover_data(m)
    p0 = _direct_sum_of_pims(m.alg, parts0)
    assert rank(f, cover) == m.n, "cover is not surjective"
    section = solve(f, cover, f.eye(m.n))
    wcols = nullspace(f, cover)
    omega = submodule(p0, wcols.T)
    pres.parts0, pres.p0, pres.cover, pres.section = parts0, p0, cover, section
    pres.omega = omega
    offs = np.cumsum([0] + [pims[i].n for i in parts0])
    pres.offsets0 = [int(x) for x in offs[:-1]]
    if omega.n == 0:
        z = zero_module(m.alg)
        pres.parts1, pres.p1 = [], z
        pres.d_full = f.zeros((p0.n, 0))
        pres.d_gencols = f.zeros((p0.n, 0))
        pres.offsets1 = []
        return pres
    parts1, cover1 = _cover_data(omega)
    p1 = _direct_sum_of_pims(m.alg, parts1)
    d_full = f.matmul(wcols, cover1)
    offs1 = np.cumsum([0] + [pims[i].n for i in parts1])
    pres.parts1, pres.p1, pres.d_full = parts1, p1, d_full
    pres.offsets1 = [int(x) for x in offs1[:-1]]
    pres.d_gencols = d_full[:, pres.offsets1] if parts1 else f.zeros((p0.n, 0))
    return pres


def _hom_via_presentation(msrc: AMod, mtgt: AMod):
    f = msrc.alg.field
    _, pims, _, rows_list = msrc.alg.simples_pims()
    pres = _presentation(msrc)
    slices = [_pim_slice(mtgt, i) for i in pres.parts0]
    widths = [s.shape[1] for s in slices]
    d0 = sum(widths)
    if d0 == 0:
        return []
    nN = mtgt.n
    eq_rows = []
    for t in range(len(pres.parts1)):
        u = pres.d_gencols[:, t]
        row = f.zeros((nN, d0))
        col_off = 0
        for j, i0 in enumerate(pres.parts0):
            seg = u[pres.offsets0[j]: pres.offsets0[j] + pims[i0].n]
            if seg.any() and widths[j]:
                lift = f.matmul(seg[None, :], rows_list[i0])[0]
                row[:, col_off:col_off + widths[j]] = f.matmul(mtgt.act(lift), slices[j])
            col_off += widths[j]
        eq_rows.append(row)
    ns = nullspace(f, np.concatenate(eq_rows, axis=0)) if eq_rows else f.eye(d0)
    out = []
    for s in range(ns.shape[1]):
        w = ns[:, s]
        psi = f.zeros((nN, pres.p0.n))
        col_off = 0
        for j, i0 in enumerate(pres.parts0):
            if widths[j]:
                v = f.matmul(slices[j], w[col_off:col_off + widths[j]][:, None])[:, 0]
            else:
                v = f.zeros(nN)
            col_off += widths[j]
            if v.any():
                psi[:, pres.offsets0[j]: pres.offsets0[j] + pims[i0].n] = \
                    _part_block(mtgt, i0, v)
        out.append(f.matmul(psi, pres.section))
    return out


def hom_matrices(msrc: AMod, mtgt: AMod) -> list:
    """Basis of Hom(msrc, mtgt) as matrices (target dim x source dim)."""
    assert msrc.alg is mtgt.alg, "modules live over different algebras"
    if msrc.n == 0 or mtgt.n == 0:
        return []
    if msrc.n * mtgt.n <= 256 or not msrc.alg.split_ok():
        return _hom_direct(msrc, mtgt)
    return _hom_via_presentation(msrc, mtgt)


def hom_basis(msrc: AMod, mtgt: AMod) -> list:
    return [ModMap(msrc, mtgt, x, check=False) for x in hom_matrices(msrc, mtgt)]


def hom_dim(msrc: AMod, mtgt: AMod) -> int:
    return len(hom_matrices(msrc, mtgt))


def ext1_dim(msrc: AMod, mtgt: AMod) -> int:
    """dim Ext^1 via the minimal cover exact sequence of the source."""
    if msrc.n == 0 or mtgt.n == 0:
        return 0
    pres = _presentation(msrc)
    h_omega = hom_dim(pres.omega, mtgt)
    h_p0 = sum(_pim_slice(mtgt, i).shape[1] for i in pres.parts0)
    h_m = hom_dim(msrc, mtgt)
    return h_omega - h_p0 + h_m


# ---------------------------------------------------------------------------
# isomorphism testing and decomposition
# ---------------------------------------------------------------------------


def comp_dims(m: AMod) -> tuple:
    """Composition multiplicities (dim e_i M per simple class): a cheap
    isomorphism-invariant fingerprint."""
    if m._fp is None:
        _, _, idems, _ = m.alg.simples_pims()
        m._fp = tuple(int(rank(m.alg.field, m.act(e))) for e in idems)
    return m._fp


def is_iso(ma: AMod, mb: AMod, rng=None) -> bool:
    """Exact certificates only: True always comes from an invertible
    intertwiner found and verified; False after exhausting the search."""
    if ma is mb:
        return True
    if ma.n != mb.n:
        return False
    if ma.n == 0:
        return True
    if ma.alg.split_ok() and comp_dims(ma) != comp_dims(mb):
        return False
    f = ma.alg.field
    mats = hom_matrices(ma, mb)
    h = len(mats)
    if h == 0:
        return False
    for x in mats:
        if rank(f, x) == ma.n:
            return True
    if f.q**h <= 4096:
        for idx in np.ndindex(*(f.q,) * h):
            x = f.lincomb(np.array(idx, dtype=np.int64), mats)
            if rank(f, x) == ma.n:
                return True
        return False
    rng = rng if rng is not None else np.random.default_rng(0)
    for _ in range(64):
        coeffs = rng.integers(0, f.q, size=h, dtype=np.int64)
        x = f.lincomb(coeffs, mats)
        if rank(f, x) == ma.n:
            return True
    return False


def _end_algebra(m: AMod, mats):
    f = m.alg.field
    h = len(mats)
    v = np.stack([x.reshape(-1) for x in mats])
    prods = np.zeros((h * h, m.n * m.n), dtype=np.int64)
    for a in range(h):
        for b in range(h):
            prods[a * h + b] = f.matmul(mats[a], mats[b]).reshape(-1)
    rhs = np.vstack([prods, f.eye(m.n).reshape(1, -1)])
    sol = solve(f, v.T, rhs.T)
    mult = sol[:, : h * h].T.reshape(h, h, h)
    unit = sol[:, h * h]
    return Algebra(f, mult, unit, list(range(h)), check=False)


def _nontrivial_idem_in_quotient(ebar: Algebra, rng):
    f = ebar.field
    zrows = ebar.center_rows()
    zsub, zr = ebar.subalgebra_on(zrows, ebar.unit)
    cents = split_commutative(zsub, rng)
    if len(cents) > 1:
        return f.matmul(cents[0][None, :], zr)[0]
    if _is_commutative(ebar):
        return None  # a field: the endomorphism ring was local
    e = _find_split_idem(ebar, rng)
    assert e is not None, "noncommutative semisimple algebra must split"
    return e


def decompose(m: AMod, rng=None) -> list:
    """Krull-Schmidt decomposition as (indecomposable, multiplicity) pairs,
    sorted by dimension.

    Idempotents of End(M) are found modulo its radical and lifted by p-th
    powers; every split is verified exactly, so the output is always a
    genuine decomposition into indecomposables.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    if m.n == 0:
        return []
    pieces = _decompose_rec(m, rng)
    out = []
    for piece in pieces:
        for k, (rep, mult) in enumerate(out):
            if is_iso(piece, rep, rng):
                out[k] = (rep, mult + 1)
                break
        else:
            out.append((piece, 1))
    out.sort(key=lambda t: t[0].n)
    return out


def _decompose_rec(m: AMod, rng) -> list:
    f = m.alg.field
    mats = hom_matrices(m, m)
    if len(mats) == 1:
        return [m]
    end = _end_algebra(m, mats)
    jrows = end.radical_rows()
    if end.dim - jrows.shape[0] == 1:
        return [m]
    ebar, proj, sect = end.quotient_by_ideal(jrows)
    idem_bar = _nontrivial_idem_in_quotient(ebar, rng)
    if idem_bar is None:
        return [m]
    u = f.matmul(sect, idem_bar[:, None])[:, 0]
    e = p_power_lift(end, u)
    assert e.any() and not np.array_equal(e, end.unit)
    emat = f.lincomb(e, mats)
    red, piv = rref(f, emat.T)
    im_rows = red[: len(piv)]
    ker_rows = nullspace(f, emat).T
    assert im_rows.shape[0] + ker_rows.shape[0] == m.n
    return _decompose_rec(submodule(m, im_rows), rng) + \
        _decompose_rec(submodule(m, ker_rows), rng)


# ---------------------------------------------------------------------------
# covers, syzygies, presentations, duals, tau
# ---------------------------------------------------------------------------


def projective_cover(m: AMod):
    """(P, cover map).  The kernel sits inside rad P, by minimality."""
    if m.n == 0:
        raise ZeroModule("projective cover of the zero module")
    pres = _presentation(m)
    return pres.p0, ModMap(pres.p0, m, pres.cover, check=False)


def syzygy(m: AMod) -> AMod:
    if m.n == 0:
        raise ZeroModule("syzygy of the zero module")
    return _presentation(m).omega


def minimal_presentation(m: AMod):
    """(P1, P0, map P1 -> P0).  The zero module gets the empty presentation."""
    if m.n == 0:
        z = zero_module(m.alg)
        return z, z, ModMap(z, z, m.alg.field.zeros((0, 0)), check=False)
    pres = _presentation(m)
    return pres.p1, pres.p0, ModMap(pres.p1, pres.p0, pres.d_full, check=False)


def dual_module(m: AMod) -> AMod:
    """Linear dual, a module over the opposite algebra."""
    op = m.alg.opposite()
    if m.n == 0:
        return zero_module(op)
    acts = np.stack([m.acts[i].T for i in range(m.alg.dim)])
    return AMod(op, acts, check=False)


def _strip_projectives(m: AMod, rng=None):
    """(non-projective part, list of projective summands)."""
    _, pims, _, _ = m.alg.simples_pims()
    parts = decompose(m, rng)
    keep, proj = [], []
    for rep, mult in parts:
        if any(is_iso(rep, p) for p in pims):
            proj.extend([rep] * mult)
        else:
            keep.extend([rep] * mult)
    if not keep:
        return zero_module(m.alg), proj
    rest = keep[0] if len(keep) == 1 else direct_sum(keep)
    return rest, proj


def tau(m: AMod, rng=None) -> AMod:
    """Auslander-Reiten translate: the second syzygy of the module with its
    projective summands removed.  That identity holds precisely for the
    symmetric algebras this package targets, hence the guard."""
    if m.alg.symmetric_form is None:
        raise NotSymmetric("tau needs a symmetric algebra")
    if m.n == 0:
        return zero_module(m.alg)
    rest, _ = _strip_projectives(m, rng)
    if rest.n == 0:
        return zero_module(m.alg)
    return _presentation(_presentation(rest).omega).omega


def tau_inv(m: AMod, rng=None) -> AMod:
    if m.alg.symmetric_form is None:
        raise NotSymmetric("tau_inv needs a symmetric algebra")
    if m.n == 0:
        return zero_module(m.alg)
    return dual_module(tau(dual_module(m), rng))


def s_count(m: AMod) -> int:
    """Number of distinct composition factors."""
    if m.n == 0:
        return 0
    return sum(1 for c in comp_dims(m) if c)
