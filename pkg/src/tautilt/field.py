"""Exact dense linear algebra over small finite fields F_{p^m}.

Scalars are integers in [0, q) with q = p**m.  For m = 1 a scalar is the
residue itself and arithmetic reduces mod p on numpy int64 arrays.  For
m > 1 a scalar encodes a polynomial residue in base p (least significant
digit = constant coefficient) and arithmetic is routed through q-by-q
lookup tables built once per field.  Matrices are numpy int64 arrays whose
entries stay canonically reduced, so equality of matrices is plain array
equality.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Field",
    "NoSolution",
    "rref",
    "rank",
    "solve",
    "nullspace",
    "kron",
    "inv_matrix",
    "charpoly",
]


class NoSolution(Exception):
    """Raised when a linear system a @ x = b has no solution."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mul_modp(p: int, a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_divmod_modp(p: int, a: list[int], b: list[int]):
    # b must be monic
    a = list(a)
    db, da = len(b) - 1, len(a) - 1
    quo = [0] * max(da - db + 1, 1)
    for k in range(da - db, -1, -1):
        c = a[k + db] % p
        if c:
            quo[k] = c
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return quo, a


def _monic_polys_modp(p: int, deg: int):
    # all monic polynomials of exact degree deg, lexicographic in
    # (constant, ..., leading-1) coefficient order
    for idx in range(p**deg):
        coeffs = []
        v = idx
        for _ in range(deg):
            coeffs.append(v % p)
            v //= p
        yield coeffs + [1]


def _poly_irreducible_modp(p: int, f: list[int]) -> bool:
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys_modp(p, d):
            _, rem = _poly_divmod_modp(p, f, g)
            if rem == [0]:
                return False
    return True


class Field:
    """The finite field F_{p^m} with vectorised numpy arithmetic.

    All arithmetic methods accept python ints or int64 arrays of any shape
    (broadcasting like numpy) and return canonically reduced values of the
    same shape.  ``poly`` is the defining polynomial as a coefficient tuple
    of length m+1, low degree first, monic; when omitted the
    lexicographically smallest monic irreducible is chosen, so two fields
    with equal (p, m) are interchangeable.
    """

    def __init__(self, p: int, m: int = 1, poly=None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if not 1 <= m <= 4:
            raise ValueError("extension degree m must be between 1 and 4")
        self.p = int(p)
        self.m = int(m)
        self.q = self.p**self.m
        if poly is None:
            poly = self._default_poly()
        poly = tuple(int(c) % p for c in poly)
        if len(poly) != m + 1 or poly[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree m")
        if m > 1 and not _poly_irreducible_modp(p, list(poly)):
            raise ValueError("defining polynomial is reducible")
        self.poly = poly
        if m > 1:
            self._build_tables()

    def __repr__(self) -> str:
        return f"Field({self.p}, {self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.poly) == (other.p, other.m, other.poly)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.poly))

    def _default_poly(self):
        if self.m == 1:
            return (0, 1)
        for f in _monic_polys_modp(self.p, self.m):
            if _poly_irreducible_modp(self.p, f):
                return tuple(f)
        raise AssertionError("irreducible polynomial search cannot fail")

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        pows = p ** np.arange(m, dtype=np.int64)
        digits = (np.arange(q, dtype=np.int64)[:, None] // pows[None, :]) % p
        self._digits = digits
        self._addt = ((digits[:, None, :] + digits[None, :, :]) % p) @ pows
        self._negt = ((p - digits) % p) @ pows
        # x^k mod defining poly, digit vectors for k = 0 .. 2m-2
        red = np.zeros((2 * m - 1, m), dtype=np.int64)
        cur = [1] + [0] * (m - 1)
        for k in range(2 * m - 1):
            red[k] = cur
            carry = cur[m - 1]
            nxt = [0] + cur[: m - 1]
            if carry:
                for i in range(m):
                    nxt[i] = (nxt[i] - carry * self.poly[i]) % p
            cur = nxt
        conv = np.zeros((q, q, 2 * m - 1), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                conv[:, :, i + j] += np.multiply.outer(digits[:, i], digits[:, j])
        prod_digits = (conv.reshape(q * q, 2 * m - 1) @ red) % p
        self._mult = (prod_digits @ pows).reshape(q, q)
        inv = np.argmax(self._mult == 1, axis=1)
        inv[0] = 0
        self._invt = inv

    # ---- scalar / elementwise arithmetic ----

    def arr(self, x):
        return np.asarray(x, dtype=np.int64)

    def of(self, x):
        """Coerce integers into canonical scalars (m = 1 reduces mod p)."""
        a = self.arr(x)
        if self.m == 1:
            return a % self.p
        if np.any((a < 0) | (a >= self.q)):
            raise ValueError("extension-field scalars must lie in [0, q)")
        return a

    def add(self, a, b):
        if self.m == 1:
            return (self.arr(a) + self.arr(b)) % self.p
        return self._addt[self.arr(a), self.arr(b)]

    def neg(self, a):
        if self.m == 1:
            return (-self.arr(a)) % self.p
        return self._negt[self.arr(a)]

    def sub(self, a, b):
        if self.m == 1:
            return (self.arr(a) - self.arr(b)) % self.p
        return self._addt[self.arr(a), self._negt[self.arr(b)]]

    def mul(self, a, b):
        if self.m == 1:
            return (self.arr(a) * self.arr(b)) % self.p
        return self._mult[self.arr(a), self.arr(b)]

    def inv(self, a):
        a = self.arr(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero field element")
        if self.m == 1:
            return self.powv(a, self.p - 2)
        return self._invt[a]

    def sumv(self, a, axis=None):
        """Field sum along an axis (addition is digitwise mod p)."""
        a = self.arr(a)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        digits = self._digits[a]
        pows = self.p ** np.arange(self.m, dtype=np.int64)
        if axis is None:
            return (digits.reshape(-1, self.m).sum(axis=0) % self.p) @ pows
        axis = axis % a.ndim
        return (digits.sum(axis=axis) % self.p) @ pows

    def powv(self, a, e: int):
        """Elementwise a**e for a nonnegative integer exponent."""
        a = self.arr(a)
        result = np.ones_like(a)
        e = int(e)
        while e > 0:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frob(self, a, i: int = 1):
        """Frobenius x -> x**(p**i)."""
        return self.powv(a, self.p ** (i % self.m if self.m > 1 else 1))

    def frob_inv(self, a, i: int = 1):
        """Inverse Frobenius, i.e. the unique y with y**(p**i) = x."""
        out = self.arr(a)
        for _ in range(i % self.m):
            out = self.powv(out, self.p ** (self.m - 1))
        return out

    # ---- matrix helpers ----

    def eye(self, n: int):
        return np.eye(n, dtype=np.int64)

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def matmul(self, a, b):
        a, b = self.arr(a), self.arr(b)
        if self.m == 1:
            return (a @ b) % self.p
        r, k = a.shape
        k2, c = b.shape
        assert k == k2, "matmul shape mismatch"
        out = np.zeros((r, c), dtype=np.int64)
        for t in range(k):
            out = self.add(out, self.mul(a[:, t][:, None], b[t, :][None, :]))
        return out

    def lincomb(self, coeffs, mats):
        """Sum of coeffs[k] * mats[k]; mats is a sequence or a stacked array."""
        coeffs = self.arr(coeffs)
        out = None
        for c, mat in zip(coeffs, mats):
            if c == 0:
                continue
            term = self.mul(int(c), mat)
            out = term if out is None else self.add(out, term)
        if out is None:
            first = mats[0]
            return np.zeros_like(np.asarray(first))
        return out


# ---- row reduction and friends ----


def rref(f: Field, a):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    a = f.arr(a).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = f.mul(int(f.inv(a[r, c])), a[r])
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = f.sub(a[others], f.mul(a[others, c][:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank(f: Field, a) -> int:
    a = f.arr(a)
    if a.size == 0:
        return 0
    _, piv = rref(f, a)
    return len(piv)


def solve(f: Field, a, b):
    """Any x with a @ x = b.  Raises NoSolution if none exists."""
    a, b = f.arr(a), f.arr(b)
    vector_input = b.ndim == 1
    if vector_input:
        b = b[:, None]
    rows, n = a.shape
    aug = np.hstack([a, b])
    red, piv = rref(f, aug)
    if any(c >= n for c in piv):
        raise NoSolution("right-hand side is outside the column space")
    x = f.zeros((n, b.shape[1]))
    for i, c in enumerate(piv):
        x[c] = red[i, n:]
    return x[:, 0] if vector_input else x


def nullspace(f: Field, a):
    """Matrix whose columns are a basis of the right kernel of a."""
    a = f.arr(a)
    rows, cols = a.shape
    red, piv = rref(f, a)
    free = [c for c in range(cols) if c not in set(piv)]
    out = f.zeros((cols, len(free)))
    for j, c in enumerate(free):
        out[c, j] = 1
    if piv and free:
        out[np.array(piv), :] = f.neg(red[: len(piv)][:, np.array(free)])
    return out


def inv_matrix(f: Field, a):
    a = f.arr(a)
    n = a.shape[0]
    if a.shape != (n, n):
        raise NoSolution("non-square matrix has no inverse")
    try:
        return solve(f, a, f.eye(n))
    except NoSolution:
        raise NoSolution("singular matrix") from None


def kron(f: Field, a, b):
    a, b = f.arr(a), f.arr(b)
    if f.m == 1:
        return np.kron(a, b) % f.p
    ra, ca = a.shape
    rb, cb = b.shape
    out = f.mul(a[:, None, :, None], b[None, :, None, :])
    return out.reshape(ra * rb, ca * cb)


def charpoly(f: Field, a):
    """Coefficients of det(tI - a), low degree first, length n+1, monic.

    Reduces to upper Hessenberg form by exact similarity transforms, then
    expands leading principal characteristic polynomials by the last
    column.  Zero subdiagonal entries cut the expansion, so the inner sum
    only runs over the trailing nonzero segment.
    """
    h = f.arr(a).copy()
    n = h.shape[0]
    assert h.shape == (n, n)
    if n == 0:
        return np.ones(1, dtype=np.int64)
    for c in range(n - 2):
        nz = np.flatnonzero(h[c + 1 :, c])
        if nz.size == 0:
            continue
        prow = c + 1 + int(nz[0])
        if prow != c + 1:
            h[[c + 1, prow]] = h[[prow, c + 1]]
            h[:, [c + 1, prow]] = h[:, [prow, c + 1]]
        ipiv = int(f.inv(h[c + 1, c]))
        below = c + 2 + np.flatnonzero(h[c + 2 :, c])
        if below.size:
            fac = f.mul(h[below, c], ipiv)
            h[below, :] = f.sub(h[below, :], f.mul(fac[:, None], h[c + 1, :][None, :]))
            h[:, c + 1] = f.add(h[:, c + 1], f.matmul(h[:, below], fac[:, None])[:, 0])

    # p_k(t) = (t - h[k-1,k-1]) p_{k-1}(t)
    #          - sum_i h[i-1,k-1] * (prod_{j=i..k-1} h[j,j-1]) * p_{i-1}(t)
    # maintained with rolling prefix products over the segment of nonzero
    # subdiagonal entries (a zero kills every product spanning it)
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    pref = np.ones(n + 1, dtype=np.int64)
    ipref = np.ones(n + 1, dtype=np.int64)
    seg_start = 1
    for k in range(1, n + 1):
        if k >= 2:
            sub = int(h[k - 1, k - 2])
            if sub == 0:
                seg_start = k
                pref[k - 1] = 1
                ipref[k - 1] = 1
            else:
                pref[k - 1] = f.mul(pref[k - 2], sub)
                ipref[k - 1] = f.inv(pref[k - 1])
        row = np.zeros(n + 1, dtype=np.int64)
        row[1 : k + 1] = P[k - 1, :k]
        diag = int(h[k - 1, k - 1])
        if diag:
            row = f.sub(row, f.mul(diag, P[k - 1]))
        if seg_start < k:
            idx = np.arange(seg_start, k)
            prods = f.mul(int(pref[k - 1]), ipref[idx - 1])
            coefs = f.mul(h[idx - 1, k - 1], prods)
            nzc = np.flatnonzero(coefs)
            if nzc.size:
                row = f.sub(row, f.matmul(coefs[nzc][None, :], P[idx[nzc] - 1, :])[0])
        P[k] = row
    return P[n]
