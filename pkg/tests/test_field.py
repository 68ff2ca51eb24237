from __future__ import annotations

import itertools

import numpy as np
import pytest

from tautilt.field import (
    Field,
    NoSolution,
    charpoly,
    inv_matrix,
    kron,
    nullspace,
    rank,
    rref,
    solve,
)

SMALL_FIELDS = [Field(2), Field(3), Field(5), Field(2, 2), Field(2, 3), Field(3, 2)]
BIG_FIELDS = [Field(5, 2), Field(5, 4)]


def random_matrix(f, rng, rows, cols):
    return rng.integers(0, f.q, size=(rows, cols), dtype=np.int64)


def span_size(f, rows):
    # independent rank oracle: size of the F_q-span of the given row tuples
    seen = {tuple(np.zeros(rows.shape[1], dtype=np.int64))}
    frontier = [np.zeros(rows.shape[1], dtype=np.int64)]
    while frontier:
        v = frontier.pop()
        for r in rows:
            for c in range(f.q):
                w = f.add(v, f.mul(c, r))
                t = tuple(int(x) for x in w)
                if t not in seen:
                    seen.add(t)
                    frontier.append(w)
    return len(seen)


def oracle_rank(f, a):
    size = span_size(f, f.arr(a))
    r = 0
    while f.q**r < size:
        r += 1
    assert f.q**r == size
    return r


def poly_mul(f, a, b):
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = f.add(out[i + j], f.mul(int(ai), int(bj)))
    return out


def oracle_charpoly(f, a):
    # Leibniz expansion of det(tI - a) with polynomial entries
    n = a.shape[0]
    total = np.zeros(n + 1, dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = np.array([1], dtype=np.int64)
        for i in range(n):
            entry_const = f.neg(a[i, perm[i]])
            entry = [int(entry_const), 1] if perm[i] == i else [int(entry_const)]
            term = poly_mul(f, term, np.array(entry, dtype=np.int64))
        padded = np.zeros(n + 1, dtype=np.int64)
        padded[: len(term)] = term
        if sign < 0:
            padded = f.neg(padded)
        total = f.add(total, padded)
    return total


def test_field_axioms_exhaustive():
    for f in SMALL_FIELDS:
        elems = np.arange(f.q, dtype=np.int64)
        a = elems[:, None, None]
        b = elems[None, :, None]
        c = elems[None, None, :]
        assert np.array_equal(f.add(f.add(a, b), c), f.add(a, f.add(b, c)))
        assert np.array_equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)))
        assert np.array_equal(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)))
        assert np.array_equal(f.add(a[:, :, 0], b[:, :, 0]), f.add(b[:, :, 0], a[:, :, 0]))
        assert np.array_equal(f.mul(a[:, :, 0], b[:, :, 0]), f.mul(b[:, :, 0], a[:, :, 0]))
        assert np.array_equal(f.add(elems, 0), elems)
        assert np.array_equal(f.mul(elems, 1), elems)
        assert np.array_equal(f.add(elems, f.neg(elems)), np.zeros(f.q, dtype=np.int64))


def test_inverses_all_fields():
    for f in SMALL_FIELDS + BIG_FIELDS:
        nz = np.arange(1, f.q, dtype=np.int64)
        assert np.array_equal(f.mul(nz, f.inv(nz)), np.ones(f.q - 1, dtype=np.int64))
        with pytest.raises(ZeroDivisionError):
            f.inv(0)


def test_frobenius_is_field_automorphism():
    for f in [Field(2, 2), Field(3, 2), Field(2, 3), Field(5, 2)]:
        elems = np.arange(f.q, dtype=np.int64)
        fr = f.frob(elems)
        assert np.array_equal(f.frob(f.add(elems[:, None], elems[None, :])), f.add(fr[:, None], fr[None, :]))
        assert np.array_equal(f.frob(f.mul(elems[:, None], elems[None, :])), f.mul(fr[:, None], fr[None, :]))
        # x -> x^p is a bijection with the stated inverse
        assert np.array_equal(f.frob_inv(fr, 1), elems)
        assert np.array_equal(f.frob(f.frob_inv(elems, 1), 1), elems)
        assert sorted(int(x) for x in fr) == list(range(f.q))


def test_default_polynomials_are_frozen():
    assert Field(2, 2).poly == (1, 1, 1)
    assert Field(3, 2).poly == (1, 0, 1)
    assert Field(2, 3).poly == (1, 1, 0, 1)


def test_field_validation():
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(2, 5)
    with pytest.raises(ValueError):
        Field(2, 2, poly=(0, 0, 1))  # t^2 is reducible
    with pytest.raises(ValueError):
        Field(2, 2, poly=(1, 1, 1, 1))  # wrong degree
    f = Field(3)
    assert int(f.of(-1)) == 2
    with pytest.raises(ValueError):
        Field(2, 2).of(7)


def test_rank_frozen_examples():
    f5, f3 = Field(5), Field(3)
    assert rank(f5, f5.eye(3)) == 3
    assert rank(f3, f3.zeros((2, 4))) == 0
    assert rank(f5, [[1, 2], [2, 4]]) == 1


def test_rank_matches_bruteforce_span():
    rng = np.random.default_rng(7)
    for f in [Field(2), Field(3), Field(2, 2)]:
        for _ in range(12):
            a = random_matrix(f, rng, 3, 3)
            assert rank(f, a) == oracle_rank(f, a)


def test_rank_equals_rank_of_transpose():
    rng = np.random.default_rng(11)
    for f in SMALL_FIELDS:
        for _ in range(10):
            a = random_matrix(f, rng, rng.integers(1, 6), rng.integers(1, 6))
            assert rank(f, a) == rank(f, a.T)


def test_solve_frozen_examples():
    f5 = Field(5)
    x = solve(f5, [[2]], [[1]])
    assert x.shape == (1, 1) and int(x[0, 0]) == 3
    rng = np.random.default_rng(3)
    b = random_matrix(f5, rng, 4, 2)
    assert np.array_equal(solve(f5, f5.eye(4), b), b)
    with pytest.raises(NoSolution):
        solve(f5, [[1], [1]], [[0], [1]])


def test_solve_multiply_back():
    rng = np.random.default_rng(19)
    for f in SMALL_FIELDS + [Field(5, 2)]:
        for _ in range(8):
            a = random_matrix(f, rng, 4, 3)
            x0 = random_matrix(f, rng, 3, 2)
            b = f.matmul(a, x0)
            x = solve(f, a, b)
            assert np.array_equal(f.matmul(a, x), b)
            v = solve(f, a, b[:, 0])
            assert v.ndim == 1
            assert np.array_equal(f.matmul(a, v[:, None])[:, 0], b[:, 0])


def test_nullspace_frozen_examples():
    f5, f3 = Field(5), Field(3)
    n = nullspace(f5, f5.zeros((1, 1)))
    assert n.shape == (1, 1) and int(n[0, 0]) == 1
    assert nullspace(f5, [[1, 1], [0, 1]]).shape == (2, 0)
    n = nullspace(f3, [[1, 2]])
    assert n.shape == (2, 1)
    assert np.array_equal(n[:, 0], [1, 1])


def test_nullspace_properties():
    rng = np.random.default_rng(23)
    for f in SMALL_FIELDS:
        for _ in range(10):
            a = random_matrix(f, rng, rng.integers(1, 5), rng.integers(1, 6))
            n = nullspace(f, a)
            assert n.shape[1] == a.shape[1] - rank(f, a)
            if n.shape[1]:
                assert not f.matmul(a, n).any()
                assert rank(f, n.T) == n.shape[1]


def test_rref_is_idempotent_and_preserves_row_space():
    rng = np.random.default_rng(29)
    f = Field(3, 2)
    for _ in range(8):
        a = random_matrix(f, rng, 4, 5)
        red, piv = rref(f, a)
        red2, piv2 = rref(f, red)
        assert np.array_equal(red, red2) and piv == piv2
        assert rank(f, np.vstack([a, red])) == rank(f, a) == len(piv)


def test_kron_frozen_examples():
    f5 = Field(5)
    assert np.array_equal(kron(f5, f5.eye(2), f5.eye(3)), f5.eye(6))
    a = f5.arr([[1, 2], [3, 4]])
    assert np.array_equal(kron(f5, a, [[2]]), f5.mul(2, a))


def test_kron_rank_is_multiplicative():
    rng = np.random.default_rng(31)
    for f in [Field(3), Field(2, 2)]:
        for _ in range(10):
            a = random_matrix(f, rng, 2, 2)
            b = random_matrix(f, rng, 2, 2)
            assert rank(f, kron(f, a, b)) == oracle_rank(f, a) * oracle_rank(f, b)


def test_kron_mixed_product_rule():
    rng = np.random.default_rng(37)
    for f in [Field(5), Field(2, 2)]:
        a = random_matrix(f, rng, 2, 3)
        b = random_matrix(f, rng, 3, 2)
        c = random_matrix(f, rng, 2, 2)
        d = random_matrix(f, rng, 2, 3)
        left = f.matmul(kron(f, a, c), kron(f, b, d))
        right = kron(f, f.matmul(a, b), f.matmul(c, d))
        assert np.array_equal(left, right)


def test_inv_matrix():
    rng = np.random.default_rng(41)
    for f in SMALL_FIELDS:
        for _ in range(6):
            while True:
                a = random_matrix(f, rng, 3, 3)
                if rank(f, a) == 3:
                    break
            assert np.array_equal(f.matmul(a, inv_matrix(f, a)), f.eye(3))
    with pytest.raises(NoSolution):
        inv_matrix(Field(2), [[1, 1], [1, 1]])


def test_matmul_extension_field_against_manual():
    rng = np.random.default_rng(43)
    f = Field(2, 2)
    a = random_matrix(f, rng, 3, 4)
    b = random_matrix(f, rng, 4, 2)
    manual = f.zeros((3, 2))
    for i in range(3):
        for j in range(2):
            acc = 0
            for t in range(4):
                acc = f.add(acc, f.mul(int(a[i, t]), int(b[t, j])))
            manual[i, j] = acc
    assert np.array_equal(f.matmul(a, b), manual)


def test_charpoly_structured_cases():
    f = Field(5)
    shift = np.zeros((4, 4), dtype=np.int64)
    shift[np.arange(1, 4), np.arange(3)] = 1
    cp = charpoly(f, shift)
    expected = np.zeros(5, dtype=np.int64)
    expected[4] = 1
    assert np.array_equal(cp, expected)  # nilpotent: t^4
    d = np.diag(np.array([1, 2, 3], dtype=np.int64))
    want = np.array([1], dtype=np.int64)
    for lam in (1, 2, 3):
        want = poly_mul(f, want, np.array([f.neg(lam), 1], dtype=np.int64))
    padded = np.zeros(4, dtype=np.int64)
    padded[: len(want)] = want
    assert np.array_equal(charpoly(f, d), padded)


def test_charpoly_against_leibniz_oracle():
    rng = np.random.default_rng(47)
    for f in [Field(5), Field(3), Field(2, 2)]:
        for n in (2, 3, 4):
            for _ in range(6):
                a = random_matrix(f, rng, n, n)
                assert np.array_equal(charpoly(f, a), oracle_charpoly(f, a))


def test_charpoly_trace_and_det_coefficients():
    rng = np.random.default_rng(53)
    f = Field(7)
    for _ in range(6):
        a = random_matrix(f, rng, 5, 5)
        cp = charpoly(f, a)
        assert int(cp[5]) == 1
        tr = 0
        for i in range(5):
            tr = f.add(tr, int(a[i, i]))
        assert int(cp[4]) == int(f.neg(tr))
