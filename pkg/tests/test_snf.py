"""Tests for exact Smith normal form and cokernel decompositions.

Derived expectations are pinned against first-principles oracles:
gcds of k x k cofactor minors and additive-closure lattice indices.
"""

import math
import random

import numpy as np
import pytest

from sk1.errors import InfiniteCokernel
from sk1.snf import CyclicDecomposition, cokernel_decomposition, smith_divisors

import oracles


def test_pinned_small_matrices():
    assert smith_divisors([[2, 0], [0, 3]]) == [1, 6]
    assert smith_divisors([[4, 0], [0, 6]]) == [2, 12]
    assert smith_divisors([[4, 2], [2, 4]]) == [2, 6]
    assert smith_divisors([[1, 2], [3, 4]]) == [1, 2]
    assert smith_divisors(np.eye(3, dtype=np.int64)) == [1, 1, 1]
    assert smith_divisors([[0, 0], [0, 0]]) == [0, 0]
    assert smith_divisors([[2, 4, 6]]) == [2]
    assert smith_divisors([[2], [4], [6]]) == [2]


def test_rejects_bad_shapes():
    with pytest.raises(ValueError):
        smith_divisors([])
    with pytest.raises(ValueError):
        smith_divisors([[]])
    with pytest.raises(ValueError):
        smith_divisors([[1, 2], [3]])
    with pytest.raises(ValueError):
        smith_divisors(np.array([1, 2, 3]))


def test_cokernel_pinned():
    dec = cokernel_decomposition([[3, 0], [0, 3], [1, 1]])
    assert dec.divisors == (3,)
    dec = cokernel_decomposition([[9, 0], [0, 9], [3, 3]])
    assert dec.divisors == (3, 9)
    dec = cokernel_decomposition([[1, 0], [0, 1]])
    assert dec.is_trivial
    assert str(dec) == "0"


def test_cokernel_matches_lattice_index_pinned():
    for rows, modulus in (
        ([[3, 0], [0, 3], [1, 1]], 3),
        ([[9, 0], [0, 9], [3, 3]], 9),
        ([[9, 0], [0, 3], [3, 1]], 9),
    ):
        assert cokernel_decomposition(rows).order == oracles.lattice_index(rows, modulus)


def test_infinite_cokernel():
    with pytest.raises(InfiniteCokernel):
        cokernel_decomposition([[1, 0]])  # fewer rows than columns
    with pytest.raises(InfiniteCokernel):
        cokernel_decomposition([[1, 0], [2, 0]])  # rank deficient
    with pytest.raises(InfiniteCokernel):
        cokernel_decomposition([[0, 0], [0, 0]])


def test_divisibility_chain_and_minor_gcds_random():
    rng = random.Random(20240811)
    for _ in range(150):
        n_rows = rng.randint(1, 5)
        n_cols = rng.randint(1, 5)
        scale = rng.choice((1, 1, 2, 3))
        mat = [
            [scale * rng.randint(-9, 9) for _ in range(n_cols)]
            for _ in range(n_rows)
        ]
        divs = smith_divisors(mat)
        assert len(divs) == min(n_rows, n_cols)
        for a, b in zip(divs, divs[1:]):
            if b == 0:
                continue
            assert a != 0 and b % a == 0
        # d_1 * ... * d_k equals the gcd of all k x k minors.
        prod = 1
        for k, d in enumerate(divs, start=1):
            prod *= d
            assert prod == oracles.minor_gcd(mat, k)


def test_unimodular_row_and_column_ops_preserve_divisors():
    rng = random.Random(99)
    for _ in range(40):
        mat = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(4)]
        want = smith_divisors(mat)
        work = [list(r) for r in mat]
        for _ in range(12):
            kind = rng.randrange(3)
            i, j = rng.sample(range(4), 2)
            c = rng.randint(-3, 3)
            if kind == 0:
                work[i] = [a + c * b for a, b in zip(work[i], work[j])]
            elif kind == 1:
                for r in work:
                    r[i] += c * r[j]
            else:
                work[i], work[j] = work[j], work[i]
        assert smith_divisors(work) == want


def test_random_cokernels_match_lattice_index():
    rng = random.Random(4242)
    for _ in range(30):
        c = rng.randint(1, 3)
        moduli = [rng.choice((3, 9, 27)) for _ in range(c)]
        modulus = math.lcm(*moduli)
        rows = [[moduli[i] if j == i else 0 for j in range(c)] for i in range(c)]
        for _ in range(rng.randint(1, 3)):
            rows.append([rng.randrange(modulus) for _ in range(c)])
        dec = cokernel_decomposition(rows)
        assert dec.order == oracles.lattice_index(rows, modulus)


def test_big_integer_entries_use_exact_arithmetic():
    big = 10**40
    assert smith_divisors([[big, 1], [0, big]]) == [1, big * big]
    # Scaling a matrix by a positive constant scales every divisor.
    rng = random.Random(5)
    for _ in range(20):
        mat = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(4)]
        base = smith_divisors(mat)
        scaled = smith_divisors([[big * v for v in row] for row in mat])
        assert scaled == [big * d if d else 0 for d in base]


def test_divisor_chain_shape_random_wide_range():
    rng = random.Random(88)
    for _ in range(100):
        n_rows = rng.randint(1, 8)
        n_cols = rng.randint(1, 8)
        mat = [
            [rng.randint(-50, 50) for _ in range(n_cols)] for _ in range(n_rows)
        ]
        divs = smith_divisors(mat)
        assert len(divs) == min(n_rows, n_cols)
        assert all(d >= 0 for d in divs)
        nz = [d for d in divs if d]
        assert divs == nz + [0] * (len(divs) - len(nz))  # zeros come last
        for a, b in zip(nz, nz[1:]):
            assert b % a == 0


def test_fast_and_exact_paths_agree():
    from sk1.snf import _diagonalize_exact, _divisor_chain

    rng = random.Random(12)
    for _ in range(80):
        n_rows = rng.randint(1, 6)
        n_cols = rng.randint(1, 6)
        mat = [
            [rng.randint(-50, 50) for _ in range(n_cols)] for _ in range(n_rows)
        ]
        slots = min(n_rows, n_cols)
        exact = _divisor_chain(_diagonalize_exact([list(r) for r in mat]), slots)
        assert smith_divisors(np.array(mat, dtype=np.int64)) == exact


def test_int64_overflow_falls_back_to_exact():
    mat = [[3, 2**61], [2, 2**61]]
    want = [1, 2**61]
    assert smith_divisors(mat) == want
    assert smith_divisors(np.array(mat, dtype=np.int64)) == want


def test_decomposition_normalizes_and_renders():
    dec = CyclicDecomposition((9, 3, 3))
    assert dec.divisors == (3, 3, 9)
    assert dec.order == 81
    assert dec.multiplicities() == {3: 2, 9: 1}
    assert dec.prime_power_multiplicities(3) == {1: 2, 2: 1}
    assert str(dec) == "(C3)^2 x (C9)^1"
    assert str(CyclicDecomposition()) == "0"
    assert CyclicDecomposition().order == 1


def test_decomposition_rejects_bad_divisors():
    with pytest.raises(ValueError):
        CyclicDecomposition((1, 3))
    with pytest.raises(ValueError):
        CyclicDecomposition((0,))
    with pytest.raises(ValueError):
        CyclicDecomposition((6,)).prime_power_multiplicities(3)
