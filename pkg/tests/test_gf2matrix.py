import random

import pytest

from gbcodex.gf2matrix import (
    BitMatrix,
    circulant,
    hstack,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    row_space_contains,
    transpose,
)
from gbcodex.gf2poly import BinaryPolynomial, gcd, mul_mod, parse_poly, x_pow_minus_one
from oracle_utils import list_rank_gf2, span


def P(text):
    return parse_poly(text)


def random_matrix(rng, rows, cols):
    return BitMatrix(tuple(rng.getrandbits(cols) for _ in range(rows)), cols)


class TestCirculant:
    def test_one_gives_identity(self):
        assert circulant(P("1"), 3) == BitMatrix.identity(3)

    def test_x_gives_cyclic_permutation(self):
        m = circulant(P("x"), 3)
        for i in range(3):
            for j in range(3):
                assert m.entry(i, j) == (1 if (i - j) % 3 == 1 else 0)

    def test_rank_example(self):
        # independent elimination oracle on the expanded 0/1 lists
        m = circulant(P("1+x"), 4)
        assert list_rank_gf2(m.to_lists()) == 3
        assert rank(m) == 3

    def test_first_column_is_coefficient_vector(self):
        p = P("1+x^2+x^3")
        m = circulant(p, 6)
        col0 = [m.entry(i, 0) for i in range(6)]
        assert col0 == [1, 0, 1, 1, 0, 0]

    def test_too_wide_rejected(self):
        with pytest.raises(ValueError, match="too wide"):
            circulant(P("1+x^5"), 5)


class TestRank:
    def test_identity(self):
        assert rank(BitMatrix.identity(5)) == 5

    def test_zero(self):
        assert rank(BitMatrix.zeros(4, 7)) == 0

    def test_circulant_example(self):
        assert rank(circulant(P("1+x"), 6)) == 5

    def test_matches_list_oracle(self):
        rng = random.Random(3)
        for _ in range(50):
            m = random_matrix(rng, rng.randrange(1, 8), rng.randrange(1, 8))
            assert rank(m) == list_rank_gf2(m.to_lists())

    def test_transpose_invariant(self):
        rng = random.Random(5)
        for _ in range(50):
            m = random_matrix(rng, rng.randrange(1, 9), rng.randrange(1, 9))
            assert rank(m) == rank(transpose(m))


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(BitMatrix.identity(4)) == []

    def test_zero_matrix_full_kernel(self):
        basis = kernel_basis(BitMatrix.zeros(2, 3))
        assert len(basis) == 3
        assert list_rank_gf2([[(v >> j) & 1 for j in range(3)] for v in basis]) == 3

    def test_gb_h_x_kernel_size(self):
        h_x = hstack(circulant(P("1+x"), 5), circulant(P("1+x^2"), 5))
        assert rank(h_x) == 4
        assert len(kernel_basis(h_x)) == 6

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(7)
        for _ in range(50):
            m = random_matrix(rng, rng.randrange(1, 8), rng.randrange(1, 10))
            for v in kernel_basis(m):
                assert mat_vec(m, v) == 0


class TestRowSpace:
    def test_zero_vector_always_inside(self):
        rng = random.Random(9)
        m = random_matrix(rng, 4, 6)
        assert row_space_contains(m, 0)

    def test_identity_contains_everything(self):
        m = BitMatrix.identity(5)
        assert all(row_space_contains(m, v) for v in range(1 << 5))

    def test_against_span_enumeration(self):
        rng = random.Random(11)
        for _ in range(30):
            m = random_matrix(rng, rng.randrange(1, 6), rng.randrange(1, 9))
            full = span(list(m.rows))
            for _ in range(20):
                v = rng.getrandbits(m.cols)
                assert row_space_contains(m, v) == (v in full)

    def test_width_mismatch_rejected(self):
        with pytest.raises(ValueError):
            row_space_contains(BitMatrix.identity(3), 1 << 3)


class TestBlocksAndProducts:
    def test_hstack_identities(self):
        m = hstack(BitMatrix.identity(2), BitMatrix.identity(2))
        assert m.to_lists() == [[1, 0, 1, 0], [0, 1, 0, 1]]

    def test_circulants_commute(self):
        a = circulant(P("1+x"), 5)
        b = circulant(P("1+x^2"), 5)
        assert mat_mul(a, b) == mat_mul(b, a)

    def test_double_transpose(self):
        rng = random.Random(13)
        m = random_matrix(rng, 5, 8)
        assert transpose(transpose(m)) == m

    def test_product_dimension_mismatch(self):
        with pytest.raises(ValueError):
            mat_mul(BitMatrix.identity(3), BitMatrix.identity(4))

    def test_circulant_ring_homomorphism(self):
        rng = random.Random(17)
        for _ in range(50):
            n = rng.randrange(1, 12)
            p = BinaryPolynomial(rng.getrandbits(n))
            q = BinaryPolynomial(rng.getrandbits(n))
            lhs = mat_mul(circulant(p, n), circulant(q, n))
            rhs = circulant(mul_mod(p, q, n), n)
            assert lhs == rhs

    def test_circulant_rank_formula(self):
        rng = random.Random(19)
        for _ in range(50):
            n = rng.randrange(1, 14)
            p = BinaryPolynomial(rng.getrandbits(n))
            if p.is_zero:
                continue
            g = gcd(p, x_pow_minus_one(n))
            assert rank(circulant(p, n)) == n - g.degree
