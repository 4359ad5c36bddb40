"""Basis transforms: golden values, independent oracles, round trips."""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gammacert import (
    GammaVector,
    RangeError,
    SymmetricPolynomial,
    SymmetryError,
    basis_polynomial,
    binomial,
    gamma_to_h,
    h_to_gamma,
)


def pascal_triangle(rows):
    """Independent binomial oracle: the additive recurrence, nothing shared."""
    tri = [[1]]
    for _ in range(rows):
        prev = tri[-1]
        tri.append([1] + [prev[t] + prev[t + 1] for t in range(len(prev) - 1)] + [1])
    return tri


class TestBinomial:
    def test_small_value(self):
        assert binomial(6, 2) == 15

    def test_out_of_range_is_zero(self):
        assert binomial(2, -1) == 0
        assert binomial(2, 3) == 0
        assert binomial(-1, 0) == 0
        assert binomial(-3, -2) == 0

    def test_against_pascal_triangle(self):
        tri = pascal_triangle(40)
        for n in range(41):
            for k in range(n + 1):
                assert binomial(n, k) == tri[n][k]
        assert binomial(16, 5) == tri[16][5] == 4368

    def test_large_is_exact(self):
        # 2**200 divides C(2**200 choose 1) trivially; spot a big middle one.
        assert binomial(200, 100) % 2 == 0
        assert binomial(200, 100) == binomial(199, 99) + binomial(199, 100)


class TestVectors:
    def test_lengths_enforced(self):
        with pytest.raises(RangeError):
            SymmetricPolynomial(3, (1, 2, 1))
        with pytest.raises(RangeError):
            GammaVector(6, (1, 2))

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            GammaVector(2, (1.5, 2))

    def test_string_entries_parse(self):
        g = GammaVector(2, ("1/2", 3))
        assert g.gamma == (Fraction(1, 2), Fraction(3))

    def test_symmetry_violation_names_first_index(self):
        p = SymmetricPolynomial(4, (1, 2, 0, 3, 1))
        assert p.symmetry_violation() == 1
        with pytest.raises(SymmetryError) as err:
            p.check_symmetric()
        assert err.value.index == 1


class TestBasisPolynomial:
    def test_golden_columns(self):
        assert basis_polynomial(6, 1) == (0, 1, 4, 6, 4, 1, 0)
        assert basis_polynomial(4, 2) == (0, 0, 1, 0, 0)
        assert basis_polynomial(8, 1) == (0, 1, 6, 15, 20, 15, 6, 1, 0)

    def test_range_errors(self):
        with pytest.raises(RangeError):
            basis_polynomial(6, 4)
        with pytest.raises(RangeError):
            basis_polynomial(6, -1)

    def test_polynomial_identity_at_small_points(self):
        # sum_i coeff_i x^i must equal x^j (1+x)^(n-2j) exactly.
        for n in range(13):
            for j in range(n // 2 + 1):
                coeffs = basis_polynomial(n, j)
                for x in (1, 2, 3):
                    lhs = sum(c * x**i for i, c in enumerate(coeffs))
                    assert lhs == x**j * (1 + x) ** (n - 2 * j)


class TestGammaToH:
    def test_binomial_row(self):
        h = gamma_to_h(GammaVector(6, (1, 0, 0, 0)))
        assert h.h == tuple(map(Fraction, (1, 6, 15, 20, 15, 6, 1)))

    def test_columns_match_basis(self):
        # Unit gamma vectors reproduce the basis columns, so the displayed
        # h_i expressions (e.g. h_3 = 20 g0 + 6 g1 + 2 g2 + g3 at n = 6)
        # follow column by column.
        for n in range(0, 10):
            m = n // 2
            for j in range(m + 1):
                unit = tuple(Fraction(int(t == j)) for t in range(m + 1))
                assert gamma_to_h(GammaVector(n, unit)).h == tuple(map(Fraction, basis_polynomial(n, j)))

    def test_n6_h3_row(self):
        h = gamma_to_h(GammaVector(6, (1, 1, 1, 1)))
        assert h.h[3] == 20 + 6 + 2 + 1

    def test_degree_zero(self):
        c = Fraction(5, 7)
        assert gamma_to_h(GammaVector(0, (c,))).h == (c,)

    def test_output_always_symmetric(self):
        for entries in product((-2, 0, 1, 3), repeat=4):
            h = gamma_to_h(GammaVector(7, tuple(map(Fraction, entries))))
            assert h.symmetry_violation() is None


class TestHToGamma:
    def test_binomial_row_inverts(self):
        g = h_to_gamma(SymmetricPolynomial(6, (1, 6, 15, 20, 15, 6, 1)))
        assert g.gamma == tuple(map(Fraction, (1, 0, 0, 0)))

    def test_derived_pair(self):
        # Forward image of (1,1,0,0) computed first, then inverted.
        assert gamma_to_h(GammaVector(6, (1, 1, 0, 0))).h == tuple(map(Fraction, (1, 7, 19, 26, 19, 7, 1)))
        g = h_to_gamma(SymmetricPolynomial(6, (1, 7, 19, 26, 19, 7, 1)))
        assert g.gamma == tuple(map(Fraction, (1, 1, 0, 0)))

    def test_x_times_cube(self):
        # x(1+x)^3 = x + 3x^2 + 3x^3 + x^4, centered at n = 5.
        assert gamma_to_h(GammaVector(5, (0, 1, 0))).h == tuple(map(Fraction, (0, 1, 3, 3, 1, 0)))
        g = h_to_gamma(SymmetricPolynomial(5, (0, 1, 3, 3, 1, 0)))
        assert g.gamma == tuple(map(Fraction, (0, 1, 0)))

    def test_gamma_entries_may_go_negative(self):
        g = h_to_gamma(SymmetricPolynomial(5, (0, 1, 2, 2, 1, 0)))
        assert g.gamma == tuple(map(Fraction, (0, 1, -1)))

    def test_rejects_asymmetric(self):
        with pytest.raises(SymmetryError) as err:
            h_to_gamma(SymmetricPolynomial(2, (1, 2, 3)))
        assert err.value.index == 0

    def test_round_trip_exhaustive_small(self):
        for n in (0, 1, 4, 7):
            m = n // 2
            for entries in product((-1, 0, 2), repeat=m + 1):
                g = GammaVector(n, tuple(map(Fraction, entries)))
                assert h_to_gamma(gamma_to_h(g)) == g


fractions_st = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(st.integers(min_value=0, max_value=12), st.data())
def test_round_trip_random_rationals(n, data):
    entries = data.draw(st.lists(fractions_st, min_size=n // 2 + 1, max_size=n // 2 + 1))
    g = GammaVector(n, tuple(entries))
    assert h_to_gamma(gamma_to_h(g)) == g


@given(st.integers(min_value=0, max_value=10), st.data())
def test_transform_is_linear(n, data):
    size = n // 2 + 1
    a = data.draw(st.lists(fractions_st, min_size=size, max_size=size))
    b = data.draw(st.lists(fractions_st, min_size=size, max_size=size))
    ha = gamma_to_h(GammaVector(n, tuple(a)))
    hb = gamma_to_h(GammaVector(n, tuple(b)))
    hsum = gamma_to_h(GammaVector(n, tuple(x + y for x, y in zip(a, b))))
    assert hsum.h == tuple(x + y for x, y in zip(ha.h, hb.h))
