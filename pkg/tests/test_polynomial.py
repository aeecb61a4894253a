import pytest
from hypothesis import given, strategies as st

from graphcoh import IntPolynomial

small_polys = st.builds(IntPolynomial,
                        st.lists(st.integers(-9, 9), min_size=0, max_size=6))


def test_canonical_form_drops_trailing_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial(()).coeffs == ()
    assert IntPolynomial((0,)).is_zero()


def test_basic_arithmetic():
    p = IntPolynomial((1, 1))      # 1 + q
    q = IntPolynomial((0, 0, 2))   # 2q^2
    assert (p + q).coeffs == (1, 1, 2)
    assert (p - p).is_zero()
    assert (p * q).coeffs == (0, 0, 2, 2)
    assert (p ** 3).coeffs == (1, 3, 3, 1)


def test_evaluation_and_composition():
    p = IntPolynomial((0, 0, 1))  # x^2
    assert p(5) == 25
    composed = p(IntPolynomial((1, 1)))  # (1+q)^2
    assert composed.coeffs == (1, 2, 1)
    assert IntPolynomial((2, -3, 1))(1) == 0


def test_shift():
    assert IntPolynomial((1, 2)).shift(2).coeffs == (0, 0, 1, 2)
    assert IntPolynomial().shift(3).is_zero()


@pytest.mark.parametrize("coeffs,var,expected", [
    ((0, 2, -3, 1), "L", "L^3 - 3L^2 + 2L"),
    ((1, 1, 1), "q", "q^2 + q + 1"),
    ((0, -1, -1, 0, 1, 3, 3, 1), "q", "q^7 + 3q^6 + 3q^5 + q^4 - q^2 - q"),
    ((), "q", "0"),
    ((-5,), "q", "-5"),
    ((0, 1), "L", "L"),
    ((4,), "L", "4"),
])
def test_rendering(coeffs, var, expected):
    assert IntPolynomial(coeffs).to_string(var) == expected


@given(small_polys, small_polys, st.integers(-5, 5))
def test_ring_homomorphism_to_int_evaluation(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r


@given(small_polys, small_polys, st.integers(-4, 4))
def test_composition_matches_evaluation(p, q, x):
    assert p(q)(x) == p(q(x))
