from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from prymbn.exactring import (
    TruncatedPoly,
    TruncationMismatch,
    exp_scaled_xi,
    format_poly,
    poincare_degree,
    rational_from_str,
    rational_to_str,
)

P = TruncatedPoly.from_dict


def xi(N, k=1, c=1):
    return TruncatedPoly.monomial(N, k, c)


def test_add_inverse():
    for N in (2, 3, 7):
        assert P(N, {0: 1, 1: 1}) + (-xi(N)) == TruncatedPoly.constant(N, 1)


def test_add_identity():
    p = P(5, {0: 3, 2: Fraction(1, 7)})
    assert p + TruncatedPoly.zero(5) == p


def test_add_fractions():
    assert xi(3, 2, Fraction(1, 2)) + xi(3, 2, Fraction(1, 3)) == xi(3, 2, Fraction(5, 6))


def test_add_mismatch():
    with pytest.raises(TruncationMismatch):
        xi(2) + xi(3)


def test_mul_truncates():
    assert (xi(2) * xi(2)).is_zero()
    assert xi(3) * xi(3) == xi(3, 2)


def test_mul_binomial_square():
    p = P(3, {0: 1, 1: 2})
    assert p * p == P(3, {0: 1, 1: 4, 2: 4})


def test_mul_mismatch():
    with pytest.raises(TruncationMismatch):
        xi(4) * xi(5)


def test_no_stored_zeros():
    p = P(4, {0: 0, 1: 2, 2: 0, 9: 5})
    assert p.terms == ((1, Fraction(2)),)
    assert (xi(4) - xi(4)).terms == ()


def test_exp_scaled_xi():
    assert exp_scaled_xi(2, 3) == P(3, {0: 1, 1: 2, 2: 2})
    assert exp_scaled_xi(0, 5) == TruncatedPoly.constant(5, 1)
    assert exp_scaled_xi(2, 4).coeff(3) == Fraction(2**3, factorial(3)) == Fraction(4, 3)


@pytest.mark.parametrize("s", range(7))
@pytest.mark.parametrize("N", [1, 2, 5, 16])
def test_exp_inverse(s, N):
    assert exp_scaled_xi(s, N) * exp_scaled_xi(-s, N) == TruncatedPoly.constant(N, 1)


def test_poincare_degree():
    assert poincare_degree(xi(5, 4), 5) == 24
    assert poincare_degree(TruncatedPoly.zero(5), 5) == 0
    assert poincare_degree(xi(5, 4, Fraction(1, 3)), 5) == 8


def test_poincare_degree_needs_room():
    with pytest.raises(ValueError):
        poincare_degree(xi(3), 5)


def test_json_round_trip():
    p = P(6, {0: Fraction(-3, 4), 2: 5, 5: Fraction(1, 120)})
    data = p.to_json()
    assert data == {"trunc": 6, "coeffs": {"0": "-3/4", "2": "5", "5": "1/120"}}
    assert TruncatedPoly.from_json(data) == p


def test_rational_strings():
    assert rational_to_str(Fraction(6, 4)) == "3/2"
    assert rational_to_str(Fraction(8, 4)) == "2"
    assert rational_from_str("-10/4") == Fraction(-5, 2)


def test_format():
    assert format_poly(P(4, {0: 1, 1: -2, 3: Fraction(1, 3)})) == "1 - 2*xi + 1/3*xi^3"
    assert format_poly(TruncatedPoly.zero(3)) == "0"


N = 6
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.dictionaries(st.integers(0, N - 1), fractions, max_size=N).map(
    lambda d: TruncatedPoly.from_dict(N, d)
)


@given(polys, polys)
def test_commutative(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys, polys, polys)
def test_associative_distributive(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_coefficients_reduced(p):
    for _, c in (p * p).terms:
        assert isinstance(c, Fraction) and c.denominator > 0 and c != 0
