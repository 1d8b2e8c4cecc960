from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hkface.exactpoly import BPoly, UPoly, binom_in_k, binomial_basis_decompose, recompose


def binom(b):
    """``C(k+b-1, b)`` as a BPoly."""
    return BPoly.from_product(UPoly.constant(1), binom_in_k(b))


def qpow(a, c=1):
    return BPoly({(a, 0): c})


K = BPoly({(0, 1): 1})


def test_binom_in_k_zero_is_one():
    assert binom_in_k(0) == UPoly.constant(1, "k")


def test_binom_in_k_two_expansion():
    assert binom_in_k(2).coeffs == (0, Fraction(1, 2), Fraction(1, 2))


def test_binom_in_k_three_at_two():
    assert binom_in_k(3)(2) == comb(4, 3) == 4


@pytest.mark.parametrize("b", range(7))
@pytest.mark.parametrize("k", range(1, 8))
def test_binom_in_k_matches_integer_binomial(b, k):
    assert binom_in_k(b)(k) == comb(k + b - 1, b)


def test_evaluate_path_formula():
    # r = 3: (r-1) C(k+1,2) q^2 - (r-2) k q
    p = qpow(2) * binom(2) * 2 - qpow(1) * K
    assert p.evaluate(2, 1) == 6


def test_evaluate_zero_polynomial():
    assert BPoly().evaluate(Fraction(7, 3), 11) == 0


def test_evaluate_cycle_formula():
    n = 5
    p = qpow(2, n) * binom(2) - qpow(1, n) * K + 1
    assert p.evaluate(2, 1) == 11


def test_decompose_counterexample():
    p = qpow(2, 4) * binom(2) - qpow(1, 4) * K + 1
    e = binomial_basis_decompose(p, 2)
    assert e == [UPoly.monomial(2, 4), UPoly.monomial(1, 4), UPoly.constant(1)]


def test_decompose_basis_element():
    e = binomial_basis_decompose(binom(2), 2)
    assert e == [UPoly.constant(1), UPoly(), UPoly()]


def test_decompose_edge_ideal_example():
    p = qpow(3) * binom(3) + qpow(2) * binom(2) - qpow(1) * K
    e = binomial_basis_decompose(p, 3)
    assert e == [UPoly.monomial(3), UPoly.monomial(2, -1), UPoly.monomial(1, -1), UPoly()]


def test_decompose_rejects_high_k_degree():
    with pytest.raises(ValueError):
        binomial_basis_decompose(binom(3), 2)


def test_decompose_accepts_coefficient_list():
    # 4 C(k+1,2) q^2 - 4kq + 1 given by k-coefficients
    coeffs = [UPoly.constant(1), UPoly([0, -4, 2]), UPoly([0, 0, 2])]
    assert binomial_basis_decompose(coeffs, 2)[1] == UPoly.monomial(1, 4)


def test_rendering():
    p = qpow(2, 4) * binom(2) - qpow(1, 4) * K + 1
    assert p.binomial_form() == "4*q^2*C(k+1,2) - 4*q*k + 1"
    assert p.expanded() == "2*q^2*k^2 + 2*q^2*k - 4*q*k + 1"
    assert BPoly().binomial_form() == "0"
    assert (qpow(3) * binom(3)).expanded() == "1/6*q^3*k^3 + 1/2*q^3*k^2 + 1/3*q^3*k"


def test_json_round_trip():
    p = qpow(3) * binom(3) - 1
    data = p.to_json()
    assert data[0] == [3, 3, "1/6"]
    assert BPoly.from_json(data) == p


def test_no_floats():
    with pytest.raises(TypeError):
        UPoly([0.5])
    with pytest.raises(TypeError):
        BPoly({(0, 0): 0.5})


def test_zero_coefficients_not_stored():
    p = BPoly({(1, 1): 2, (0, 0): 0}) - BPoly({(1, 1): 2})
    assert p.terms == {}
    assert UPoly([1, 0, 0]).degree == 0


def test_substitutions():
    p = qpow(2, 4) * binom(2) - qpow(1, 4) * K + 1
    assert p.at_k(1) == UPoly([1, -4, 4])
    assert p.at_q(1) == UPoly([1, -2, 2], "k")
    assert p.q_coefficient(2) == binom_in_k(2) * 4


def test_upoly_variable_mismatch():
    with pytest.raises(ValueError):
        UPoly([1, 1], "q") + UPoly([1, 1], "k")


small = st.integers(-5, 5)
bpolys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small, max_size=6).map(BPoly)


@settings(max_examples=60, deadline=None)
@given(bpolys, bpolys, bpolys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == BPoly()


@settings(max_examples=60, deadline=None)
@given(bpolys, small, small)
def test_evaluation_is_a_homomorphism(a, q, k):
    b = a * a + 3
    assert b.evaluate(q, k) == a.evaluate(q, k) ** 2 + 3


@st.composite
def poly_with_dimension(draw):
    d = draw(st.integers(0, 5))
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, d)), st.integers(-20, 20), max_size=8))
    return BPoly(terms), d


@settings(max_examples=200, deadline=None)
@given(poly_with_dimension())
def test_decompose_round_trip(pd):
    p, d = pd
    assert recompose(binomial_basis_decompose(p, d), d) == p


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), max_size=4).map(UPoly), min_size=1, max_size=6))
def test_recompose_then_decompose(cs):
    d = len(cs) - 1
    assert binomial_basis_decompose(recompose(cs, d), d) == cs
