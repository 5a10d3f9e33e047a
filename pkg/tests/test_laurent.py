from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ttunlink.laurent import DELTA, ONE, ZERO, A, LaurentPoly

polys = st.dictionaries(st.integers(-20, 20), st.integers(-50, 50), max_size=6).map(LaurentPoly)


def test_no_zero_coefficients():
    p = LaurentPoly({1: 0, 2: 3, -1: 0})
    assert p.coeffs == {2: 3}
    assert LaurentPoly({0: 0}).is_zero()
    assert not ZERO


def test_combines_repeated_exponents():
    assert LaurentPoly([(1, 2), (1, -2), (3, 1)]) == LaurentPoly.monomial(3)


def test_delta_squared():
    assert DELTA * DELTA == LaurentPoly({4: 1, 0: 2, -4: 1})


def test_int_interop():
    assert ONE == 1
    assert 1 + A == A + 1
    assert (2 - A).coeffs == {0: 2, 1: -1}
    assert (A * 3).coeffs == {1: 3}


@pytest.mark.parametrize("k, expected", [(-1, {-1: 1}), (-3, {-3: 1}), (0, {0: 1}), (3, {3: 1})])
def test_monomial_powers(k, expected):
    assert (A**k).coeffs == expected


def test_negative_power_of_signed_monomial():
    assert (LaurentPoly.monomial(2, -1) ** -3).coeffs == {-6: -1}
    with pytest.raises(ValueError):
        DELTA**-1
    with pytest.raises(ValueError):
        LaurentPoly.monomial(1, 2) ** -1


def test_json():
    p = LaurentPoly({4: -1, -4: -1})
    assert p.to_json() == [[-4, -1], [4, -1]]
    assert p.dumps() == "[[-4,-1],[4,-1]]"
    assert LaurentPoly.from_json(p.dumps()) == p


def test_str():
    assert str(LaurentPoly({4: -1, -4: -1})) == "-A^4 - A^-4"
    assert str(LaurentPoly({1: 2, 0: -3})) == "2*A - 3"
    assert str(ZERO) == "0"


def test_in_t():
    # A^-4 = t, A^2 = t^(-1/2)
    assert LaurentPoly({-4: 1, 2: 5}).in_t() == {Fraction(1): 1, Fraction(-1, 2): 5}


def test_degree_span():
    assert LaurentPoly({-3: 1, 5: 2}).degree_span() == (-3, 5)
    assert ZERO.degree_span() is None


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, st.integers(-10, 10))
def test_shift_is_monomial_product(a, k):
    assert a.shift(k) == a * LaurentPoly.monomial(k)


@given(polys)
def test_hash_consistent(a):
    assert hash(a) == hash(LaurentPoly(a.coeffs))
