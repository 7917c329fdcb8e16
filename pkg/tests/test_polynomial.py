import pytest
from hypothesis import given, strategies as st

from chdiag.polynomial import A, A_INV, DELTA, LaurentPolynomial

polys = st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=5).map(LaurentPolynomial)


def test_zero_terms_dropped():
    assert LaurentPolynomial({1: 0, 2: 3}).terms == {2: 3}
    assert not LaurentPolynomial({0: 0})


def test_delta():
    assert DELTA == -(A ** 2) - A_INV ** 2
    assert DELTA * DELTA == LaurentPolynomial({4: 1, 0: 2, -4: 1})


def test_inverse_powers():
    assert A ** -3 == LaurentPolynomial.monomial(-3)
    assert (-A) ** -1 == -A_INV
    with pytest.raises(ValueError):
        (A + 1) ** -1


def test_repr():
    assert repr(LaurentPolynomial({5: -1, -3: -1, -7: 1})) == "-A^5 - A^-3 + A^-7"
    assert repr(LaurentPolynomial()) == "0"


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == 0


@given(polys, st.integers(-5, 5))
def test_shift_and_invert(p, k):
    assert p.shift(k) == p * LaurentPolynomial.monomial(k)
    assert p.invert_variable().invert_variable() == p
