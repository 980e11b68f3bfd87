from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from basicqh.cyclotomic import (
    CyclotomicNumber,
    cyclotomic_polynomial,
    from_json,
    lift,
    multiplicative_order,
    one,
    rational,
    root_of_unity,
    zero,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(9) == [1, 0, 0, 1, 0, 0, 1]


def test_roots_of_unity_examples():
    assert root_of_unity(4, 2) == -one(4)
    assert root_of_unity(5, 5).is_one()
    z3 = root_of_unity(9, 3)
    assert not z3.is_one() and (z3 ** 3).is_one()
    assert root_of_unity(7, 0) is one(7)


@pytest.mark.parametrize("n", range(1, 61))
def test_root_orders_and_phi_vanishes(n):
    z = root_of_unity(n)
    assert multiplicative_order(z) == n
    for k in (0, 1, n - 1, 2 * n + 3):
        assert (root_of_unity(n, k) ** n).is_one()
    # Phi_n(zeta_n) = 0
    acc = zero(n)
    for i, c in enumerate(cyclotomic_polynomial(n)):
        if c:
            acc = acc + root_of_unity(n, i) * rational(n, c)
    assert acc.is_zero()


def test_field_examples():
    z = root_of_unity(5)
    assert (one(5) + z + z ** 2 + z ** 3 + z ** 4).is_zero()
    assert (root_of_unity(9) * root_of_unity(9, 8)).is_one()
    w = root_of_unity(6) - 1
    assert (w.inverse() * w).is_one()
    with pytest.raises(ZeroDivisionError):
        zero(5).inverse()


def test_multiplicative_order_examples():
    assert multiplicative_order(root_of_unity(25, 5)) == 5
    assert multiplicative_order(one(3)) == 1
    assert multiplicative_order(root_of_unity(9, 6)) == 3
    assert multiplicative_order(rational(5, 2)) is None
    with pytest.raises(ValueError):
        multiplicative_order(zero(3))


def test_mixed_orders_lift_to_lcm():
    s = root_of_unity(3) + root_of_unity(5)
    assert s.order == 15
    assert s == root_of_unity(15, 5) + root_of_unity(15, 3)
    assert lift(root_of_unity(5, 2), 25) == root_of_unity(25, 10)


def test_interning_and_json_round_trip():
    a = root_of_unity(12, 5) + rational(12, Fraction(3, 7))
    b = from_json(a.to_json())
    assert a == b and hash(a) == hash(b)
    assert CyclotomicNumber(12, a.coeffs) == a


def test_galois_conjugate():
    z = root_of_unity(7)
    assert z.conjugate(3) == root_of_unity(7, 3)
    with pytest.raises(ValueError):
        z.conjugate(7)


ORDER = 12
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elements(draw, n=ORDER):
    cs = draw(st.lists(fracs, min_size=n, max_size=n))
    acc = zero(n)
    for k, c in enumerate(cs):
        if c:
            acc = acc + root_of_unity(n, k) * rational(n, c)
    return acc


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == zero(ORDER)
    if not a.is_zero():
        assert (a * a.inverse()).is_one()
        assert (b / a) * a == b


@settings(max_examples=30, deadline=None)
@given(elements())
def test_canonical_form_is_idempotent(a):
    assert CyclotomicNumber(a.order, a.coeffs) == a
    assert len(a.coeffs) == 4  # phi(12)
