"""Exact polynomial kernel: arithmetic, derivatives, resultants."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import sylvester_resultant
from planebranch import (
    BiPoly,
    ValidationError,
    intersection_multiplicity,
    jacobian_det,
    milnor_number,
    resultant_y,
)

x = BiPoly.x
y = BiPoly.y

coeffs = st.fractions(min_value=-8, max_value=8, max_denominator=4).filter(bool)
polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), coeffs, max_size=6
).map(BiPoly)


def rand_poly(rng, max_deg=4, max_terms=6, min_y_deg=0):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
        terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = c
    p = BiPoly(terms)
    if p.deg_y() < min_y_deg:
        p = p + y(min_y_deg)
    return p


# -- construction and inspection -------------------------------------------


def test_zero_and_constants():
    assert BiPoly.zero().is_zero()
    assert BiPoly({(0, 0): 0}).is_zero()
    assert BiPoly.one() == BiPoly.constant(1)
    assert str(BiPoly.zero()) == "0"
    assert BiPoly.constant(Fraction(2, 4)) == BiPoly.constant(Fraction(1, 2))


def test_degree_and_order():
    f = x(3) * y(2) + x(5)
    assert (f.deg_x(), f.deg_y()) == (5, 2)
    assert (f.ord_x(), f.ord_y()) == (3, 0)
    assert f.y_coefficient(2) == x(3)
    assert f.y_coefficient(1).is_zero()


def test_content_split():
    f = x(2) * y() + x(3)
    a, g = f.x_content()
    assert a == 2 and g == y() + x()
    b, h = (y(2) * (y() + x())).y_content()
    assert b == 2 and h == y() + x()


def test_weierstrass_predicate():
    assert (y(4) - 2 * x(3) * y(2) - x(5) * y() + x(6)).is_weierstrass()
    assert not (y(2) + y() + x()).is_weierstrass()  # unit coefficient
    assert not (2 * y(2) + x(3)).is_weierstrass()  # not monic
    assert not x(3).is_weierstrass()


def test_pow_rejects_negative():
    with pytest.raises(ValidationError):
        y() ** -1


def test_evaluate():
    f = (y(2) - x(3)) ** 2 - x(5) * y()
    assert f.evaluate(1, 1) == -1
    assert f.evaluate(0, 0) == 0
    assert f.evaluate(Fraction(1, 2), 2) == (4 - Fraction(1, 8)) ** 2 - Fraction(1, 16)


# -- ring structure ----------------------------------------------------------


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert (p - p).is_zero()


@given(polys, st.integers(0, 5))
def test_pow_matches_repeated_product(p, e):
    expected = BiPoly.one()
    for _ in range(e):
        expected = expected * p
    assert p**e == expected


# -- derivatives -------------------------------------------------------------


def _shift_x(p, a):
    # substitute x -> x + a using only ring operations
    out = BiPoly.zero()
    base = x() + BiPoly.constant(a)
    for (i, j), c in p.terms():
        out = out + BiPoly.monomial(c, 0, j) * base**i
    return out


def test_diff_against_shift_expansion(rng):
    for _ in range(50):
        p = rand_poly(rng)
        a, b = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        shifted = _shift_x(p, a)
        linear = sum(
            (c * b**j for (i, j), c in shifted.terms() if i == 1), Fraction(0)
        )
        assert p.diff_x().evaluate(a, b) == linear


@given(polys, polys)
def test_diff_product_rule(p, q):
    assert (p * q).diff_x() == p.diff_x() * q + p * q.diff_x()
    assert (p * q).diff_y() == p.diff_y() * q + p * q.diff_y()


def test_jacobian_det_antisymmetry():
    f = y(2) - x(3)
    g = y(3) + x() * y()
    assert jacobian_det(f, g) == -jacobian_det(g, f)
    assert jacobian_det(f, f).is_zero()


# -- resultants ---------------------------------------------------------------


def test_resultant_frozen_cases():
    assert resultant_y(y(2) - x(3), y()) == -x(3)
    assert resultant_y(y() - x(), y() + x()) == 2 * x()
    # swapping arguments flips the sign by (-1)^(deg f * deg h)
    assert resultant_y(y(), y(2) - x(3)) == -x(3)
    assert resultant_y(y() + x(), y() - x()) == -2 * x()


def test_resultant_matches_sylvester_oracle(rng):
    for _ in range(60):
        f = rand_poly(rng, max_deg=3, min_y_deg=1)
        h = rand_poly(rng, max_deg=3, min_y_deg=1)
        assert resultant_y(f, h) == sylvester_resultant(f, h), (f, h)


def test_resultant_multiplicative(rng):
    for _ in range(25):
        f = rand_poly(rng, max_deg=2, min_y_deg=1)
        g = rand_poly(rng, max_deg=2, min_y_deg=1)
        h = rand_poly(rng, max_deg=2, min_y_deg=1)
        assert resultant_y(f, g * h) == resultant_y(f, g) * resultant_y(f, h)


def test_resultant_of_common_factor_is_zero():
    f = (y() - x()) * (y() + x(2))
    h = (y() - x()) * (y(2) + x(3))
    assert resultant_y(f, h).is_zero()


# -- intersection numbers ------------------------------------------------------


def test_intersection_frozen_cases():
    f2 = (y(2) - x(3)) ** 2 - x(5) * y()
    assert intersection_multiplicity(y(2) - x(3), y()) == 3
    assert intersection_multiplicity(y(), y(2) - x(3)) == 3
    assert intersection_multiplicity(f2, y()) == 6
    assert intersection_multiplicity(f2, y(2) - x(3)) == 13
    assert intersection_multiplicity(f2, x()) == 4
    assert intersection_multiplicity(x(), y()) == 1
    assert intersection_multiplicity(x(2), y(3)) == 6
    assert intersection_multiplicity(x() + y(), x() - y()) == 1


def test_intersection_degenerate_inputs():
    assert intersection_multiplicity(BiPoly.one(), y()) == 0
    assert intersection_multiplicity(y(), BiPoly.constant(3)) == 0
    assert intersection_multiplicity(y(2), y()) == math.inf
    assert intersection_multiplicity(x() * y(), x() * (y() - x())) == math.inf


def test_intersection_symmetric(rng):
    for _ in range(30):
        f = rand_poly(rng, max_deg=3)
        h = rand_poly(rng, max_deg=3)
        assert intersection_multiplicity(f, h) == intersection_multiplicity(h, f)


# -- Milnor numbers -------------------------------------------------------------


def test_milnor_frozen_cases():
    assert milnor_number(y(2) - x(3)) == 2
    assert milnor_number(y(3) - x(4)) == 6
    assert milnor_number((y(2) - x(3)) ** 2 - x(5) * y()) == 16
    assert milnor_number((y(3) - 6 * x(3) * y() - x(4)) ** 2 - 9 * x(9)) == 38
    assert milnor_number(y() - x()) == 0


def test_milnor_rejects_nonisolated():
    with pytest.raises(ValidationError):
        milnor_number(y(2))
