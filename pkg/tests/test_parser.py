"""Expression grammar: parsing, printing, error positions."""

from fractions import Fraction

import pytest

from planebranch import BiPoly, PolyParseError, parse_poly

x = BiPoly.x
y = BiPoly.y


def test_reference_inputs():
    f2 = parse_poly("(y^2-x^3)^2-x^5*y")
    assert f2 == y(4) - 2 * x(3) * y(2) - x(5) * y() + x(6)
    assert parse_poly("y") == y()
    f1 = parse_poly("(y^3-6*x^3*y-x^4)^2-9*x^9")
    assert f1.deg_y() == 6 and f1.is_weierstrass()


def test_rationals_and_whitespace():
    assert parse_poly("1/2*x") == BiPoly.monomial(Fraction(1, 2), 1, 0)
    assert parse_poly("  y ^ 2   -  x ^ 3 ") == y(2) - x(3)
    assert parse_poly("3/6") == BiPoly.constant(Fraction(1, 2))
    assert parse_poly("x^12") == x(12)


def test_leading_minus():
    assert parse_poly("-x^3 + y") == y() - x(3)
    assert parse_poly("(-x + y)^2") == (y() - x()) ** 2


def test_association_is_irrelevant():
    assert parse_poly("x*(y+2)") == parse_poly("x*y+2*x")
    assert parse_poly("(x+y)+x") == parse_poly("x+(y+x)")


def test_printer_roundtrip(rng):
    for _ in range(500):
        terms = {}
        for _k in range(rng.randint(0, 7)):
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            terms[(rng.randint(0, 6), rng.randint(0, 6))] = c
        p = BiPoly(terms)
        assert parse_poly(str(p)) == p, str(p)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("2x", "unexpected 'x'"),
        ("x y", "unexpected 'y'"),
        ("x^-2", "exponent"),
        ("x^(2)", "exponent"),
        ("x^1/2", "exponent"),
        ("", "empty input"),
        ("x +", "unexpected end"),
        ("(x", "expected ')'"),
        ("1/0", "zero denominator"),
        ("x $ y", "unexpected character"),
        ("x + * y", "unexpected '*'"),
        ("1 / 2", "unexpected character"),
        ("--x", "unexpected '-'"),
    ],
)
def test_rejects_malformed(text, fragment):
    with pytest.raises(PolyParseError) as err:
        parse_poly(text)
    assert fragment in str(err.value)


def test_error_positions():
    with pytest.raises(PolyParseError) as err:
        parse_poly("x +\n 2y")
    assert (err.value.line, err.value.column) == (2, 3)
    with pytest.raises(PolyParseError) as err:
        parse_poly("x ? y")
    assert (err.value.line, err.value.column) == (1, 3)
