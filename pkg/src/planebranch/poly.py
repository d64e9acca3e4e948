"""Exact arithmetic for bivariate polynomials over the rationals.

BiPoly is a sparse polynomial in x and y with Fraction coefficients.  On top
of the ring operations this module provides the y-resultant (subresultant
polynomial remainder sequence), local intersection multiplicity at the
origin, and the Milnor number, which are the exact backbone for everything
else in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf, lcm

from .errors import ValidationError

_RATIONAL_TYPES = (int, Fraction)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValidationError(f"coefficients must be rational, got {type(value).__name__}")


class BiPoly:
    """Polynomial in Q[x, y], stored as a map (x-exponent, y-exponent) -> coefficient.

    Instances are immutable by convention; all operations return new objects.
    Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for (i, j), c in dict(terms).items():
                if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
                    raise ValidationError(f"exponents must be nonnegative integers, got ({i}, {j})")
                c = _coerce(c)
                if c:
                    data[(i, j)] = c
        self._terms = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls, power: int = 1) -> "BiPoly":
        return cls({(power, 0): 1})

    @classmethod
    def y(cls, power: int = 1) -> "BiPoly":
        return cls({(0, power): 1})

    @classmethod
    def monomial(cls, c, i: int, j: int) -> "BiPoly":
        return cls({(i, j): c})

    # -- inspection ---------------------------------------------------

    def terms(self):
        """Terms in the canonical order: lexicographic by (x-exponent, y-exponent)."""
        return tuple(sorted(self._terms.items()))

    def support(self):
        return set(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def deg_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def deg_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def ord_x(self) -> int:
        """Largest a with x^a dividing the polynomial (error on zero)."""
        if not self._terms:
            raise ValidationError("ord_x of the zero polynomial")
        return min(i for i, _ in self._terms)

    def ord_y(self) -> int:
        if not self._terms:
            raise ValidationError("ord_y of the zero polynomial")
        return min(j for _, j in self._terms)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            s = data.get(key, Fraction(0)) + c
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        return _raw(data)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, _RATIONAL_TYPES):
            c = _coerce(other)
            if not c:
                return BiPoly.zero()
            return _raw({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        data = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = data.get(key, Fraction(0)) + c1 * c2
                if s:
                    data[key] = s
                else:
                    data.pop(key, None)
        return _raw(data)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int):
            raise ValidationError("polynomial power must be an integer")
        if n < 0:
            raise ValidationError("polynomial power must be nonnegative")
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and evaluation ---------------------------------------

    def diff_x(self) -> "BiPoly":
        return _raw({(i - 1, j): c * i for (i, j), c in self._terms.items() if i})

    def diff_y(self) -> "BiPoly":
        return _raw({(i, j - 1): c * j for (i, j), c in self._terms.items() if j})

    def evaluate(self, xv, yv) -> Fraction:
        xv = _coerce(xv)
        yv = _coerce(yv)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * xv**i * yv**j
        return total

    # -- structure ------------------------------------------------------

    def x_content(self):
        """Split off the largest x power: returns (a, f) with self = x^a * f."""
        a = self.ord_x()
        if a == 0:
            return 0, self
        return a, _raw({(i - a, j): c for (i, j), c in self._terms.items()})

    def y_content(self):
        b = self.ord_y()
        if b == 0:
            return 0, self
        return b, _raw({(i, j - b): c for (i, j), c in self._terms.items()})

    def y_coefficient(self, j: int) -> "BiPoly":
        """Coefficient of y^j, as a polynomial in x."""
        return _raw({(i, 0): c for (i, jj), c in self._terms.items() if jj == j})

    def shift_y(self, j: int) -> "BiPoly":
        return _raw({(i, jj + j): c for (i, jj), c in self._terms.items()})

    def is_monic_in_y(self) -> bool:
        n = self.deg_y()
        if n < 0:
            return False
        lead = {key: c for key, c in self._terms.items() if key[1] == n}
        return lead == {(0, n): Fraction(1)}

    def is_weierstrass(self) -> bool:
        """Monic in y with every lower y-coefficient vanishing at x = 0."""
        if not self.is_monic_in_y():
            return False
        n = self.deg_y()
        return all(i > 0 for (i, j) in self._terms if j < n)

    # -- formatting -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), c in sorted(self._terms.items(), key=lambda t: (-t[0][1], -t[0][0])):
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"


def _raw(data: dict) -> BiPoly:
    p = BiPoly.__new__(BiPoly)
    p._terms = data
    return p


def _as_poly(value):
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, _RATIONAL_TYPES):
        return BiPoly.constant(value)
    return NotImplemented


def jacobian_det(g: BiPoly, f: BiPoly) -> BiPoly:
    """Jacobian determinant g_x f_y - g_y f_x."""
    return g.diff_x() * f.diff_y() - g.diff_y() * f.diff_x()


# ---------------------------------------------------------------------------
# Univariate integer polynomials in x (little-endian coefficient lists).
# These back the resultant computation, where the y-coefficients live in Z[x]
# after clearing denominators.
# ---------------------------------------------------------------------------


def _u_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_add(p, q):
    n = max(len(p), len(q))
    out = [0] * n
    for idx, c in enumerate(p):
        out[idx] = c
    for idx, c in enumerate(q):
        out[idx] += c
    return _u_trim(out)


def _u_neg(p):
    return [-c for c in p]


def _u_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for a, ca in enumerate(p):
        if ca:
            for b, cb in enumerate(q):
                if cb:
                    out[a + b] += ca * cb
    return _u_trim(out)


def _u_pow(p, n):
    result = [1]
    base = p
    while n:
        if n & 1:
            result = _u_mul(result, base)
        n >>= 1
        if n:
            base = _u_mul(base, base)
    return result


def _u_exact_div(num, den):
    """Exact division in Z[x]; raises if the quotient is not integral."""
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return []
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact division in subresultant sequence")
        out[k - dd] = q
        for idx in range(dd + 1):
            num[k - dd + idx] -= q * den[idx]
    if any(num):
        raise ArithmeticError("inexact division in subresultant sequence")
    return _u_trim(out)


# y-polynomials over Z[x]: lists indexed by y power, entries are x-coefficient lists.


def _yp_trim(A):
    while A and not A[-1]:
        A.pop()
    return A


def _yp_deg(A):
    return len(A) - 1


def _yp_prem(A, B):
    """Pseudo-remainder of A by B: lc(B)^(deg A - deg B + 1) A mod B."""
    dB = _yp_deg(B)
    lb = B[dB]
    R = [list(c) for c in A]
    dR = _yp_deg(R)
    e = dR - dB + 1
    while R and _yp_deg(R) >= dB:
        dR = _yp_deg(R)
        lr = R[dR]
        shift = dR - dB
        new = [_u_mul(lb, c) for c in R]
        for t in range(dB + 1):
            new[t + shift] = _u_add(new[t + shift], _u_neg(_u_mul(lr, B[t])))
        R = _yp_trim(new)
        e -= 1
    if e > 0:
        scale = _u_pow(lb, e)
        R = [_u_mul(scale, c) for c in R]
    return R


def _clear_denominators(f: BiPoly):
    """Return (coeffs, den): coeffs[j] is the x-polynomial of y^j in den*f, over Z."""
    den = 1
    for _, c in f._terms.items():
        den = lcm(den, c.denominator)
    n = f.deg_y()
    coeffs = [[] for _ in range(n + 1)]
    for (i, j), c in f._terms.items():
        col = coeffs[j]
        if len(col) <= i:
            col.extend([0] * (i + 1 - len(col)))
        col[i] = int(c * den)
    return [_u_trim(c) for c in coeffs], den


def resultant_y(f: BiPoly, h: BiPoly) -> BiPoly:
    """Resultant of f and h with respect to y, a polynomial in x.

    Computed with the subresultant polynomial remainder sequence over Z[x]
    after clearing denominators; the rational correction is applied at the
    end, so the value is the actual resultant, sign included.
    """
    if f.is_zero() or h.is_zero():
        return BiPoly.zero()
    df, dh = f.deg_y(), h.deg_y()
    if df < 1 and dh < 1:
        raise ValidationError("resultant_y needs y-degree >= 1 in at least one argument")
    A, dena = _clear_denominators(f)
    B, denb = _clear_denominators(h)
    correction = Fraction(1, dena**dh * denb**df)
    sign = 1
    if _yp_deg(A) < _yp_deg(B):
        A, B = B, A
        if (_yp_deg(A) * _yp_deg(B)) % 2 == 1:
            sign = -sign
    if _yp_deg(B) == 0:
        res = _u_pow(B[0], _yp_deg(A))
        return _from_u(res, Fraction(sign) * correction)
    g = [1]
    hpow = [1]
    while _yp_deg(B) > 0:
        dA, dB = _yp_deg(A), _yp_deg(B)
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            sign = -sign
        R = _yp_prem(A, B)
        if not R:
            return BiPoly.zero()
        divisor = _u_mul(g, _u_pow(hpow, delta))
        A = B
        B = _yp_trim([_u_exact_div(c, divisor) for c in R])
        g = A[_yp_deg(A)]
        if delta > 0:
            hpow = _u_exact_div(_u_pow(g, delta), _u_pow(hpow, delta - 1))
    dA = _yp_deg(A)
    final = _u_exact_div(_u_pow(B[0], dA), _u_pow(hpow, dA - 1))
    return _from_u(final, Fraction(sign) * correction)


def _from_u(coeffs, scale: Fraction) -> BiPoly:
    return _raw({(i, 0): c * scale for i, c in enumerate(coeffs) if c})


# ---------------------------------------------------------------------------
# Local intersection numbers at the origin.
# ---------------------------------------------------------------------------


def _ord_at_y_axis(p: BiPoly):
    """Order in y of p(0, y); this is the intersection number (x, p) at 0."""
    candidates = [j for (i, j) in p._terms if i == 0]
    return min(candidates) if candidates else inf


def intersection_multiplicity(f: BiPoly, h: BiPoly):
    """Intersection multiplicity of the curves f = 0 and h = 0 at the origin.

    Returns a nonnegative integer, or math.inf when the curves share a
    component through the origin.  x-power content is split off explicitly
    and the remaining y-regular parts go through the y-resultant; the value
    is the local multiplicity whenever one argument is a Weierstrass
    polynomial times a unit, which covers every use in this package.
    """
    if f.is_zero() or h.is_zero():
        raise ValidationError("intersection multiplicity needs nonzero polynomials")
    if f.coefficient(0, 0) or h.coefficient(0, 0):
        return 0
    a, f1 = f.x_content()
    b, h1 = h.x_content()
    if a > 0 and b > 0:
        return inf
    total = a * _ord_at_y_axis(h1) + b * _ord_at_y_axis(f1)
    if f1.deg_y() == 0 or h1.deg_y() == 0:
        # after removing the x content a y-constant factor is a unit at 0
        return total
    res = resultant_y(f1, h1)
    if res.is_zero():
        return inf
    return total + res.ord_x()


def milnor_number(f: BiPoly) -> int:
    """Milnor number of an isolated singularity at the origin."""
    if f.is_zero():
        raise ValidationError("milnor_number of the zero polynomial")
    if f.coefficient(0, 0):
        raise ValidationError("milnor_number needs f(0,0) = 0")
    fx = f.diff_x()
    fy = f.diff_y()
    if fx.is_zero() and fy.is_zero():
        raise ValidationError("milnor_number of a constant")
    if fx.is_zero() or fy.is_zero():
        p = fy if fx.is_zero() else fx
        if p.coefficient(0, 0):
            return 0
        raise ValidationError("non-isolated singularity (infinite Milnor number)")
    m = intersection_multiplicity(fx, fy)
    if m is inf:
        raise ValidationError("non-isolated singularity (infinite Milnor number)")
    return m
