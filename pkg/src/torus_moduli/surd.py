"""Exact arithmetic in a real quadratic extension Q(sqrt(d)).

Elements are ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a positive
rational ``d`` that is not the square of a rational.  Any result whose
irrational part vanishes collapses back to a plain :class:`Fraction`, so
rational computations that pass through the extension come out as ordinary
rationals.
"""

import math
from fractions import Fraction
from numbers import Rational


def _sign(q):
    return (q > 0) - (q < 0)


def rational_sqrt(q):
    """Return the exact rational square root of ``q``, or None if there is none."""
    q = Fraction(q)
    if q < 0:
        return None
    n, m = q.numerator, q.denominator
    rn, rm = math.isqrt(n), math.isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    return None


def sign_of(a, b, d):
    """Sign of ``a + b*sqrt(d)`` for rationals a, b and d >= 0, decided exactly.

    Compares ``a**2`` against ``b**2 * d`` when the two terms have opposite
    signs; no square root is ever evaluated.
    """
    sa = _sign(a)
    sb = _sign(b) if d != 0 else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs, rhs = a * a, b * b * d
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


def sqrt(q):
    """Square root of a nonnegative rational, exact when rational, else a surd."""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"square root of negative rational {q}")
    r = rational_sqrt(q)
    if r is not None:
        return r
    return QuadraticSurd(0, 1, q)


class QuadraticSurd:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)
        if self.d <= 0 or rational_sqrt(self.d) is not None:
            raise ValueError(f"radicand {self.d} must be a positive non-square rational")

    @classmethod
    def _make(cls, a, b, d):
        if b == 0:
            return Fraction(a)
        return cls(a, b, d)

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                raise ValueError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other.a, other.b
        if isinstance(other, Rational):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self._make(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return self._make(self.a * a + self.b * b * self.d, self.a * b + self.b * a, self.d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadraticSurd(self.a, -self.b, self.d)

    def norm(self):
        """The rational ``a**2 - b**2 d``; zero only for the zero element."""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadraticSurd):
            self._coerce(other)
            return self * other.inverse()
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division of surd by zero")
            return self._make(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.inverse() * other
        return NotImplemented

    def sign(self):
        return sign_of(self.a, self.b, self.d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def _cmp(self, other):
        diff = self - other
        return diff.sign() if isinstance(diff, QuadraticSurd) else _sign(diff)

    def __eq__(self, other):
        if isinstance(other, QuadraticSurd):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((QuadraticSurd, self.a, self.b, self.d))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __repr__(self):
        return f"QuadraticSurd({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.d})"
