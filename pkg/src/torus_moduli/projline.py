"""The extended rational line, Moebius maps of S^1 and the real cross-ratio.

A point of S^1 = R u {oo} is either a :class:`~fractions.Fraction` or the
singleton :data:`INF`.  Internally every point is handled in homogeneous
coordinates ``[p : q]`` (``oo = [1 : 0]``), so that the point at infinity needs
no special casing in the arithmetic.  The finite values may also be
:class:`~torus_moduli.surd.QuadraticSurd` elements or floats; every routine
here only uses ring operations, equality and one final division.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DegenerateError, ParseError


class _Infinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def is_inf(x):
    return x is INF


def ext(value):
    """Coerce ``value`` to an extended real.

    Accepts :data:`INF`, ints, Fractions and the text forms ``"inf"``,
    ``"-7"``, ``"3/4"``.  Non-rational exact values (surds) pass through.
    """
    if value is INF:
        return INF
    if isinstance(value, str):
        return parse_ext(value)
    if isinstance(value, bool):
        raise TypeError("bool is not an extended real")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        if math.isinf(value):
            return INF
        return value
    return value


def parse_ext(text):
    s = text.strip()
    if s.lower() in ("inf", "infinity", "oo", "∞"):
        return INF
    try:
        if "/" in s:
            num, den = s.split("/")
            if not den.strip().lstrip("+").isdigit():
                raise ValueError
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an extended rational: {text!r}", code="PARSE_ERROR") from None


def format_ext(x):
    if x is INF:
        return "inf"
    return str(Fraction(x))


def homogeneous(x):
    """Homogeneous coordinates ``(p, q)`` of an extended real."""
    if x is INF:
        return (1, 0)
    return (x, 1)


def _int_homogeneous(x):
    # integer coordinates for rationals keep the hot paths free of Fraction arithmetic
    if x is INF:
        return (1, 0)
    t = type(x)
    if t is Fraction:
        return (x.numerator, x.denominator)
    if t is int:
        return (x, 1)
    return (x, 1)


def from_homogeneous(p, q):
    if q == 0:
        if p == 0:
            raise DegenerateError("zero homogeneous vector", code="ZERO_VECTOR")
        return INF
    if type(p) is int and type(q) is int:
        return Fraction(p, q)
    if isinstance(p, Rational) and isinstance(q, Rational):
        return Fraction(p) / Fraction(q)
    return p / q


def _bracket(x, y):
    # 2x2 determinant of homogeneous coordinates; a positive multiple of x - y for finite points
    (p, q), (r, s) = _int_homogeneous(x), _int_homogeneous(y)
    return p * s - q * r


def cross_ratio(x1, x2, x3, x4):
    """Real cross-ratio ``[x1, x2, x3, x4] = (x4-x2)(x3-x1) / ((x4-x1)(x3-x2))``.

    Infinite points cancel between numerator and denominator (the ``oo:oo = 1``
    convention).  When exactly two points coincide the value is one of the
    boundary values 0, 1 or :data:`INF`; a ``0/0`` form raises
    ``UNDEFINED_CROSS_RATIO``.
    """
    num = _bracket(x4, x2) * _bracket(x3, x1)
    den = _bracket(x4, x1) * _bracket(x3, x2)
    if den == 0:
        if num == 0:
            raise DegenerateError(
                f"cross-ratio of {x1}, {x2}, {x3}, {x4} is undefined",
                code="UNDEFINED_CROSS_RATIO",
            )
        return INF
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


class SeparationType(enum.Enum):
    SEP_12_34 = "SEP_12_34"
    SEP_13_24 = "SEP_13_24"
    SEP_14_23 = "SEP_14_23"


def _require_distinct(points, code):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if points[i] == points[j]:
                raise DegenerateError(
                    f"points {i + 1} and {j + 1} coincide ({format_point(points[i])})", code=code
                )


def format_point(x):
    return "inf" if x is INF else str(x)


def separation_type(x1, x2, x3, x4):
    """Which pairs of the four distinct points separate each other on the circle."""
    _require_distinct((x1, x2, x3, x4), "DEGENERATE_QUAD")
    x = cross_ratio(x1, x2, x3, x4)
    if x < 0:
        return SeparationType.SEP_12_34
    if x > 1:
        return SeparationType.SEP_13_24
    return SeparationType.SEP_14_23


@dataclass(frozen=True, init=False)
class MobiusMap:
    """A Moebius map ``x -> (a x + b) / (c x + d)`` with rational coefficients.

    Stored in a canonical integer form: coprime entries with the first nonzero
    entry positive, so that two maps are equal exactly when their matrices are
    proportional.  The plain constructor only admits orientation-preserving
    maps (``ad - bc > 0``); pass ``orientation="any"`` for the full projective
    group, which is needed to send an arbitrary triple to ``(0, oo, 1)``.
    """

    a: int
    b: int
    c: int
    d: int

    def __init__(self, a, b, c, d, orientation="preserving"):
        entries = [Fraction(v) for v in (a, b, c, d)]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if det == 0:
            raise DegenerateError("singular Moebius matrix", code="SINGULAR_MAP")
        if det < 0 and orientation == "preserving":
            raise DegenerateError(
                f"matrix ({a}, {b}, {c}, {d}) has negative determinant", code="NEGATIVE_DETERMINANT"
            )
        lcm = math.lcm(*(e.denominator for e in entries))
        ints = [int(e * lcm) for e in entries]
        g = math.gcd(*ints)
        ints = [v // g for v in ints]
        first = next(v for v in ints if v != 0)
        if first < 0:
            ints = [-v for v in ints]
        for name, v in zip("abcd", ints):
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def preserves_orientation(self):
        return self.det > 0

    def __call__(self, x):
        return mobius_apply(self, x)

    def __matmul__(self, other):
        return mobius_compose(self, other)

    def inverse(self):
        return mobius_inverse(self)

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))


def mobius_apply(m, x):
    p, q = _int_homogeneous(x)
    return from_homogeneous(m.a * p + m.b * q, m.c * p + m.d * q)


def mobius_compose(m1, m2):
    """``m1 o m2`` (apply ``m2`` first)."""
    return MobiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
        orientation="any",
    )


def mobius_inverse(m):
    return MobiusMap(m.d, -m.b, -m.c, m.a, orientation="any")


def mobius_from_triple(x1, x2, x3):
    """The unique map sending ``x1, x2, x3`` to ``0, oo, 1``.

    It is the map with ``[0, oo, f(x), 1] = [x1, x2, x, x3]``.  Its determinant
    is negative exactly when the triple is negatively oriented on the circle.
    """
    _require_distinct((x1, x2, x3), "DEGENERATE_TRIPLE")
    (p1, q1), (p2, q2) = _int_homogeneous(x1), _int_homogeneous(x2)
    k1 = _bracket(x3, x2)
    k2 = _bracket(x3, x1)
    return MobiusMap(k1 * q1, -k1 * p1, k2 * q2, -k2 * p2, orientation="any")


def mobius_from_pair(x1, x2):
    """An orientation-preserving map sending ``x1 -> 0`` and ``x2 -> oo``."""
    _require_distinct((x1, x2), "DEGENERATE_PAIR")
    (p1, q1), (p2, q2) = _int_homogeneous(x1), _int_homogeneous(x2)
    m = MobiusMap(q1, -p1, q2, -p2, orientation="any")
    if m.det < 0:
        m = MobiusMap(-m.a, -m.b, m.c, m.d, orientation="any")
    return m


def mobius_to_zero(x):
    """An orientation-preserving map sending ``x`` to 0."""
    if x is INF:
        return MobiusMap(0, -1, 1, 0)
    return MobiusMap(1, -x, 0, 1)
