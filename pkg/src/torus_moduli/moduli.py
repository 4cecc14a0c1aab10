"""Moduli of admissible quadruples.

An admissible quadruple (x- and y-coordinates each pairwise distinct) is
determined up to the Moebius group by its vector cross-ratio ``(X(x), X(y))``,
and up to the group extended by the swap ``(x, y) -> (y, x)`` by the pair of
products ``u = X1``, ``v = X2``.  Such pairs fill the set where the
discriminant ``delta(u, v)`` is nonnegative; it vanishes exactly on quadruples
lying on a Circle.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import surd
from .errors import NotAdmissibleError, RegionError
from .projline import INF, cross_ratio, format_ext, mobius_from_triple
from .torus import TorusMap, TorusPoint, classify_quad


class VectorCrossRatio(NamedTuple):
    xr_x: object
    xr_y: object


class PTag(enum.Enum):
    P1_0 = "P1_0"
    P2_0 = "P2_0"
    P3_0 = "P3_0"
    P1_1 = "P1_1"
    P2_1 = "P2_1"
    P3_1 = "P3_1"
    OUTSIDE = "OUTSIDE"


class QTag(enum.Enum):
    Q1_0 = "Q1_0"
    Q2_0 = "Q2_0"
    Q3_0 = "Q3_0"
    Q1_1 = "Q1_1"
    Q2_1 = "Q2_1"
    Q3_1 = "Q3_1"


class PRegion(NamedTuple):
    tag: PTag
    boundary: bool = False

    def __str__(self):
        return self.tag.value


class QRegion(NamedTuple):
    tag: QTag
    boundary: bool = False

    def __str__(self):
        return self.tag.value


# Where the change of coordinates (a, b) -> (ab, (1-a)(1-b)) sends each Q component.
Q_TO_P_COMPONENT = {
    QTag.Q1_0: PTag.P1_0,
    QTag.Q2_0: PTag.P2_0,
    QTag.Q3_0: PTag.P3_0,
    QTag.Q1_1: PTag.P3_1,
    QTag.Q2_1: PTag.P1_1,
    QTag.Q3_1: PTag.P2_1,
}


def delta(u, v):
    """``u^2 + v^2 - 2u - 2v + 1 - 2uv``."""
    return u * u + v * v - 2 * u - 2 * v + 1 - 2 * u * v


def p_region(u, v):
    u, v = Fraction(u), Fraction(v)
    if u == 0 or v == 0:
        raise RegionError(f"moduli coordinate is zero: ({u}, {v})", code="ZERO_COORDINATE")
    if u < 0:
        return PRegion(PTag.P1_0 if v > 0 else PTag.P2_0)
    if v < 0:
        return PRegion(PTag.P3_0)
    d = delta(u, v)
    if d < 0:
        return PRegion(PTag.OUTSIDE)
    # sqrt(u)+sqrt(v) <= 1, sqrt(u)-sqrt(v) >= 1, sqrt(v)-sqrt(u) >= 1 in rational form
    if 1 - u - v >= 0:
        tag = PTag.P1_1
    elif u - v - 1 >= 0:
        tag = PTag.P2_1
    else:
        tag = PTag.P3_1
    return PRegion(tag, boundary=d == 0)


def in_p(u, v):
    try:
        return p_region(u, v).tag is not PTag.OUTSIDE
    except RegionError:
        return False


def _interval(a):
    if a < 0:
        return 0
    if a < 1:
        return 1
    return 2


_MIXED = {(0, 1): QTag.Q1_0, (0, 2): QTag.Q2_0, (1, 2): QTag.Q3_0}
_DIAGONAL = (QTag.Q1_1, QTag.Q2_1, QTag.Q3_1)


def q_region(a, b):
    a, b = Fraction(a), Fraction(b)
    for w in (a, b):
        if w in (0, 1):
            raise RegionError(f"cross-ratio value {w} is excluded", code="EXCLUDED_VALUE")
    lo, hi = min(a, b), max(a, b)
    i, j = _interval(lo), _interval(hi)
    if i == j:
        return QRegion(_DIAGONAL[i], boundary=lo == hi)
    return QRegion(_MIXED[(i, j)])


def q_to_p(a, b):
    q_region(a, b)
    a, b = Fraction(a), Fraction(b)
    return a * b, (1 - a) * (1 - b)


# -- quadruples ----------------------------------------------------------------


def _require_admissible(q):
    q = tuple(q)
    cls = classify_quad(q)
    if not cls.admissible:
        raise NotAdmissibleError(f"quadruple is not admissible ({cls.label})")
    return q


def vector_cross_ratio(q):
    q = _require_admissible(q)
    xs = [p.x for p in q]
    ys = [p.y for p in q]
    return VectorCrossRatio(cross_ratio(*xs), cross_ratio(*ys))


def torus_cross_ratio(p1, p2, p3, p4):
    """``X(x) * X(y)`` for four torus points, each coordinate quadruple distinct."""
    return cross_ratio(p1.x, p2.x, p3.x, p4.x) * cross_ratio(p1.y, p2.y, p3.y, p4.y)


@dataclass(frozen=True)
class ModuliPoint:
    u: object
    v: object
    delta: object
    region: PRegion

    @property
    def boundary(self):
        return self.region.boundary

    def to_json(self):
        return {
            "u": format_ext(self.u),
            "v": format_ext(self.v),
            "delta": format_ext(self.delta),
            "region": self.region.tag.value,
            "boundary": self.region.boundary,
        }


def moduli_pair(q):
    """``(X1, X2)`` without the region bookkeeping; works over any exact field."""
    p1, p2, p3, p4 = _require_admissible(q)
    return torus_cross_ratio(p1, p2, p3, p4), torus_cross_ratio(p1, p3, p2, p4)


def moduli(q):
    u, v = moduli_pair(q)
    return ModuliPoint(u, v, delta(u, v), p_region(u, v))


def on_circle(q):
    u, v = moduli_pair(q)
    return delta(u, v) == 0


def normal_form(q):
    """Normalize ``p1, p2, p4`` to ``(0,0), (oo,oo), (1,1)``.

    Returns ``(g, p3')``; the moved third point is the vector cross-ratio.
    """
    q = _require_admissible(q)
    p1, p2, p3, p4 = q
    g = TorusMap(mobius_from_triple(p1.x, p2.x, p4.x), mobius_from_triple(p1.y, p2.y, p4.y))
    return g, g(p3)


def equivalent(q, q2, allow_swap=False):
    """A map ``g`` with ``g(q) == q2`` pointwise, or None if there is none.

    Without ``allow_swap`` only coordinatewise maps are tried; with it, maps
    followed by the coordinate swap are allowed too.
    """
    g, t = normal_form(q)
    h, t2 = normal_form(q2)
    if t == t2:
        return h.inverse() @ g
    if allow_swap and t.swapped() == t2:
        return h.inverse() @ TorusMap.iota0() @ g
    return None


# -- reconstruction ------------------------------------------------------------


@dataclass(frozen=True)
class Reconstruction:
    points: tuple
    x: object
    y: object
    delta: Fraction
    exact: bool

    @property
    def third(self):
        return self.points[2]


def _standard_quad(x, y):
    return (TorusPoint(Fraction(0), Fraction(0)), TorusPoint(INF, INF), TorusPoint(x, y),
            TorusPoint(Fraction(1), Fraction(1)))


def reconstruct(u, v, mode="exact"):
    """An admissible quadruple with moduli ``(u, v)``, in normal form.

    The third point is ``(x, y)`` with ``x + y = 1 + u - v``, ``xy = u`` and
    ``x <= y``.  In exact mode irrational roots live in Q(sqrt(delta)); in
    numeric mode they are floats.
    """
    u, v = Fraction(u), Fraction(v)
    if u == 0 or v == 0:
        raise RegionError(f"({u}, {v}) has a zero coordinate", code="NOT_IN_P")
    d = delta(u, v)
    if d < 0:
        raise RegionError(f"({u}, {v}) is outside P: delta = {d} < 0", code="NOT_IN_P")
    s = 1 + u - v
    if mode == "exact":
        root = surd.sqrt(d)
        x, y = (s - root) / 2, (s + root) / 2
    elif mode == "numeric":
        root = float(d) ** 0.5
        x, y = (float(s) - root) / 2, (float(s) + root) / 2
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return Reconstruction(_standard_quad(x, y), x, y, d, exact=mode == "exact")


def numeric_residual(u, v, rec):
    """Largest absolute deviation of the moduli of ``rec`` from ``(u, v)``."""
    u2, v2 = moduli_pair(rec.points)
    return max(abs(float(u2) - float(u)), abs(float(v2) - float(v)))
