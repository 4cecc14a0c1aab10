"""Positive cross-ratio, Moebius structure and the Ptolemy trichotomy.

All square roots stay symbolic.  A positive pair is carried by its squares
``(|X1|, |X2|)``; the comparisons ``sqrt(a) + sqrt(b)`` vs 1 and
``|sqrt(a) - sqrt(b)|`` vs 1 reduce, after one squaring, to the sign of
``(a + b - 1) +- 2 sqrt(ab)``, which :func:`torus_moduli.surd.sign_of`
decides with rational arithmetic only.
"""

import enum
import math
from fractions import Fraction
from typing import NamedTuple

from .errors import DegenerateError, RegionError
from .moduli import moduli_pair
from .projline import INF
from .surd import sign_of


class PositivePair(NamedTuple):
    b1_sq: Fraction
    b2_sq: Fraction

    @property
    def b1(self):
        return math.sqrt(self.b1_sq)

    @property
    def b2(self):
        return math.sqrt(self.b2_sq)


class PtolemyRegime(enum.Enum):
    EXPANSIVE = "EXPANSIVE"      # sum >= 1 and |difference| >= 1, both strict
    CONTRACTIVE = "CONTRACTIVE"  # sum < 1 and |difference| < 1
    EQ_DIFF_1 = "EQ_DIFF_1"      # sqrt(X1) - sqrt(X2) = 1
    EQ_DIFF_2 = "EQ_DIFF_2"      # sqrt(X2) - sqrt(X1) = 1
    EQ_SUM = "EQ_SUM"            # sqrt(X1) + sqrt(X2) = 1

    @property
    def is_equality(self):
        return self in (PtolemyRegime.EQ_DIFF_1, PtolemyRegime.EQ_DIFF_2, PtolemyRegime.EQ_SUM)


def mobius_structure(q):
    u, v = moduli_pair(q)
    if u <= 0 or v <= 0:
        raise RegionError(f"moduli ({u}, {v}) are not both positive", code="NEGATIVE_MODULUS")
    return PositivePair(Fraction(u), Fraction(v))


def ptolemy_signs(pp):
    """Signs of ``(sqrt a + sqrt b)^2 - 1`` and ``(sqrt a - sqrt b)^2 - 1``."""
    a, b = Fraction(pp[0]), Fraction(pp[1])
    if a <= 0 or b <= 0:
        raise RegionError(f"positive pair needs positive squares, got ({a}, {b})", code="NEGATIVE_MODULUS")
    return sign_of(a + b - 1, 2, a * b), sign_of(a + b - 1, -2, a * b)


def ptolemy_regime(pp):
    s_sum, s_diff = ptolemy_signs(pp)
    if s_sum == 0:
        return PtolemyRegime.EQ_SUM
    if s_diff == 0:
        return PtolemyRegime.EQ_DIFF_1 if pp[0] > pp[1] else PtolemyRegime.EQ_DIFF_2
    if s_sum > 0 and s_diff > 0:
        return PtolemyRegime.EXPANSIVE
    if s_sum < 0 and s_diff < 0:
        return PtolemyRegime.CONTRACTIVE
    # delta(a, b) < 0: no admissible quadruple has these moduli
    raise RegionError(f"({pp[0]}, {pp[1]}) lies outside P; the regime is mixed", code="NOT_IN_P")


def _dist_factor(s, t):
    # |s - t| on the extended line: |x - oo| = oo, |oo - oo| = 0
    if s is INF or t is INF:
        return Fraction(0) if s is t else INF
    return abs(s - t)


def rho_sq(p, q):
    """``|x1 - x2| * |y1 - y2|``, the square of the pseudo-semi-metric."""
    fx, fy = _dist_factor(p.x, q.x), _dist_factor(p.y, q.y)
    if fx is INF or fy is INF:
        other = fy if fx is INF else fx
        if other == 0:
            raise DegenerateError(f"rho({p}, {q}) is 0 * oo", code="INDETERMINATE")
        return INF
    return fx * fy


def positive_cross_ratio_sq(q):
    """``|X1(q)|``, the square of the positive cross-ratio."""
    u, _ = moduli_pair(q)
    return abs(u)


def positive_cross_ratio_sq_via_rho(q):
    """The same quantity as a quotient of squared distances; finite points only."""
    p1, p2, p3, p4 = q
    factors = [rho_sq(p4, p2), rho_sq(p3, p1), rho_sq(p4, p1), rho_sq(p3, p2)]
    if any(f is INF for f in factors) or factors[2] * factors[3] == 0:
        raise DegenerateError("rho quotient needs finite, non-orthogonal points", code="INDETERMINATE")
    return factors[0] * factors[1] / (factors[2] * factors[3])
