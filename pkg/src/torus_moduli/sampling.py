"""Seeded random rationals, maps and quadruples.

Every generator takes an explicit :class:`random.Random`; :func:`record_rng`
derives an independent stream per ``(seed, index)`` so records can be produced
in any order with identical results.
"""

import random
from fractions import Fraction

from .moduli import delta, in_p, reconstruct
from .projline import INF, MobiusMap, cross_ratio
from .surd import rational_sqrt
from .torus import Circle, TorusMap, TorusPoint


def record_rng(seed, index):
    return random.Random(f"torus-moduli:{seed}:{index}")


def rational(rng, bound=20, max_den=12):
    return Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))


def nonzero_rational(rng, bound=20, max_den=12):
    while True:
        q = rational(rng, bound, max_den)
        if q != 0:
            return q


def ext_real(rng, p_inf=0.1, bound=20, max_den=12):
    if rng.random() < p_inf:
        return INF
    return rational(rng, bound, max_den)


def distinct_ext_reals(rng, n, p_inf=0.1, bound=20, max_den=12):
    out = []
    while len(out) < n:
        x = ext_real(rng, p_inf, bound, max_den)
        if x not in out:
            out.append(x)
    return out


def mobius_map(rng, orientation="preserving", bound=9):
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        det = a * d - b * c
        if det > 0 or (det < 0 and orientation == "any"):
            return MobiusMap(a, b, c, d, orientation=orientation)


def torus_map(rng, allow_swap=False):
    swap = allow_swap and rng.random() < 0.5
    return TorusMap(mobius_map(rng), mobius_map(rng), swap)


def admissible_quad(rng, p_inf=0.1):
    xs = distinct_ext_reals(rng, 4, p_inf)
    ys = distinct_ext_reals(rng, 4, p_inf)
    return tuple(TorusPoint(x, y) for x, y in zip(xs, ys))


def finite_admissible_quad(rng):
    return admissible_quad(rng, p_inf=0.0)


def circle_quad(rng):
    """Four distinct points on a random Circle."""
    circle = Circle(mobius_map(rng), mobius_map(rng))
    return tuple(circle(t) for t in distinct_ext_reals(rng, 4))


def positive_moduli_quad(rng):
    """An admissible quadruple whose two circle cross-ratios share a component."""
    while True:
        q = admissible_quad(rng)
        a = cross_ratio(*(p.x for p in q))
        b = cross_ratio(*(p.y for p in q))
        if a * b > 0 and (1 - a) * (1 - b) > 0:
            return q


def square_delta_moduli(rng):
    """A pair ``(u, v)`` in P whose discriminant is a rational square.

    Built from rational roots: ``u = xy``, ``v = (1-x)(1-y)`` with
    ``x, y`` rational, which makes ``delta = (x - y)^2``.
    """
    while True:
        x, y = nonzero_rational(rng), nonzero_rational(rng)
        if x != 1 and y != 1:
            return x * y, (1 - x) * (1 - y)


def irrational_delta_moduli(rng):
    """A pair ``(u, v)`` in P whose discriminant is not a rational square."""
    while True:
        u, v = nonzero_rational(rng, bound=10), nonzero_rational(rng, bound=10)
        if in_p(u, v) and rational_sqrt(delta(u, v)) is None:
            return u, v


def unimodular(rng, bound=7):
    """A random 2x2 rational matrix of determinant 1."""
    while True:
        a, b, c = (Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(3))
        if a != 0:
            # solve ad - bc = 1 for d
            return ((a, b), (c, (1 + b * c) / a))


def reconstruct_sample(rng, mode="exact"):
    u, v = square_delta_moduli(rng) if mode == "exact" else irrational_delta_moduli(rng)
    return (u, v), reconstruct(u, v, mode)
