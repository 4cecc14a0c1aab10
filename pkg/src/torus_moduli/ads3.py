"""The R^{2,2} model of the boundary of anti-de Sitter 3-space.

Vectors and matrices are tuples of Fractions.  The torus sits in projective
3-space as the null quadric of the form ``<x, y> = x1 y4 - x2 y3 - x3 y2 + x4 y1``
via the Segre embedding; the affine chart ``N`` (both coordinates finite) is a
group under coordinatewise addition, realized by the unipotent matrices
``T(x, y)``.
"""

import enum
from fractions import Fraction
from typing import NamedTuple

from .errors import Ads3Error
from .projline import INF, homogeneous

J = (
    (0, 0, 0, 1),
    (0, 0, -1, 0),
    (0, -1, 0, 0),
    (1, 0, 0, 0),
)

# A rational basis in which the Gram matrix of the form is diag(1, 1, -1, -1).
SIGNATURE_BASIS = (
    (Fraction(1), Fraction(0), Fraction(0), Fraction(1, 2)),
    (Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(0)),
    (Fraction(1), Fraction(0), Fraction(0), Fraction(-1, 2)),
    (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(0)),
)


def vec4(*entries):
    if len(entries) == 1:
        entries = tuple(entries[0])
    if len(entries) != 4:
        raise Ads3Error("a vector of R^{2,2} has four entries", code="BAD_SHAPE")
    return tuple(Fraction(e) for e in entries)


def mat_mul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def transpose(m):
    return tuple(zip(*m))


def identity(n=4):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def proportional(v, w):
    """True if ``v = c w`` for a nonzero scalar ``c``."""
    if not any(v) or not any(w):
        return False
    return all(v[i] * w[j] == v[j] * w[i] for i in range(len(v)) for j in range(len(v)))


def herm_form(x, y):
    return x[0] * y[3] - x[1] * y[2] - x[2] * y[1] + x[3] * y[0]


def gram(vectors):
    return tuple(tuple(herm_form(v, w) for w in vectors) for v in vectors)


class VectorClass(enum.Enum):
    POSITIVE = "POSITIVE"
    NULL = "NULL"
    NEGATIVE = "NEGATIVE"


def vector_class(x):
    if not any(x):
        raise Ads3Error("the zero vector has no class", code="ZERO_VECTOR")
    n = herm_form(x, x)
    if n > 0:
        return VectorClass.POSITIVE
    if n < 0:
        return VectorClass.NEGATIVE
    return VectorClass.NULL


# -- Segre embedding -----------------------------------------------------------


def proj_pair(value):
    """Homogeneous pair of an extended real, or a given pair made exact."""
    if isinstance(value, tuple):
        pair = (Fraction(value[0]), Fraction(value[1]))
    else:
        pair = tuple(Fraction(c) for c in homogeneous(value))
    if pair == (0, 0):
        raise Ads3Error("the zero pair is not a projective point", code="ZERO_VECTOR")
    return pair


def normalize_pair(pair):
    """Scale to ``[x : 1]``, or ``[1 : 0]`` for the point at infinity."""
    a, b = pair
    if b != 0:
        return (a / b, Fraction(1))
    return (Fraction(1), Fraction(0))


def pair_to_ext(pair):
    a, b = pair
    return INF if b == 0 else a / b


def segre(x, y):
    (x1, x2), (y1, y2) = proj_pair(x), proj_pair(y)
    return (x1 * y1, x1 * y2, x2 * y1, x2 * y2)


def segre_inverse(w):
    """Factor a rank-one vector ``w`` back into its two projective points."""
    w = vec4(w)
    if not any(w):
        raise Ads3Error("the zero vector is not a Segre image", code="ZERO_VECTOR")
    if w[0] * w[3] != w[1] * w[2]:
        raise Ads3Error(f"{list(map(str, w))} is not rank one", code="NOT_RANK_ONE")
    # w read as the 2x2 matrix x y^T; a nonzero row gives y, the matching column x
    rows = ((w[0], w[1]), (w[2], w[3]))
    r = 0 if any(rows[0]) else 1
    c = 0 if rows[r][0] != 0 else 1
    y = rows[r]
    x = (rows[0][c], rows[1][c])
    return normalize_pair(x), normalize_pair(y)


def n_lift(x, y):
    """The standard lift ``[xy, x, y, 1]`` of a point of N."""
    x, y = Fraction(x), Fraction(y)
    return (x * y, x, y, Fraction(1))


def _as_pairs(p):
    if isinstance(p, NPoint):
        return proj_pair(p.x), proj_pair(p.y)
    x, y = p
    return proj_pair(x), proj_pair(y)


def orthogonality_routes(p, q):
    """``<S(p), S(q)>`` computed directly and through its factorization."""
    (x, y), (x2, y2) = _as_pairs(p), _as_pairs(q)
    direct = herm_form(segre(x, y), segre(x2, y2))
    factored = (x[0] * x2[1] - x[1] * x2[0]) * (y[0] * y2[1] - y[1] * y2[0])
    return direct, factored


def orthogonal(p, q):
    direct, _ = orthogonality_routes(p, q)
    return direct == 0


def cross_completion_contains(p, q):
    """Whether ``q`` lies on one of the two coordinate circles through ``p``."""
    return q.x == p.x or q.y == p.y


# -- SL(2,R)^2 -> SO_0(2,2) ----------------------------------------------------


def mat2(entries):
    (a, b), (c, d) = entries
    return ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))


def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def inv2(m):
    d = det2(m)
    return ((m[1][1] / d, -m[0][1] / d), (-m[1][0] / d, m[0][0] / d))


def iso_sl2sq_to_so22(a1, a2):
    """The block matrix ``(a1_ij * a2^-1)``, i.e. the Kronecker product ``a1 (x) a2^-1``."""
    a1, a2 = mat2(a1), mat2(a2)
    if det2(a1) != 1 or det2(a2) != 1:
        raise Ads3Error("both factors must have determinant 1", code="NOT_UNIMODULAR")
    b = inv2(a2)
    return tuple(
        tuple(a1[i][k] * b[j][l] for k in range(2) for l in range(2))
        for i in range(2)
        for j in range(2)
    )


def preserves_form(m):
    return mat_mul(mat_mul(transpose(m), J), m) == tuple(tuple(Fraction(v) for v in row) for row in J)


# -- the group N ---------------------------------------------------------------


class NPoint(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y):
        if x is INF or y is INF:
            raise Ads3Error("points of N have finite coordinates", code="NOT_IN_N")
        return cls(Fraction(x), Fraction(y))


def n_T(x, y):
    x, y = Fraction(x), Fraction(y)
    one, zero = Fraction(1), Fraction(0)
    return (
        (one, y, x, x * y),
        (zero, one, zero, x),
        (zero, zero, one, y),
        (zero, zero, zero, one),
    )


def n_star(p, q):
    return NPoint(p.x + q.x, p.y + q.y)


def n_inverse(p):
    return NPoint(-p.x, -p.y)


def a_fn(p):
    return p.x * p.y


def gauge_sq(p):
    return abs(a_fn(p))


def rho_N_sq(p, q):
    return gauge_sq(n_star(n_inverse(q), p))


def cross_ratio_via_a(p1, p2, p3, p4):
    num = a_fn(n_star(p4, n_inverse(p2))) * a_fn(n_star(p3, n_inverse(p1)))
    den = a_fn(n_star(p4, n_inverse(p1))) * a_fn(n_star(p3, n_inverse(p2)))
    if den == 0 or num == 0:
        raise Ads3Error("a point lies in the cross-completion of another", code="DIVISION_BY_ZERO")
    return num / den


def dilation_matrix(delta):
    delta = Fraction(delta)
    return ((delta, Fraction(0)), (Fraction(0), 1 / delta))


def dilation_action(delta, delta2, p):
    """Action of the pair of diagonal matrices ``(D_delta, D_delta2)`` on N."""
    delta, delta2 = Fraction(delta), Fraction(delta2)
    if delta <= 0 or delta2 <= 0:
        raise Ads3Error("dilation parameters must be positive", code="NONPOSITIVE_DILATION")
    return NPoint(delta * delta * p.x, p.y / (delta2 * delta2))


def euclidean_sq(p, q):
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def euclidean_scaling_witness(delta, delta2):
    """Squared-length scale factors of the unit x- and y-steps under the dilation.

    The Euclidean metric is scaled uniformly only if the two factors agree.
    """
    o, ex, ey = NPoint.of(0, 0), NPoint.of(1, 0), NPoint.of(0, 1)
    img = lambda p: dilation_action(delta, delta2, p)
    fx = euclidean_sq(img(o), img(ex)) / euclidean_sq(o, ex)
    fy = euclidean_sq(img(o), img(ey)) / euclidean_sq(o, ey)
    return fx, fy
