"""The torus S^1 x S^1, its Moebius group and the coincidence classification.

Triples and quadruples of pairwise distinct torus points are classified by the
pattern of coincidences among their x- and y-coordinates.  These patterns are
exactly the orbit types of the coordinatewise Moebius action.
"""

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from . import projline
from .errors import DegenerateError
from .projline import MobiusMap, format_ext, mobius_from_pair, mobius_from_triple, mobius_to_zero


class TorusPoint(NamedTuple):
    x: object
    y: object

    @classmethod
    def of(cls, x, y):
        return cls(projline.ext(x), projline.ext(y))

    def swapped(self):
        return TorusPoint(self.y, self.x)

    def __str__(self):
        return f"({format_ext(self.x)}, {format_ext(self.y)})"


def points(*pairs):
    """Build a tuple of torus points from ``(x, y)`` pairs of loose values."""
    return tuple(TorusPoint.of(x, y) for x, y in pairs)


@dataclass(frozen=True)
class TorusMap:
    """``(x, y) -> (g1(x), g2(y))``, followed by the swap ``(x, y) -> (y, x)`` if ``swap``."""

    g1: MobiusMap
    g2: MobiusMap
    swap: bool = False

    @classmethod
    def identity(cls):
        return cls(MobiusMap.identity(), MobiusMap.identity())

    @classmethod
    def iota0(cls):
        return cls(MobiusMap.identity(), MobiusMap.identity(), swap=True)

    def __call__(self, p):
        return torus_apply(self, p)

    def __matmul__(self, other):
        return torus_compose(self, other)

    def inverse(self):
        if not self.swap:
            return TorusMap(self.g1.inverse(), self.g2.inverse())
        return TorusMap(self.g2.inverse(), self.g1.inverse(), swap=True)

    def apply_all(self, pts):
        return tuple(self(p) for p in pts)


def torus_apply(g, p):
    q = TorusPoint(g.g1(p.x), g.g2(p.y))
    return q.swapped() if g.swap else q


def torus_compose(g, h):
    """``g o h`` (apply ``h`` first)."""
    if not h.swap:
        return TorusMap(g.g1 @ h.g1, g.g2 @ h.g2, g.swap)
    return TorusMap(g.g2 @ h.g1, g.g1 @ h.g2, not g.swap)


def _require_distinct(pts, code):
    for i, j in combinations(range(len(pts)), 2):
        if pts[i] == pts[j]:
            raise DegenerateError(f"torus points {i + 1} and {j + 1} coincide: {pts[i]}", code=code)


# -- triples -------------------------------------------------------------------


class TripleCase(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"
    F = "f"


def _equal_pairs(values):
    return [(i + 1, j + 1) for i, j in combinations(range(len(values)), 2) if values[i] == values[j]]


@dataclass(frozen=True)
class TripleClass:
    case: TripleCase
    x_equal: tuple = ()
    y_equal: tuple = ()

    @property
    def label(self):
        fmt = lambda idx: "{" + ",".join(map(str, idx)) + "}"
        tag = self.case.value
        if self.case is TripleCase.A:
            return "triple:a"
        if self.case is TripleCase.B:
            return f"triple:b{fmt(self.y_equal)}"
        if self.case in (TripleCase.C, TripleCase.D):
            return f"triple:{tag}{fmt(self.x_equal)}"
        if self.case is TripleCase.E:
            return f"triple:e{fmt(self.y_equal)}"
        return f"triple:f{fmt(self.x_equal)}{fmt(self.y_equal)}"

    def __str__(self):
        return self.label


def _index_set(pairs):
    return tuple(sorted({i for pair in pairs for i in pair}))


def classify_triple(t):
    t = tuple(t)
    if len(t) != 3:
        raise ValueError("a triple needs exactly three points")
    _require_distinct(t, "DEGENERATE_TRIPLE")
    xe = _equal_pairs([p.x for p in t])
    ye = _equal_pairs([p.y for p in t])
    xs, ys = _index_set(xe), _index_set(ye)
    if not xe and not ye:
        return TripleClass(TripleCase.A)
    if len(ye) == 3:
        return TripleClass(TripleCase.B, y_equal=ys)
    if len(xe) == 3:
        return TripleClass(TripleCase.C, x_equal=xs)
    if xe and ye:
        return TripleClass(TripleCase.F, x_equal=xs, y_equal=ys)
    if xe:
        return TripleClass(TripleCase.D, x_equal=xs)
    return TripleClass(TripleCase.E, y_equal=ys)


def _pair_then_lone(values):
    # (shared value, lone value) of a coordinate triple with exactly two equal entries
    for i, j in combinations(range(3), 2):
        if values[i] == values[j]:
            lone = ({0, 1, 2} - {i, j}).pop()
            return values[i], values[lone]
    raise AssertionError("no coincident pair")


def normalize_triple(t):
    """Return ``(g, g(t))`` with ``g(t)`` the fixed normal form of the triple's class.

    Normal forms: a) ``((0,0), (oo,oo), (1,1))``; b) ``((0,0), (oo,0), (1,0))``;
    c) ``((0,0), (0,oo), (0,1))``.  For d) the repeated x-value goes to 0 and
    the other one to oo while the y-coordinates go to ``(0, oo, 1)``; e) is the
    mirror image.  For f) each coordinate takes two values; the repeated one
    goes to 0 and the other to oo.
    """
    t = tuple(t)
    cls = classify_triple(t)
    xs = [p.x for p in t]
    ys = [p.y for p in t]
    case = cls.case
    if case in (TripleCase.A, TripleCase.B, TripleCase.E):
        g1 = mobius_from_triple(*xs)
    elif case is TripleCase.C:
        g1 = mobius_to_zero(xs[0])
    else:
        g1 = mobius_from_pair(*_pair_then_lone(xs))
    if case in (TripleCase.A, TripleCase.C, TripleCase.D):
        g2 = mobius_from_triple(*ys)
    elif case is TripleCase.B:
        g2 = mobius_to_zero(ys[0])
    else:
        g2 = mobius_from_pair(*_pair_then_lone(ys))
    g = TorusMap(g1, g2)
    return g, g.apply_all(t)


# -- Circles -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Circle:
    """The Moebius embedding ``x -> (g1(x), g2(x))`` of S^1 into the torus."""

    g1: MobiusMap
    g2: MobiusMap

    @classmethod
    def standard(cls):
        return cls(MobiusMap.identity(), MobiusMap.identity())

    @property
    def graph_map(self):
        """The map ``h = g2 o g1^-1``; the Circle is the graph ``y = h(x)``."""
        return self.g2 @ self.g1.inverse()

    def __call__(self, x):
        return TorusPoint(self.g1(x), self.g2(x))

    def __eq__(self, other):
        if not isinstance(other, Circle):
            return NotImplemented
        return self.graph_map == other.graph_map

    def __hash__(self):
        return hash(self.graph_map)


def circle_through(t):
    t = tuple(t)
    cls = classify_triple(t)
    if cls.case is not TripleCase.A:
        raise DegenerateError(
            f"only triples with distinct x- and y-coordinates lie on a Circle (got {cls.label})",
            code="WRONG_TRIPLE_CLASS",
        )
    g, _ = normalize_triple(t)
    return Circle(g.g1.inverse(), g.g2.inverse())


def circle_contains(circle, p):
    return circle.graph_map(p.x) == p.y


def circle_involution(circle):
    """The involution fixing the Circle pointwise: ``(x, y) -> (h^-1(y), h(x))``."""
    h = circle.graph_map
    return TorusMap(h, h.inverse(), swap=True)


# -- quadruples ----------------------------------------------------------------


class CoordCase(enum.Enum):
    DISTINCT = 1       # four distinct values
    ONE_PAIR = 2       # exactly two equal, three distinct values
    TRIPLE = 3         # three equal
    ALL_EQUAL = 4      # all four equal
    TWO_PAIRS = 22     # two distinct values, each taken twice


@dataclass(frozen=True)
class CoordPattern:
    """Coincidence pattern of four circle points: case plus the index groups."""

    case: CoordCase
    groups: tuple = ()

    def text(self, axis):
        if self.case is CoordCase.DISTINCT:
            return f"{axis}1"
        if self.case is CoordCase.ALL_EQUAL:
            return f"{axis}4"
        body = "".join("{" + ",".join(map(str, g)) + "}" for g in self.groups)
        return f"{axis}{self.case.value}{body}"


def coord_pattern(values):
    groups = []
    for i, v in enumerate(values):
        for group in groups:
            if group[0] == v:
                group[1].append(i + 1)
                break
        else:
            groups.append((v, [i + 1]))
    multi = sorted(tuple(idx) for _, idx in groups if len(idx) > 1)
    if not multi:
        return CoordPattern(CoordCase.DISTINCT)
    if len(multi) == 2:
        return CoordPattern(CoordCase.TWO_PAIRS, tuple(multi))
    case = {2: CoordCase.ONE_PAIR, 3: CoordCase.TRIPLE, 4: CoordCase.ALL_EQUAL}[len(multi[0])]
    return CoordPattern(case, tuple(multi) if case is not CoordCase.ALL_EQUAL else ())


@dataclass(frozen=True)
class QuadClass:
    xcase: CoordPattern
    ycase: CoordPattern

    @property
    def admissible(self):
        return self.xcase.case is CoordCase.DISTINCT and self.ycase.case is CoordCase.DISTINCT

    @property
    def dimension(self):
        """Dimension of the corresponding component of the configuration space."""
        if self.admissible:
            return 2
        if CoordCase.DISTINCT in (self.xcase.case, self.ycase.case):
            return 1
        return 0

    @property
    def row(self):
        """The ``(x case, y case)`` pair of case numbers, e.g. ``(1, 2)``."""
        return (self.xcase.case.value, self.ycase.case.value)

    @property
    def label(self):
        if self.admissible:
            return "admissible"
        return f"{self.xcase.text('x')}|{self.ycase.text('y')}"

    def transposed(self):
        return QuadClass(self.ycase, self.xcase)

    def __str__(self):
        return self.label


def classify_quad(q):
    q = tuple(q)
    if len(q) != 4:
        raise ValueError("a quadruple needs exactly four points")
    _require_distinct(q, "DEGENERATE_QUAD")
    return QuadClass(coord_pattern([p.x for p in q]), coord_pattern([p.y for p in q]))


def _set_partitions(n=4):
    """Restricted growth strings of length n: one representative per set partition."""

    def rec(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            yield from rec(prefix + [v], max(top, v))

    yield from rec([0], 0)


def component_catalog():
    """Every orbit type of pairwise-distinct quadruples, with its dimension.

    Enumerates the coincidence pattern of the x- and of the y-coordinates (a set
    partition of the four indices each) and keeps the combinations that admit
    four pairwise-distinct torus points.  Returns ``(label, dimension)`` pairs
    sorted by decreasing dimension; the admissible stratum appears once.
    """
    catalog = []
    for xv in _set_partitions():
        for yv in _set_partitions():
            if len(set(zip(xv, yv))) < 4:
                continue
            cls = QuadClass(coord_pattern(xv), coord_pattern(yv))
            catalog.append((cls.label, cls.dimension))
    catalog.sort(key=lambda e: (-e[1], e[0]))
    return catalog


def catalog_row_counts(catalog=None):
    """Tally non-admissible catalog entries by ``(x case, y case)``, e.g. ``{(1, 2): 6}``."""
    counts = Counter()
    for label, _ in component_catalog() if catalog is None else catalog:
        if label != "admissible":
            xs, ys = label.split("|")
            counts[(_case_number(xs), _case_number(ys))] += 1
    return dict(counts)


def _case_number(text):
    digits = ""
    for ch in text[1:]:
        if not ch.isdigit():
            break
        digits += ch
    return int(digits)
