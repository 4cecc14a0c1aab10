"""Exact computations on the configuration space of four points in S^1 x S^1."""

from .errors import (
    Ads3Error,
    DegenerateError,
    NotAdmissibleError,
    ParseError,
    RegionError,
    TorusModuliError,
)
from .projline import INF, MobiusMap, SeparationType, cross_ratio, ext, mobius_from_triple, separation_type
from .torus import Circle, QuadClass, TorusMap, TorusPoint, classify_quad, classify_triple, points
from .moduli import ModuliPoint, equivalent, moduli, reconstruct
from .mobstruct import PositivePair, PtolemyRegime, mobius_structure, ptolemy_regime

__version__ = "0.1.0"
