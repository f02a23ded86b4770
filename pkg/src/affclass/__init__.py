"""Divisor class groups and affine class groups of toric (monoid) rings,
hyperbolas and determinantal rings, with exact decision procedures for
coaffine, strongly coaffine and affine trivial divisors."""

from .errors import AffclassError
from .lattice import FGAbelianGroup, IntegerMatrix
from .monoid import MonoidRing
from .hyperbola import HyperbolaDatum
from .catalog import DeterminantalDatum

__all__ = [
    "AffclassError",
    "DeterminantalDatum",
    "FGAbelianGroup",
    "HyperbolaDatum",
    "IntegerMatrix",
    "MonoidRing",
]
__version__ = "0.1.0"
