"""Plethystic calculus and E-polynomials of GL_n character varieties, in exact arithmetic."""

from .partitions import Partition, RectPartition, enum_partitions, enum_rect_partitions, fibers_of_glue, glue
from .plethystic import adams, adams_inverse, pexp, pexp_rect, plog, sym_series
from .polycore import BalanceError, Poly2, PolyX, SeriesDomainError, TruncSeries

__all__ = [
    "BalanceError",
    "Partition",
    "Poly2",
    "PolyX",
    "RectPartition",
    "SeriesDomainError",
    "TruncSeries",
    "adams",
    "adams_inverse",
    "enum_partitions",
    "enum_rect_partitions",
    "fibers_of_glue",
    "glue",
    "pexp",
    "pexp_rect",
    "plog",
    "sym_series",
]
