"""Equivariant signature of directed strongly invertible knots from symmetric diagrams."""

from .algebra import connect_sum, mirror
from .catalog import build_7_4, build_torus_2_odd, build_unknot_axis_kink
from .diagram import SymmetricDiagram, load, parse, serialize, validate
from .errors import (AdmissibilityError, ConsistencyError, DiagramError, ParseError,
                     ValidationError)
from .invariant import InvariantReport, sigma_tilde

__all__ = [
    "AdmissibilityError", "ConsistencyError", "DiagramError", "InvariantReport",
    "ParseError", "SymmetricDiagram", "ValidationError", "build_7_4",
    "build_torus_2_odd", "build_unknot_axis_kink", "connect_sum", "load", "mirror",
    "parse", "serialize", "sigma_tilde", "validate",
]
