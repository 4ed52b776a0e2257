"""Principal ideal categories of finite rings and their rings of proper cones."""

from .errors import (
    CriterionMismatch,
    NoJoin,
    NoRetraction,
    NoUniqueMax,
    ParseError,
    InvalidSpec,
    RRViolation,
    SizeExceeded,
)
from .ring import FiniteRing, opposite_ring, parse_ring_spec, verify_ring_axioms

__all__ = [
    "CriterionMismatch",
    "FiniteRing",
    "InvalidSpec",
    "NoJoin",
    "NoRetraction",
    "NoUniqueMax",
    "ParseError",
    "RRViolation",
    "SizeExceeded",
    "opposite_ring",
    "parse_ring_spec",
    "verify_ring_axioms",
]
