"""Exact lambda-Pfaffians: a one-parameter deformation of the Pfaffian whose
terms are weighted by the crossings and nestings of perfect matchings."""

from .errors import (
    CondensationPivotZero,
    DivisionByZero,
    InexactDivision,
    NonConstantEntry,
    OddGroundSet,
    OddResult,
    ParityViolation,
    ParseError,
    UnknownIndex,
)
from .kernels import BACKEND
from .matchings import PerfectMatching, enumerate_matchings, gap_sum, stats, weight
from .pfaffian import (
    SkewMatrix,
    generic,
    minor,
    pf_classical,
    pf_condensation,
    pf_expansion,
    verify_recurrence,
)
from .ring import Polynomial, canonical_string, exact_div, parse_polynomial, substitute

__version__ = "0.1.0"
