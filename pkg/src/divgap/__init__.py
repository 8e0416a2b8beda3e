"""Exact arithmetic for divisor-gap sequences, circle-elimination survivors,
and certified rational enclosures of their limit constants.

Everything is integer or Fraction arithmetic; no floating point enters any
certified path. Each headline result is computable by at least two
independent routes, and the test suite holds the routes to agreement.
"""

from .constants import (
    DEFAULT_TERMS,
    RelationReport,
    c_digits,
    c_enclosure,
    k3_digits,
    k3_enclosure,
    relation_check,
)
from .divisors import (
    DIVISOR_CAP,
    ORACLE_BOUND,
    DivisorPair,
    Factorization,
    check_divisor_count_law,
    check_middle_pair_law,
    delta,
    delta_above,
    delta_pair,
    divisor_count,
    divisor_list,
    divisor_list_factored,
    factorize,
    middle_pair_3x2k,
)
from .errors import (
    DivgapError,
    EmptyIntersection,
    InsufficientPrecision,
    NoQualifyingPair,
    OracleBoundExceeded,
    ResourceLimit,
    SimulationCapExceeded,
)
from .intervals import DigitCertificate, RationalInterval, render_digits
from .josephus import (
    SIMULATION_CAP,
    CeilingIteration,
    SurvivorResult,
    ow_sequence,
    survivor_recurrence,
    survivor_simulation,
    survivor_via_ow,
)
from .report import CheckRecord, VerificationReport
from .sequences import (
    FACTORED_TERM_LIMIT,
    PartialProductState,
    SequenceReport,
    a_seq,
    b_closed_form,
    b_seq,
    partial_product,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CeilingIteration",
    "CheckRecord",
    "DEFAULT_TERMS",
    "DIVISOR_CAP",
    "DigitCertificate",
    "DivgapError",
    "DivisorPair",
    "EmptyIntersection",
    "FACTORED_TERM_LIMIT",
    "Factorization",
    "InsufficientPrecision",
    "NoQualifyingPair",
    "ORACLE_BOUND",
    "OracleBoundExceeded",
    "PartialProductState",
    "RationalInterval",
    "RelationReport",
    "ResourceLimit",
    "SIMULATION_CAP",
    "SequenceReport",
    "SimulationCapExceeded",
    "SurvivorResult",
    "VerificationReport",
    "a_seq",
    "b_closed_form",
    "b_seq",
    "c_digits",
    "c_enclosure",
    "check_divisor_count_law",
    "check_middle_pair_law",
    "delta",
    "delta_above",
    "delta_pair",
    "divisor_count",
    "divisor_list",
    "divisor_list_factored",
    "factorize",
    "k3_digits",
    "k3_enclosure",
    "middle_pair_3x2k",
    "ow_sequence",
    "partial_product",
    "relation_check",
    "render_digits",
    "survivor_recurrence",
    "survivor_simulation",
    "survivor_via_ow",
    "verify_theorem",
]
