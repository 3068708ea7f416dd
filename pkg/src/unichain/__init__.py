"""Exact toolkit for uninorms on finite chains.

Construction, validation, classification, decomposition and composition of
uninorms with integer-index tables, plus exhaustive enumeration and the
certification experiment comparing structural distributivity conditions
against brute-force checking.
"""

from .core import (
    ChainScale,
    CheckReport,
    OpTable,
    RegionTag,
    Uninorm,
    Violation,
    dual,
    is_conjunctive,
    is_idempotent,
    is_locally_internal,
    region_of,
    underlying_tconorm,
    underlying_tnorm,
    validate_uninorm,
)
from .catalog import FamilySpec, from_string, idem_max, idem_min, luk_upper, make
from .distributivity import (
    ClassifyResult,
    Decomposition,
    Pick,
    TheoremCase,
    check_distributivity,
    classify_and_check,
    compose,
    decompose,
    equal_neutral_conditions,
    greater_neutral_conditions,
    less_neutral_conditions,
    necessity_conditions,
    verify_ordered_semiring,
)
from .search import (
    CertificationReport,
    EnumerationTask,
    certify,
    enumerate_partitioned,
    enumerate_uninorms,
    scan_pairs,
)

__version__ = "0.1.0"

__all__ = [
    "ChainScale",
    "CheckReport",
    "OpTable",
    "RegionTag",
    "Uninorm",
    "Violation",
    "dual",
    "is_conjunctive",
    "is_idempotent",
    "is_locally_internal",
    "region_of",
    "underlying_tconorm",
    "underlying_tnorm",
    "validate_uninorm",
    "FamilySpec",
    "from_string",
    "idem_max",
    "idem_min",
    "luk_upper",
    "make",
    "ClassifyResult",
    "Decomposition",
    "Pick",
    "TheoremCase",
    "check_distributivity",
    "classify_and_check",
    "compose",
    "decompose",
    "equal_neutral_conditions",
    "greater_neutral_conditions",
    "less_neutral_conditions",
    "necessity_conditions",
    "verify_ordered_semiring",
    "CertificationReport",
    "EnumerationTask",
    "certify",
    "enumerate_partitioned",
    "enumerate_uninorms",
    "scan_pairs",
]
