"""Exact counting of relatively prime subsets of integer intervals.

A subset of positive integers is relatively prime when its elements have
greatest common divisor 1. This package evaluates closed-form counts of
such subsets (all sizes or a fixed size k) over intervals and unions of
two intervals, verifies a family of Mertens-function identities that
follow from those counts, and ships a small brute-force oracle used to
cross-check everything on feasible instances.
"""

from .arith import (
    MertensTable,
    MobiusTable,
    binom,
    build_mertens,
    build_mobius,
    divisors,
    ensure_mertens,
    ensure_mobius,
    gcd_all,
    mertens,
    pow2,
)
from .formulas import (
    CountResult,
    FormulaId,
    Interval,
    IntervalUnion,
    count,
    f_interval,
    f_prefix,
    f_prefix_union,
    f_union,
    fk_interval,
    fk_prefix,
    fk_prefix_union,
    fk_union,
    g_count,
    gk_count,
    h1_count,
    h1k_count,
    h2_count,
    h2k_count,
)
from .identities import (
    GcdCase,
    IdentityReport,
    SweepSummary,
    classify_case,
    sweep,
    verify_t31,
    verify_t32,
    verify_t33a,
    verify_t33b,
)
from .oracle import (
    CapacityError,
    ConstraintSpec,
    GroundSet,
    count_relprime,
    gcd_class_counts,
    gcd_partition_check,
    inversion_check,
    mobius_naive,
)

__version__ = "0.1.0"

__all__ = [
    "MobiusTable",
    "MertensTable",
    "build_mobius",
    "build_mertens",
    "ensure_mobius",
    "ensure_mertens",
    "mertens",
    "divisors",
    "gcd_all",
    "pow2",
    "binom",
    "Interval",
    "IntervalUnion",
    "FormulaId",
    "CountResult",
    "count",
    "f_prefix",
    "fk_prefix",
    "f_interval",
    "fk_interval",
    "f_prefix_union",
    "fk_prefix_union",
    "f_union",
    "fk_union",
    "g_count",
    "gk_count",
    "h1_count",
    "h1k_count",
    "h2_count",
    "h2k_count",
    "GcdCase",
    "IdentityReport",
    "SweepSummary",
    "classify_case",
    "sweep",
    "verify_t31",
    "verify_t32",
    "verify_t33a",
    "verify_t33b",
    "GroundSet",
    "ConstraintSpec",
    "CapacityError",
    "count_relprime",
    "gcd_class_counts",
    "gcd_partition_check",
    "inversion_check",
    "mobius_naive",
    "__version__",
]
