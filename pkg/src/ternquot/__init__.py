"""Integers as quotients of sums of distinct powers of 3.

Decide representability with the carry-value transducer, enumerate and
classify representations as universal or local, and cross-check everything
against a brute-force search over Newman polynomials.
"""
__version__ = "0.1.0"

from .numeric import (
    TernaryString,
    eval_ternary,
    feasible_interval,
    is_sum_distinct_powers,
    normalize,
    to_ternary,
)
from .newman import (
    IntPoly,
    Local,
    NewmanPoly,
    Universal,
    classify_pair,
    divrem,
    eval_at,
    gap_set,
    multiply,
    newman_from_ternary,
    product_is_newman,
    ternary_from_newman,
)
from .transducer import EdgeKind, build_digraph, export_dot, is_representable, step
from .representations import (
    Representation,
    Walk,
    classify,
    compose_decomposable,
    enumerate_indecomposable,
    enumerate_representations,
    extend_same_integer,
    rep_from_walk,
    scale_to_new_integer,
)
from .families import canonical_quotient, detect_families, gen_100, gen_3n2
from .oracle import brute_force, cross_check
from .catalog import build_catalog, classify_integer, scan_exceptions
