"""Evaluation sets and the hypotheses that make their GRS codes self-dual."""

from .core import Block, EvalSet, ParameterError, symdiff_set, union_set
from .multiplicative import (ConditionReport, CosetParams, build_symdiff_mult,
                             check_generic_conditions, coset_intersection_size, exponent_set,
                             generic_conditions, mult_coset_union, side_exponents, symdiff_size)
from .presets import (FAMILIES, TRACE_THEOREMS, WORKED_EXAMPLES, LengthRow, PresetResult,
                      WorkedExample, check_example, enumerate_lengths, family_variants, preset,
                      trace_length, trace_problems, two_adic)
from .trace import (TraceSubspaceParams, additive_cosets, build_symdiff_trace_subspace,
                    build_union_trace_subspace, subspace, subspace_cosets, subspace_dim,
                    trace_fiber)

__all__ = [
    "Block", "EvalSet", "ParameterError", "symdiff_set", "union_set",
    "ConditionReport", "CosetParams", "build_symdiff_mult", "check_generic_conditions",
    "coset_intersection_size", "exponent_set", "generic_conditions", "mult_coset_union",
    "side_exponents", "symdiff_size",
    "FAMILIES", "TRACE_THEOREMS", "WORKED_EXAMPLES", "LengthRow", "PresetResult",
    "WorkedExample", "check_example", "enumerate_lengths", "family_variants", "preset",
    "trace_length", "trace_problems", "two_adic",
    "TraceSubspaceParams", "additive_cosets", "build_symdiff_trace_subspace",
    "build_union_trace_subspace", "subspace", "subspace_cosets", "subspace_dim", "trace_fiber",
]
