"""Lens-space primitive trees: structure-case arithmetic, truncated primitive
disk complexes, tree involutions with fixed-locus analysis, and chord-diagram
surgery reduction.

All structured values (complexes, trees, patterns, traces) are plain dicts
and lists in the same JSON shapes the ``ptlens`` CLI reads and writes.
"""

from ._core import (
    analyze,
    are_homeomorphic,
    brute_force_fixed,
    build_ptree,
    check_automorphism,
    classify,
    complex_to_dot,
    fixed_point,
    generate,
    innermost_loop,
    normalize,
    outermost_arc_avoiding,
    ptree_to_dot,
    reduce_step,
    reduce_to_disjoint,
    swap_admissible,
    validate_complex,
    validate_pattern,
    validate_ptree,
    validate_structure,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "analyze",
    "are_homeomorphic",
    "brute_force_fixed",
    "build_ptree",
    "check_automorphism",
    "classify",
    "complex_to_dot",
    "fixed_point",
    "generate",
    "innermost_loop",
    "normalize",
    "outermost_arc_avoiding",
    "ptree_to_dot",
    "reduce_step",
    "reduce_to_disjoint",
    "swap_admissible",
    "validate_complex",
    "validate_pattern",
    "validate_ptree",
    "validate_structure",
    "verify",
]
