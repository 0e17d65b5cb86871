"""Python bindings for the weylkit C++ library.

Arbitrary precision integers are exchanged as Python ints.  Group names such
as ``"m12"`` resolve to JSON files in the fixtures directory (override with
the ``WEYLKIT_FIXTURES`` environment variable).
"""

from ._core import (
    CapExceeded,
    chop_dimensions,
    criterion_count,
    eliminate,
    element_order,
    factorizations,
    irreducible,
    parabolic_table,
    ppd,
    reduced_word,
    root_count,
    rootsys_json,
    run_criterion,
    s_arc_transitive,
    torus_invariant_factors,
    torus_order_poly,
    weyl_order,
)

__all__ = [
    "CapExceeded",
    "chop_dimensions",
    "criterion_count",
    "eliminate",
    "element_order",
    "factorizations",
    "irreducible",
    "parabolic_table",
    "ppd",
    "reduced_word",
    "root_count",
    "rootsys_json",
    "run_criterion",
    "s_arc_transitive",
    "torus_invariant_factors",
    "torus_order_poly",
    "weyl_order",
]
