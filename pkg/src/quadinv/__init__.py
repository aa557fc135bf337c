"""Exact mod-2 cohomological invariants over Q.

Square classes, Hilbert symbols and the graded cohomology ring; quadratic
forms with full local-global decision procedures; Pfister forms and
Cayley-Dickson composition algebras; reduced Jordan algebras with their
invariant vectors; and an executable verification harness (``quadinv`` CLI).
"""

from .arith import (
    Place,
    REAL_PLACE,
    Rational,
    SquareClass,
    hilbert_symbol,
    relevant_places,
    square_class,
)
from .cohomology import CohomClass, add, cohom_from_json, cup, is_zero, symbol
from .composition import (
    AlgebraElement,
    CompositionAlgebra,
    cayley_dickson,
    comp_isomorphic,
    e_invariant,
    is_split,
    pfister_form,
)
from .forms import (
    FormInvariants,
    QuadraticForm,
    diagonalize,
    form,
    invariants,
    isometric,
    isotropic,
    lambda_square,
    normalize_det1,
    orthogonal_sum,
    represents,
    scale,
    similar,
    simple_phi_step,
    tensor,
    total_sw,
)
from .jordan import (
    JordanElement,
    ReducedJordanAlgebra,
    jordan_isomorphic,
    jordan_product,
    make_jordan,
    split_jordan,
    trace_form_formula,
    trace_gram_oracle,
    v_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "CohomClass",
    "CompositionAlgebra",
    "FormInvariants",
    "JordanElement",
    "Place",
    "QuadraticForm",
    "REAL_PLACE",
    "Rational",
    "ReducedJordanAlgebra",
    "SquareClass",
    "add",
    "cayley_dickson",
    "cohom_from_json",
    "comp_isomorphic",
    "cup",
    "diagonalize",
    "e_invariant",
    "form",
    "hilbert_symbol",
    "invariants",
    "is_split",
    "is_zero",
    "isometric",
    "isotropic",
    "jordan_isomorphic",
    "jordan_product",
    "lambda_square",
    "make_jordan",
    "normalize_det1",
    "orthogonal_sum",
    "pfister_form",
    "relevant_places",
    "represents",
    "scale",
    "similar",
    "simple_phi_step",
    "split_jordan",
    "square_class",
    "symbol",
    "tensor",
    "total_sw",
    "trace_form_formula",
    "trace_gram_oracle",
    "v_invariants",
]
