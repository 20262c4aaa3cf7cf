"""Exact computations with nearly Frobenius structures on finite-dimensional algebras."""

from .algebra import (
    Algebra, Element, Subspace, TensorElement, algebra_from_json, algebra_to_json,
    center, direct_product, ideal_generated, is_unit, left_mult_matrix, make_algebra,
    mul, parse_element, radical, right_ideal, right_mult_matrix, socle_left,
    socle_right, subspace_power, tensor_product,
)
from .errors import AlgebraError, ParseError
from .frobenius import (
    Coproduct, Counit, FrobeniusSpace, FrobeniusVerdict, all_handles_zero,
    frobenius_check, frobenius_from_counit, frobenius_space, handle,
    handle_in_radical, handle_socle_power, is_separable, product_coproduct,
    separability_element, star_action, symbolic_handle, symmetric_subspace,
    tensor_coproduct,
)
from .presentations import (
    Presentation, Quiver, build_algebra, builtin, classify, enumerate_paths,
    parse_presentation,
)
from .schur import (
    AlgebraMorphism, SchurData, check_split_counterexamples, find_section,
    identity_morphism, is_symmetric_counit, make_morphism, morphism_from_generators,
    parse_morphism, schur_element, section, verify_casimir_transport,
    verify_handle_transport,
)

__version__ = "0.1.0"
