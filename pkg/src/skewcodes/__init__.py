"""Skew polynomial rings over finite fields and skew generalized cyclic codes."""

from ._accel import HAVE_COMPILED
from .bounds import (
    BoundCertificate,
    BoundFailure,
    MdsRow,
    constacyclic_moduli,
    mds_generator,
    mds_search,
    norm_condition_by_order,
    verify_bound1,
    verify_bound_general,
)
from .codes import (
    DEFAULT_BUDGET,
    Decomposition,
    SkewGCCode,
    code_from_generator_poly,
    code_record,
    code_component_split,
    decompose,
    dual_code,
    dual_pseudolinear_map,
    enumerate_right_divisors,
    is_invariant_code,
    minimum_distance,
    normalize_to_unit_constant,
)
from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    NotDivisorError,
    NotInvariantError,
    PreconditionError,
    SkewcodesError,
)
from .fields import (
    Automorphism,
    Derivation,
    Field,
    FieldElem,
    apply_automorphism,
    apply_derivation,
    element_order,
    extend_field,
    field_create,
    field_from_order,
)
from .linalg import (
    MatFq,
    flatten_additive_map,
    null_space,
    rank,
    row_space_equal,
    rref,
)
from .pseudolinear import (
    PseudoLinearMap,
    apply_T,
    apply_poly_T,
    companion_matrix,
    kernel_of_poly,
    matrix_minimal_poly,
    semilinear_minimal_poly,
    theta_conjugate_product,
    transformation_of,
)
from .skewpoly import (
    Factorization,
    RingCtx,
    SkewPoly,
    invariant_factorization,
    is_invariant,
    left_divide,
    lgcd,
    lgcd_bezout,
    lclm,
    lclm_many,
    norm,
    parse_poly,
    right_divide,
    skew_eval,
    x_inverse_mod_f,
)

__version__ = "0.1.0"
