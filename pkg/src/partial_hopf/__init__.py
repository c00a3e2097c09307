"""Exact partial actions and coactions of finite-dimensional Hopf algebras
on the base field, with verifiers, self-duality transport, and a
classification solver.  All arithmetic is exact; symbolic parameters make
"for all alpha" statements polynomial identities."""

from .algebras import (
    InvalidOrder,
    dual_group_algebra_cyclic,
    group_algebra_cyclic,
    nichols,
    taft,
)
from .classify import (
    BranchLimitExceeded,
    ClassificationError,
    ClassifiedActions,
    NonCyclicGrouplikes,
    SolvedAction,
    classify_base_field_actions,
    family_count,
)
from .duality import (
    HopfMorphism,
    check_character_sum,
    compose,
    invert_morphism,
    is_identity,
    nichols_dual,
    nichols_from_dual,
    nichols_to_dual,
    taft_dual,
    taft_from_dual,
    taft_to_dual,
    transport,
    verify_hopf_morphism,
)
from .exact_arith import (
    CycNumber,
    OrderMismatch,
    ParamPoly,
    Rational,
    cyc_invert,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    zeta_pow,
)
from .expr import parse_poly
from .families import (
    ActionFamily,
    CoactionFamily,
    NotADivisor,
    action_consequence_checks,
    convolution_idempotent,
    dual_group_action_families,
    group_action_families,
    instance_residual,
    nichols_action_families,
    nichols_coaction_families,
    nichols_counit_action,
    nichols_global_coaction,
    nichols_parametric_action,
    nichols_parametric_coaction,
    special_value_checks,
    taft_action_families,
    taft_coaction_families,
    taft_parametric_action,
    taft_parametric_coaction,
    taft_subgroup_action,
    taft_subgroup_coaction,
    verify_partial_action,
    verify_partial_coaction,
    verify_symmetric_action,
    verify_symmetric_coaction,
)
from .hopf_core import (
    AlgebraMismatch,
    AlgElement,
    Functional,
    HopfData,
    HopfFormatError,
    HopfValidationError,
    Report,
    basis_element,
    dual_hopf,
    from_json_dict,
    to_json_dict,
    unit_element,
    validate_all,
)
from .qcomb import (
    Verdict,
    check_identity,
    check_pascal,
    generic_q,
    q_binomial,
    q_factorial,
    q_number,
)
from .reference_tables import reference_checks

__all__ = [
    "ActionFamily",
    "AlgElement",
    "AlgebraMismatch",
    "BranchLimitExceeded",
    "ClassificationError",
    "ClassifiedActions",
    "CoactionFamily",
    "CycNumber",
    "Functional",
    "HopfData",
    "HopfFormatError",
    "HopfMorphism",
    "HopfValidationError",
    "InvalidOrder",
    "NonCyclicGrouplikes",
    "NotADivisor",
    "OrderMismatch",
    "ParamPoly",
    "Rational",
    "Report",
    "SolvedAction",
    "Verdict",
    "action_consequence_checks",
    "basis_element",
    "check_character_sum",
    "check_identity",
    "check_pascal",
    "classify_base_field_actions",
    "compose",
    "convolution_idempotent",
    "cyc_invert",
    "cyclotomic_polynomial",
    "divisors",
    "dual_group_action_families",
    "dual_group_algebra_cyclic",
    "dual_hopf",
    "euler_phi",
    "family_count",
    "from_json_dict",
    "generic_q",
    "group_action_families",
    "group_algebra_cyclic",
    "instance_residual",
    "invert_morphism",
    "is_identity",
    "nichols",
    "nichols_action_families",
    "nichols_coaction_families",
    "nichols_counit_action",
    "nichols_dual",
    "nichols_from_dual",
    "nichols_global_coaction",
    "nichols_parametric_action",
    "nichols_parametric_coaction",
    "nichols_to_dual",
    "parse_poly",
    "q_binomial",
    "q_factorial",
    "q_number",
    "reference_checks",
    "special_value_checks",
    "taft",
    "taft_action_families",
    "taft_coaction_families",
    "taft_dual",
    "taft_from_dual",
    "taft_parametric_action",
    "taft_parametric_coaction",
    "taft_subgroup_action",
    "taft_subgroup_coaction",
    "taft_to_dual",
    "to_json_dict",
    "transport",
    "unit_element",
    "validate_all",
    "verify_hopf_morphism",
    "verify_partial_action",
    "verify_partial_coaction",
    "verify_symmetric_action",
    "verify_symmetric_coaction",
    "zeta_pow",
]

__version__ = "0.1.0"
