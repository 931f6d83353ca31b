"""Exterior algebra with duality contractions and metric extensors."""

from .algebra import (
    MAX_DIM,
    AlgebraError,
    DimensionMismatch,
    KindMismatch,
    Multiform,
    Multivector,
    change_basis,
    grade_project,
    include,
    lift_matrix,
    wedge,
)
from .config import ConfigError, SessionConfig, parse_config
from .duality import (
    left_contract_mf,
    left_contract_mv,
    nondegeneracy_witness,
    pairing,
    right_contract_mf,
    right_contract_mv,
)
from .expressions import (
    KindError,
    ParseError,
    evaluate,
    format_value,
    parse_expression,
    pretty_print,
)
from .identities import IdentityReport, format_report, run_identity_suite, suite_passed
from .metric import (
    MetricExtensor,
    MetricTensor,
    PseudoscalarSet,
    extend,
    extend_inverse,
    extensor_from_tensor,
    pseudoscalars,
    reciprocal_basis,
    tensor_from_extensor,
)
from .products import (
    expand_multiform,
    expand_multivector,
    invert_extension_via_formula,
    invert_metric_via_formula,
    lcontract_mf,
    lcontract_mv,
    rcontract_mf,
    rcontract_mv,
    scalar_product_mf,
    scalar_product_mv,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIM",
    "AlgebraError",
    "DimensionMismatch",
    "KindMismatch",
    "Multivector",
    "Multiform",
    "change_basis",
    "grade_project",
    "include",
    "lift_matrix",
    "wedge",
    "ConfigError",
    "SessionConfig",
    "parse_config",
    "pairing",
    "left_contract_mv",
    "right_contract_mv",
    "left_contract_mf",
    "right_contract_mf",
    "nondegeneracy_witness",
    "KindError",
    "ParseError",
    "parse_expression",
    "pretty_print",
    "evaluate",
    "format_value",
    "IdentityReport",
    "run_identity_suite",
    "format_report",
    "suite_passed",
    "MetricTensor",
    "MetricExtensor",
    "PseudoscalarSet",
    "extend",
    "extend_inverse",
    "extensor_from_tensor",
    "tensor_from_extensor",
    "reciprocal_basis",
    "pseudoscalars",
    "scalar_product_mv",
    "scalar_product_mf",
    "lcontract_mv",
    "rcontract_mv",
    "lcontract_mf",
    "rcontract_mf",
    "invert_metric_via_formula",
    "invert_extension_via_formula",
    "expand_multivector",
    "expand_multiform",
]
