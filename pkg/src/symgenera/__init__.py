"""Exact generating series for genera of symmetric products and configuration
spaces, built on pre-lambda rings of Laurent polynomials."""

from .errors import ConsistencyError, InputError, ParseError, SymGeneraError
from .genera import (
    GenusProfile,
    configuration_series,
    invariant_of_configuration_space,
    invariant_of_symmetric_product,
    signature_series,
    specialization_bridge,
    symmetric_series,
)
from .graded import (
    GradedDims,
    VirtualGradedDims,
    alt_power_brute,
    cycle_supertrace,
    cycle_traces,
    hodge_poly,
    phi_power,
    schur_multiplicity,
    sym_power_brute,
)
from .laurent import YX, YXZ, Y, Z, LaurentPoly, VariableSet
from .parse import parse_poly
from .prelambda import (
    adams_from_lambda,
    adams_from_sigma,
    adams_newton,
    lambda_from_adams,
    lambda_series,
    sigma_from_adams,
    sigma_series,
)
from .series import DEFAULT_ORDER, TruncatedSeries, binomial_series, geometric_factor
from .symgroup import (
    ClassFunction,
    Functional,
    character_table,
    class_size,
    functional,
    mn_character,
    partitions,
)

__version__ = "0.1.0"

__all__ = [
    "adams_from_lambda",
    "adams_from_sigma",
    "adams_newton",
    "alt_power_brute",
    "binomial_series",
    "character_table",
    "class_size",
    "ClassFunction",
    "configuration_series",
    "ConsistencyError",
    "cycle_supertrace",
    "cycle_traces",
    "DEFAULT_ORDER",
    "Functional",
    "functional",
    "GenusProfile",
    "geometric_factor",
    "GradedDims",
    "hodge_poly",
    "InputError",
    "invariant_of_configuration_space",
    "invariant_of_symmetric_product",
    "lambda_from_adams",
    "lambda_series",
    "LaurentPoly",
    "mn_character",
    "parse_poly",
    "ParseError",
    "partitions",
    "phi_power",
    "schur_multiplicity",
    "sigma_from_adams",
    "sigma_series",
    "signature_series",
    "specialization_bridge",
    "sym_power_brute",
    "SymGeneraError",
    "symmetric_series",
    "TruncatedSeries",
    "VariableSet",
    "VirtualGradedDims",
    "Y",
    "YX",
    "YXZ",
    "Z",
]
