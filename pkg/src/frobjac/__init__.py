"""Frobenius matrices, generalized Wronskians and Jacobians over F_p."""

from frobjac.errors import CapacityError, DimensionError, Inconclusive, InvariantViolation
from frobjac.frobenius import (
    FrobeniusDecomposition,
    Verdict,
    delta,
    express_in_powers,
    frobenius_decompose,
    frobenius_recompose,
    is_frobenius_basis,
    linear_map,
    linear_map_delta,
    q_exponent,
    represent_delta_multiple,
    u_matrix,
    verify_lemma2,
    verify_prop2,
    verify_theorem_principal_case,
)
from frobjac.polynomial import (
    PolyMap,
    PolyMatrix,
    Polynomial,
    adjugate,
    derive,
    det_cofactor,
    det_fraction_free,
    jacobian,
    jacobian_ideal_generators,
    jacobian_matrix,
    monomial_power,
    substitute,
)
from frobjac.textio import parse_map, parse_polynomial, print_canonical

__version__ = "0.1.0"
