"""disclab: exact discriminant-set machinery and claim verification."""

from .polyring import (
    MultiPoly,
    VarId,
    WeightVector,
    NEG_INF,
    NotDivisibleError,
    ZeroPolynomialError,
    UnboundVariableError,
    PolyJSONError,
    a_var,
    b_var,
    generic_var,
    X_VAR,
    LAMBDA_VAR,
    poly_from_json,
    poly_to_json,
)
from .resultant import (
    PolyMatrix,
    UniPolyView,
    sylvester,
    det,
    resultant,
    generic_P,
    discriminant_R,
    P_k,
    V_k,
    D_tilde,
    deriv_resultant,
)

__version__ = "0.1.0"
