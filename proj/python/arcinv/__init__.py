"""Arc-analytic invariants of Brieskorn polynomials."""

from ._core import (
    ArithmeticOverflow,
    BrieskornPoly,
    LaurentPoly,
    ParseError,
    RecoveryError,
    beta_closed,
    beta_recursive,
    classify,
    enumerate_normalized,
    euler_fiber,
    is_singular,
    modified_zeta,
    normalize,
    parse,
    plain_zeta,
    predicted_class_count,
    recover,
    relevant_exponents,
    roundtrip_check,
    sign_counts,
    zeta_equal,
    zeta_json,
)

__all__ = [
    "ArithmeticOverflow",
    "BrieskornPoly",
    "LaurentPoly",
    "ParseError",
    "RecoveryError",
    "beta_closed",
    "beta_recursive",
    "classify",
    "enumerate_normalized",
    "euler_fiber",
    "is_singular",
    "modified_zeta",
    "normalize",
    "parse",
    "plain_zeta",
    "predicted_class_count",
    "recover",
    "relevant_exponents",
    "roundtrip_check",
    "sign_counts",
    "zeta_equal",
    "zeta_json",
]
