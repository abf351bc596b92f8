from .eisenstein import SQRT_MINUS_3, ZETA3, Eisenstein, Matrix3, eisenstein_mul, matrix3_power
from .factored import (
    FactoredNumber,
    factored_lcm,
    factored_mul,
    factored_pointwise_max,
    factored_product,
)
from .integers import factor_int, is_prime, padic_valuation


def factorize(n: int) -> FactoredNumber:
    """Signed prime factorization of a nonzero integer."""
    return FactoredNumber.from_int(n)


__all__ = [
    "SQRT_MINUS_3",
    "ZETA3",
    "Eisenstein",
    "FactoredNumber",
    "Matrix3",
    "eisenstein_mul",
    "factor_int",
    "factored_lcm",
    "factored_mul",
    "factored_pointwise_max",
    "factored_product",
    "factorize",
    "is_prime",
    "matrix3_power",
    "padic_valuation",
]
