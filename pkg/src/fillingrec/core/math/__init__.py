from fillingrec.core.math.polynomial import MultivariatePolynomial, Polynomial
from fillingrec.core.math.matrix import PolynomialMatrix, determinant
from fillingrec.core.math.recurrence import CharPoly, determinant_test, satisfies_order

__all__ = [
    'MultivariatePolynomial',
    'Polynomial',
    'PolynomialMatrix',
    'determinant',
    'CharPoly',
    'determinant_test',
    'satisfies_order',
]
