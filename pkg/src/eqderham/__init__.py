"""eqderham: exact equivariant de Rham theory on finite models.

Builds Weil and Cartan models from Lie-algebra structure constants and
finite differential-graded-algebra models, converts between them, computes
equivariant cohomology in each degree, and evaluates equivariant
characteristic-class representatives of symbolically presented principal
bundles — everything over exact rationals, every identity checked.
"""

from ._backend import backend_name
from .ratlin import Rat, RatMatrix, kernel_basis, quotient_basis, rank, rat

__version__ = "0.1.0"

__all__ = [
    "Rat",
    "RatMatrix",
    "rat",
    "rank",
    "kernel_basis",
    "quotient_basis",
    "backend_name",
    "__version__",
]
