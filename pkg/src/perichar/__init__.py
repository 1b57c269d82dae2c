"""Exact computations in the supercharacter ring of the periplectic supergroup P(n).

Supercharacters are symmetric Laurent polynomials in ``x_1, ..., x_n``.  The
subpackages cover the polynomial arithmetic, Schur functions, weights and
their diagrams, thin Kac classes with the ``ds`` homomorphism, and Euler
characteristics of parabolically induced line bundles.
"""

from .cancel import CancelToken, Cancelled
from .euler import (OddRoot, ParabolicError, delta1_r, euler_characteristic,
                    euler_characteristic_direct, euler_schur_coefficients,
                    prop43_candidate, prop43_parameters, surjectivity_probe,
                    validate_levi_weight)
from .laurent import LaurentPolynomial, NotDivisibleError, PolynomialError
from .schur import (WeightError, alternant, is_dominant, is_symmetric, rho,
                    schur_decompose, schur_laurent, schur_ssyt_oracle)
from .superchar import (SupercharElement, SupercharError, ThinKacCombination,
                        ds_eval, ds_iterate, jn_membership, kernel_decompose,
                        r_minus1, sch_natural, sch_thin_kac, tensor_V_decompose,
                        thin_kac_expand, thin_kac_to_poly, translate_thin_kac)
from .weights import (BallMove, ball_moves, dominance_leq, from_diagram, parity,
                      render_diagram, to_diagram)

__version__ = "0.1.0"
