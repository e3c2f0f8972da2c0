"""High-precision verification of parametric Euler-sum identities.

The package pairs brute-force certified series evaluation (Euler-Maclaurin
tail completion, geometric-decay summation, tanh-sinh quadrature) with
closed-form right-hand sides built from Hurwitz zeta, polygamma, and
parametric polylogarithm values, over a registry of 31 identities.
"""

from .core import (ConvergenceError, PrecisionContext, SeriesValue,
                   SmoothTerm, integrate_adaptive, make_context,
                   sum_geometric, sum_series)
from .functions import (alt_hurwitz_zeta, alt_zeta, aux_sum_reciprocal,
                        digamma, euler_gamma, h_cap, hurwitz_zeta,
                        param_polylog, pi_cot_pi, polygamma, riemann_zeta)
from .combinatorics import (StirlingTable, alt_harmonic, harmonic,
                            partial_hurwitz, stirling1,
                            stirling_row_from_polynomial,
                            verify_harmonic_convolutions,
                            verify_stirling_closed_forms,
                            verify_stirling_sum_identities)
from .identities import (REGISTRY, IdentityEntry, ParamPoint,
                         VerificationResult, default_grid, get_identity,
                         verify_identity)
from .residues import (LocalExpansion, ResidueLedger, expand_kernel,
                       polygamma_neg_arg, residue_sum_check,
                       residues_even_kernel, residues_odd_kernel,
                       validate_expansion)

__version__ = "1.0.0"
