"""Certified lower bounds for the multidimensional Selberg sieve functional M_k.

Submodules: :mod:`simplex` (exact simplex integrals), :mod:`forms` (the
quadratic forms), :mod:`certify` (eigenvector certificates), :mod:`asymptotic`
(large-k bound), :mod:`tuples`, :mod:`gaps`, :mod:`sieve_lab` and :mod:`cli`.
"""

from .asymptotic import center_of_mass, g_integral_triple, mk_asymptotic, ratio_lower_bound
from .certify import MkCertificate, certify_mk, max_generalized_eigenpair, rationalize_vector, verify_certificate
from .forms import BasisTerm, FormPair, SymmetricPoly, assemble_forms, basis_terms, evaluate_ratio, i_entry, j_entry
from .gaps import gap_bound, min_k_for_m, primes_guaranteed, reproduce_headline
from .simplex import UniPoly, g_poly, moment_integral, monomial_integral
from .tuples import KTuple, builtin_h105, diameter, is_admissible, prime_offset_tuple, refine_admissible

__all__ = [
    "BasisTerm", "FormPair", "KTuple", "MkCertificate", "SymmetricPoly", "UniPoly",
    "assemble_forms", "basis_terms", "builtin_h105", "center_of_mass", "certify_mk",
    "diameter", "evaluate_ratio", "g_integral_triple", "g_poly", "gap_bound", "i_entry",
    "is_admissible", "j_entry", "max_generalized_eigenpair", "min_k_for_m", "mk_asymptotic",
    "moment_integral", "monomial_integral", "prime_offset_tuple", "primes_guaranteed",
    "rationalize_vector", "ratio_lower_bound", "refine_admissible", "reproduce_headline",
    "verify_certificate",
]
__version__ = "0.1.0"
