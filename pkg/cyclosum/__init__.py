__version__ = "0.1.0"

from .cyclotomic import cyclotomic, euler_phi, factorize, is_flat, moebius
from .polynomial import IntPolynomial, poly_divrem, poly_mul
from .search import SearchConfig, lowest_Hn_members, verify_conjecture
from .transform import lam_leung_pq, phi_T, verify_theorem_2pq
from .vanish import (
    ExponentSet,
    canonicalize,
    enumerate_minimal_sums,
    is_minimal_vanishing,
)

__all__ = [
    "ExponentSet",
    "IntPolynomial",
    "SearchConfig",
    "canonicalize",
    "cyclotomic",
    "enumerate_minimal_sums",
    "euler_phi",
    "factorize",
    "is_flat",
    "is_minimal_vanishing",
    "lam_leung_pq",
    "lowest_Hn_members",
    "moebius",
    "phi_T",
    "poly_divrem",
    "poly_mul",
    "verify_conjecture",
    "verify_theorem_2pq",
]
