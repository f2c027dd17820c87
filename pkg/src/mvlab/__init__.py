"""mvlab: MV polytopes as BZ data, Kashiwara operators, the AM operator,
Dynkin folding and preprojective-algebra modules, all in exact arithmetic."""

from .rootsys import (NotAChamberWeightError, RootSystem, UnsupportedTypeError,
                      build_root_system, cartan_matrix, parse_root_system)
from .polytope import (BZDatum, Containment, LusztigDatum, NotMVError, PluckerViolationError,
                       bz_from_lusztig, compare, is_mv, lusztig_datum, sigma_act, trivial,
                       validate_edge_inequalities, validate_tropical_plucker, vertices_from_bz)
from .crystal import apply_word, c_value, epsilon, etilde, ftilde, generate, stats
from .amop import AMResult, am, check_conditions, m_double_prime, m_value, verify_theorem
from .folding import build_folding, fhat, fold, unfold

__version__ = "0.1.0"

__all__ = [
    "AMResult", "BZDatum", "Containment", "LusztigDatum", "NotAChamberWeightError",
    "NotMVError", "PluckerViolationError", "RootSystem", "UnsupportedTypeError", "am",
    "apply_word", "build_folding", "build_root_system", "bz_from_lusztig", "c_value",
    "cartan_matrix", "check_conditions", "compare", "epsilon", "etilde", "fhat", "fold",
    "ftilde", "generate", "is_mv", "lusztig_datum", "m_double_prime", "m_value",
    "parse_root_system", "sigma_act", "stats", "trivial", "unfold",
    "validate_edge_inequalities", "validate_tropical_plucker", "verify_theorem",
    "vertices_from_bz",
]
