"""Exact enumerative counts of plane curves: rational N_d, genus-two N_{2,d},
the two boundary contributions to N_{2,d}, and tacnodal rational counts T_d."""
from .cache import CacheFormatError, CountCache, load_cache, save_cache
from .exact import (
    CountingError,
    DecompositionViolation,
    DivisibilityViolation,
    ExactRational,
    IntegralityViolation,
    binomial,
    rational_to_integer,
)
from .genus_two import (
    THEOREM,
    GenusTwoBreakdown,
    GenusTwoCoefficients,
    breakdown,
    kqr_published,
    n_genus_two,
    tacnodal_count,
    w11_contribution,
    w13_contribution,
)
from .rational import DegreeSplit, n_rational, splits
from .verification import CheckResult, VerificationReport, check_decomposition, check_table, run_suite

__version__ = "0.1.0"
