"""Certificates and brute-force checks for the star bound on intersecting families."""
from .core import (CAPACITY, Complex, Family, GroundSet, closure,
                   graph_is_complete, is_intersecting, rank, star)
from .enumeration import (EnumerationReport, all_complexes, canonical_form,
                          exhaustive_verify)
from .errors import (BudgetExceeded, CapacityError, ChvatalError,
                     HypothesisViolated, InternalInvariantBroken,
                     MalformedInput, NotIntersecting, PreconditionViolated,
                     RankTooHigh, UnknownVertex)
from .oracle import Verdict, max_intersecting, max_star, verify_chvatal
from .rank3 import (Certificate, dangling, lemma_all_case1, lemma_all_case2,
                    lemma_all_case3, sterboul)
from .transform import (CompressionResult, FlipContext, Improved, InStar,
                        Residuals, compress_step, flip, residuals,
                        two_star_compress)

__version__ = "0.1.0"
