"""Perfect splitter sets in cyclic groups: existence, construction, verification."""
from .cyclotomic import FactorizationError, MaskPoly, ap_decompose, cyclotomic_divides, divisor_partition, mask_of
from .existence import (ConstructionError, NonexistentError, SingularError, Verdict, bridge_k_to_kplus1,
                        check_family, construct_perfect, halve_for_symmetric, power_set, quartic_remark_check,
                        reduce_to_factorization)
from .factorization import (ComplementFactor, Labeling, build_complement, check_period_theorem,
                            complement_exists_bruteforce, direct_factor_test, is_factorization, stable_subgroup)
from .numtheory import (FactoredInteger, GroupCtx, RationalUnit, capped_valuation, discrete_log, factorize,
                        find_primitive_root, in_subgroup, is_power_residue, is_prime, is_primitive_root,
                        mult_order, subgroup_index, valuation)
from .quasiperfect import QuasiVerdict, floor_gap_characterization, lift_interval, no_quasi_B0k_km
from .splitter import (Interval, Kind, SplitterSet, classify, enumerate_perfect, max_splitter_bruteforce,
                       perfect_exists_bruteforce, read_set, verify_splitter)
from ._search import SearchBoundError

__version__ = "0.1.0"
