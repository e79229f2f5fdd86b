"""Deterministic primality proving for N = m * p^l - 1 over norm-one groups
of quadratic rings, with a Miller-Rabin analogue and G(D)-Carmichael tools."""

from .baseline import BaselineVerdict, baseline_is_prime
from .carmichael import (
    CarmichaelReport,
    carmichael_bruteforce,
    factorize,
    korselt_check,
    pseudoprime_base_check,
    search_carmichael,
)
from .engine import (
    FormParams,
    InvalidForm,
    NonresidueNotFound,
    TestOutcome,
    Verdict,
    Witness,
    build_params,
    cyclotomic_test,
    default_multiplier,
    find_nonresidue_prime,
    is_strong_probable_prime,
    lucasian_test,
    lucasian_test_2k,
    mr2_search,
    mr2_test,
)
from .group import (
    CompositeWitness,
    GroupElement,
    crt_split_check,
    generate_base,
    group_order_bruteforce,
    is_cyclic_bruteforce,
    is_member,
    random_base,
    totient_analogue,
)
from .records import RunRecord, run_one
from .ring import NonInvertible, QuadraticContext, RingElement, from_omega, try_invert
from .symbols import exact_threshold_met, jacobi, kronecker

__all__ = [
    "baseline_is_prime",
    "BaselineVerdict",
    "build_params",
    "carmichael_bruteforce",
    "CarmichaelReport",
    "CompositeWitness",
    "crt_split_check",
    "cyclotomic_test",
    "default_multiplier",
    "exact_threshold_met",
    "factorize",
    "find_nonresidue_prime",
    "FormParams",
    "from_omega",
    "generate_base",
    "group_order_bruteforce",
    "GroupElement",
    "InvalidForm",
    "is_cyclic_bruteforce",
    "is_member",
    "is_strong_probable_prime",
    "jacobi",
    "korselt_check",
    "kronecker",
    "lucasian_test",
    "lucasian_test_2k",
    "mr2_search",
    "mr2_test",
    "NonInvertible",
    "NonresidueNotFound",
    "pseudoprime_base_check",
    "QuadraticContext",
    "random_base",
    "RingElement",
    "run_one",
    "RunRecord",
    "search_carmichael",
    "TestOutcome",
    "totient_analogue",
    "try_invert",
    "Verdict",
    "Witness",
]

__version__ = "0.1.0"
