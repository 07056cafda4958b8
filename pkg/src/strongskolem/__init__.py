"""Strong Skolem starters of Z_p and Z_pq: construction, verification,
exhaustive search and one-factorizations."""

from .construct import (
    ZpParams,
    ZpqParams,
    admissible_n,
    build,
    choose_lambda,
    construct_zp,
    construct_zpq,
    enumerate_admissible_pq,
    zpq_params,
)
from .designs import Factorization, one_factorization
from .errors import (
    BadModulus,
    BadParams,
    BudgetExhausted,
    NoLambda,
    NotAStarter,
    NotAUnit,
    SkolemError,
    StructuralError,
    ValidationFailed,
    VerificationFailed,
    ZeroElement,
)
from .search import SearchConfig, cross_validate, search_skolem
from .starter import (
    Classification,
    Pair,
    Starter,
    Witness,
    canonical_form,
    check_skolem,
    check_starter,
    check_strong,
    classify,
)

__version__ = "0.1.0"
