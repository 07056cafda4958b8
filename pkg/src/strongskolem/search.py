"""Exhaustive backtracking search for (strong) Skolem starters of Z_n.

A Skolem starter of Z_n, n = 2k+1, is the same thing as a partition of
1..2k into pairs {a, a+i}, i = 1..k, so the search places one pair per
difference, largest difference first. The search itself uses no code from
:mod:`strongskolem.construct`, which is what lets it act as an oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .construct import (
    ZpParams,
    construct_zp,
    construct_zpq,
    enumerate_admissible_pq,
    primes_3_mod_8,
    zpq_params,
)
from .errors import BudgetExhausted, NoLambda, VerificationFailed
from .starter import Pair, Starter, canonical_form, classify

MODES = ("first", "count", "all")
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchConfig:
    n: int
    mode: str = "all"
    require_strong: bool = False
    budget: int = DEFAULT_BUDGET
    descending: bool = True

    def __post_init__(self):
        if self.n < 3 or self.n % 2 == 0:
            raise ValueError(f"n must be odd and >= 3, got {self.n}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")


@dataclass
class SearchResult:
    config: SearchConfig
    count: int = 0
    starters: list[Starter] = field(default_factory=list)
    nodes: int = 0
    exhaustive: bool = True


class _Stop(Exception):
    pass


def search_skolem(config: SearchConfig) -> SearchResult:
    """Run the search described by ``config``.

    In ``first`` mode the search stops after one hit. ``count`` keeps only
    the tally. Raises :class:`BudgetExhausted` carrying the partial
    :class:`SearchResult` (whose count is then a lower bound) if the node
    budget runs out before the tree is exhausted.
    """
    n, k = config.n, (config.n - 1) // 2
    strong = config.require_strong
    keep = config.mode != "count"
    diffs = list(range(k, 0, -1)) if config.descending else list(range(1, k + 1))
    result = SearchResult(config)
    seen: set[frozenset] = set()
    placed: list[tuple[int, int]] = []

    def emit():
        s = canonical_form(Starter(n, [Pair(a, b) for a, b in placed]))
        if s.pair_set in seen:
            return
        seen.add(s.pair_set)
        result.count += 1
        if keep:
            result.starters.append(s)
        if config.mode == "first":
            raise _Stop

    def place(depth: int, used: int, sums: int):
        if depth == k:
            emit()
            return
        i = diffs[depth]
        for a in range(1, n - i):
            b = a + i
            if used >> a & 1 or used >> b & 1:
                continue
            if strong:
                s = (a + b) % n
                if s == 0 or sums >> s & 1:
                    continue
            result.nodes += 1
            if result.nodes > config.budget:
                raise BudgetExhausted(
                    f"node budget {config.budget} exhausted for n={n}", result
                )
            placed.append((a, b))
            if strong:
                place(depth + 1, used | 1 << a | 1 << b, sums | 1 << s)
            else:
                place(depth + 1, used | 1 << a | 1 << b, sums)
            placed.pop()

    try:
        place(0, 0, 0)
    except _Stop:
        pass
    except BudgetExhausted:
        result.exhaustive = False
        raise
    result.starters.sort(key=lambda s: [(p.a, p.b) for p in sorted(s.pairs)])
    return result


# -- cross validation ------------------------------------------------------


@dataclass
class CrossCheck:
    label: str
    n: int
    outcome: str  # ok | no_lambda | verification_failed | not_in_oracle
    oracle_checked: bool = False
    detail: str = ""


def cross_validate(p_limit: int, pq_limit: int, search_limit: int = 19) -> list[CrossCheck]:
    """Construct every Z_p (p <= p_limit) and Z_pq (pq <= pq_limit) instance
    in both variants and check each against the predicates; instances with
    n <= search_limit are also looked up in the exhaustive oracle's output."""
    report: list[CrossCheck] = []
    oracle: dict[int, set[frozenset]] = {}

    def in_oracle(s: Starter) -> bool:
        if s.n not in oracle:
            found = search_skolem(SearchConfig(s.n, "all", require_strong=True))
            oracle[s.n] = {t.pair_set for t in found.starters}
        return s.pair_set in oracle[s.n]

    def record(label, n, make):
        try:
            s = make()
        except NoLambda as exc:
            report.append(CrossCheck(label, n, "no_lambda", detail=str(exc)))
            return
        except VerificationFailed as exc:
            report.append(CrossCheck(label, n, "verification_failed", detail=str(exc)))
            return
        if not classify(s).is_strong_skolem:
            report.append(CrossCheck(label, n, "verification_failed"))
            return
        if n <= search_limit:
            ok = in_oracle(s)
            report.append(CrossCheck(label, n, "ok" if ok else "not_in_oracle", True))
        else:
            report.append(CrossCheck(label, n, "ok"))

    for p in primes_3_mod_8(11, p_limit):
        for variant in ("x2", "half"):
            record(f"zp {p} {variant}", p,
                   lambda: construct_zp(ZpParams.from_variant(p, variant)))
    if pq_limit >= 33:
        for p, q in enumerate_admissible_pq(pq_limit):
            for variant in ("x2", "half"):
                record(f"zpq {p} {q} {variant}", p * q,
                       lambda: construct_zpq(zpq_params(p, q, variant)))
    return report
