"""Coverage tables: which admissible orders the constructions reach, and
the outcome of running them."""

from __future__ import annotations

from dataclasses import replace
from math import gcd

from .construct import (
    VARIANTS,
    ZpParams,
    check_pq,
    construct_zp,
    construct_zpq,
    enumerate_admissible_pq,
    zpq_params,
)
from .errors import BadParams, NoLambda, VerificationFailed
from .modular import factorize, find_primitive_root, is_prime, order_mod

N_COLUMNS = ["n", "n_mod_8", "construction", "factors", "ord2_family"]
PQ_COLUMNS = ["p", "q", "pq", "gcd", "r1", "r2", "alpha2", "lambda", "subgroup_order"]


def ord2_family(n: int) -> bool:
    """True when every prime factor p of n has ord(2)_p = 2 (mod 4).

    This is the admissibility condition of an earlier, independent family of
    strong Skolem starters; it is reported for comparison only.
    """
    return n > 1 and all(order_mod(2, p) % 4 == 2 for p, _ in factorize(n))


def applicable_construction(n: int) -> tuple[str, tuple[int, ...]]:
    if n >= 11 and n % 8 == 3 and is_prime(n):
        return "zp", (n,)
    fs = factorize(n)
    if len(fs) == 2 and all(e == 1 for _, e in fs):
        p, q = fs[0][0], fs[1][0]
        try:
            check_pq(p, q)
        except BadParams:
            pass
        else:
            return "zpq", (p, q)
    return "none", ()


def _attempt(make) -> str:
    try:
        make()
    except NoLambda:
        return "no_lambda"
    except VerificationFailed:
        return "fail"
    return "ok"


def scan_orders(max_n: int, run: bool = False) -> list[dict]:
    """One row per admissible n (n = 1, 3 mod 8) with 11 <= n <= max_n."""
    rows = []
    for n in range(11, max_n + 1):
        if n % 8 not in (1, 3):
            continue
        kind, factors = applicable_construction(n)
        row = {
            "n": n,
            "n_mod_8": n % 8,
            "construction": kind,
            "factors": "*".join(map(str, factors)),
            "ord2_family": "yes" if ord2_family(n) else "no",
        }
        if run:
            for v in VARIANTS:
                if kind == "zp":
                    row[v] = _attempt(lambda: construct_zp(ZpParams.from_variant(n, v)))
                elif kind == "zpq":
                    row[v] = _attempt(lambda: construct_zpq(zpq_params(*factors, v)))
                else:
                    row[v] = ""
        rows.append(row)
    return rows


def scan_pairs(max_pq: int, run: bool = False) -> list[dict]:
    """One row per admissible (p, q) with pq <= max_pq."""
    rows = []
    for p, q in enumerate_admissible_pq(max_pq):
        row = {"p": p, "q": q, "pq": p * q, "gcd": gcd(p - 1, q - 1),
               "r1": find_primitive_root(p)}
        try:
            params = zpq_params(p, q)
        except NoLambda:
            row.update(r2="", alpha2="", subgroup_order="", **{"lambda": ""})
            params = None
        else:
            row.update(r2=params.r2, alpha2=params.alpha2,
                       subgroup_order=order_mod(params.alpha2, p * q),
                       **{"lambda": params.lam})
        if run:
            for v in VARIANTS:
                if params is None:
                    row[v] = "no_lambda"
                else:
                    pv = replace(params, variant=v)
                    row[v] = _attempt(lambda: construct_zpq(pv))
        rows.append(row)
    return rows


def columns(rows: list[dict], base: list[str]) -> list[str]:
    extra = [v for v in VARIANTS if rows and v in rows[0]]
    return base + extra
