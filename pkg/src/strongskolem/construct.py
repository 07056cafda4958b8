"""Quadratic-residue constructions of strong Skolem starters.

Two families:

* Z_p, p = 3 (mod 8): pair every quadratic residue x with beta*x, where
  beta is 2 or 2^-1.
* Z_pq, p < q both = 3 (mod 8), (p-1) not dividing (q-1): the three blocks
  p*QR(q), q*QR(p) and the units of Z_pq, the latter split into the cosets
  H, 2H, lambda*H, 2*lambda*H of H = <r2^2>.

Every starter leaving this module has been run through :func:`classify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import BadModulus, BadParams, NoLambda, VerificationFailed
from .modular import (
    coset,
    is_prime,
    is_primitive_root,
    order_mod,
    primitive_roots,
    qr_set,
    subgroup_of,
    totient,
)
from .starter import Pair, Starter, classify

VARIANTS = ("x2", "half")


def admissible_n(n: int) -> bool:
    """Orders for which a Skolem starter of Z_n can exist."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    return n % 8 in (1, 3)


def _beta(variant: str, n: int) -> int:
    if variant == "x2":
        return 2
    if variant == "half":
        return pow(2, -1, n)
    raise BadParams(f"variant must be one of {VARIANTS}, got {variant!r}")


def _verified(s: Starter, label: str) -> Starter:
    c = classify(s)
    if not c.is_strong_skolem:
        shown = "; ".join(w.describe() for w in c.witnesses[:4])
        raise VerificationFailed(f"{label} is not a strong Skolem starter: {shown}", c)
    return s


# -- Z_p -------------------------------------------------------------------


@dataclass(frozen=True)
class ZpParams:
    p: int
    beta: int

    @classmethod
    def from_variant(cls, p: int, variant: str = "x2") -> ZpParams:
        check_zp_modulus(p)
        return cls(p, _beta(variant, p))

    @property
    def variant(self) -> str:
        return "x2" if self.beta == 2 else "half"


def check_zp_modulus(p: int) -> None:
    if p < 11:
        raise BadModulus(f"p must be at least 11, got {p}")
    if not is_prime(p):
        raise BadModulus(f"{p} is not prime")
    if p % 8 != 3:
        raise BadModulus(f"{p} = {p % 8} (mod 8); the construction needs p = 3 (mod 8)")


def construct_zp(params: ZpParams) -> Starter:
    p, beta = params.p, params.beta % params.p
    check_zp_modulus(p)
    if beta not in (2, pow(2, -1, p)):
        raise BadParams(f"beta must be 2 or 2^-1 mod {p}, got {beta}")
    pairs = [Pair.of(x, beta * x, p) for x in qr_set(p)]
    return _verified(Starter(p, pairs), f"S_beta over Z_{p} (beta={beta})")


# -- Z_pq ------------------------------------------------------------------


def check_pq(p: int, q: int) -> None:
    """Raise :class:`BadParams` unless (p, q) satisfies the Z_pq hypotheses."""
    for x in (p, q):
        if x < 3 or not is_prime(x):
            raise BadParams(f"{x} is not an odd prime")
        if x % 8 != 3:
            raise BadParams(f"{x} = {x % 8} (mod 8); both primes must be 3 (mod 8)")
    if not p < q:
        raise BadParams(f"need p < q, got p={p}, q={q}")
    if (q - 1) % (p - 1) == 0:
        raise BadParams(f"(p-1) | (q-1): {p - 1} divides {q - 1}")


@dataclass(frozen=True)
class ZpqParams:
    p: int
    q: int
    r1: int
    r2: int
    alpha1: int
    alpha2: int
    lam: int
    variant: str = "x2"

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def beta(self) -> int:
        return _beta(self.variant, self.n)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "r1": self.r1,
            "r2": self.r2,
            "alpha1": self.alpha1,
            "alpha2": self.alpha2,
            "lambda": self.lam,
            "variant": self.variant,
            "beta": self.beta,
        }


def _coset_labels(n: int, h_elements) -> dict[int, int]:
    """Label every unit of Z_n with the index of its coset of H."""
    labels: dict[int, int] = {}
    label = 0
    for u in range(1, n):
        if u in labels or gcd(u, n) != 1:
            continue
        for h in h_elements:
            labels[u * h % n] = label
        label += 1
    return labels


def choose_lambda(p: int, q: int, alpha2: int) -> int:
    """Smallest unit lambda >= 2 such that H, 2H, lambda*H, 2*lambda*H
    partition G_pq, where H = <alpha2> mod pq."""
    n = p * q
    if gcd(alpha2, n) != 1:
        raise NoLambda(f"alpha2={alpha2} is not a unit modulo {n}")
    group_size = totient(n)
    h_order = order_mod(alpha2, n)
    if 4 * h_order != group_size:
        raise NoLambda(
            f"|<{alpha2}>_{n}| = {h_order}, but four cosets need {group_size // 4}"
        )
    h = subgroup_of(alpha2, n)
    labels = _coset_labels(n, h.elements)
    taken = {labels[1], labels[2 % n]}
    if len(taken) != 2:
        raise NoLambda(f"2 lies in <{alpha2}>_{n}")
    for lam in range(2, n):
        if lam not in labels or labels[lam] in taken:
            continue
        if labels[2 * lam % n] in taken | {labels[lam]}:
            continue
        _check_four_cosets(n, h, lam)
        return lam
    raise NoLambda(f"no lambda completes the coset partition of G_{n}")


def _check_four_cosets(n, h, lam):
    blocks = [set(coset(m, h)) for m in (1, 2, lam, 2 * lam)]
    union = set().union(*blocks)
    if sum(map(len, blocks)) != len(union) or len(union) != totient(n):
        raise VerificationFailed(f"cosets of lambda={lam} do not partition G_{n}")


def zpq_params(p: int, q: int, variant: str = "x2") -> ZpqParams:
    """Deterministic parameter choice for the Z_pq construction.

    Uses the smallest primitive roots; if the resulting <r2^2> cannot be
    completed to a four-coset partition, later primitive roots of Z_q* are
    tried in ascending order before giving up with :class:`NoLambda`.
    """
    check_pq(p, q)
    _beta(variant, p * q)
    n = p * q
    r1 = next(primitive_roots(p))
    last_error = None
    for r2 in primitive_roots(q):
        if gcd(r2, n) != 1:
            continue
        alpha2 = r2 * r2 % n
        try:
            lam = choose_lambda(p, q, alpha2)
        except NoLambda as exc:
            last_error = exc
            continue
        return ZpqParams(p, q, r1, r2, r1 * r1 % p, alpha2, lam, variant)
    raise NoLambda(f"no primitive root of Z_{q}* yields a valid lambda for Z_{n} ({last_error})")


def zpq_blocks(params: ZpqParams) -> dict[str, list[Pair]]:
    """The three pair blocks: multiples of p, multiples of q, and units."""
    p, q, n = params.p, params.q, params.n
    beta = params.beta
    h = subgroup_of(params.alpha2, n)
    return {
        "p_multiples": [Pair.of(p * x, beta * p * x, n) for x in qr_set(q)],
        "q_multiples": [Pair.of(q * x, beta * q * x, n) for x in qr_set(p)],
        "units": [Pair.of(x, beta * x, n) for x in h.elements]
        + [Pair.of(params.lam * x, beta * params.lam * x, n) for x in h.elements],
    }


def construct_zpq(params: ZpqParams) -> Starter:
    p, q = params.p, params.q
    check_pq(p, q)
    if not (is_primitive_root(params.r1, p) and is_primitive_root(params.r2, q)):
        raise BadParams("r1 and r2 must be primitive roots of Z_p* and Z_q*")
    if params.alpha2 != params.r2 * params.r2 % params.n:
        raise BadParams("alpha2 must equal r2^2 mod pq")
    n = params.n
    h = subgroup_of(params.alpha2, n)
    if params.lam in h or params.lam in coset(2, h):
        raise BadParams(f"lambda={params.lam} lies in <alpha2> or 2<alpha2>")
    _check_four_cosets(n, h, params.lam)
    pairs = [pair for block in zpq_blocks(params).values() for pair in block]
    label = f"Z_{p}*{q} starter ({params.variant})"
    return _verified(Starter(n, pairs), label)


def build(p: int, q: int | None = None, variant: str = "x2") -> Starter:
    """Convenience entry: Z_p when ``q`` is None, else Z_pq."""
    if q is None:
        return construct_zp(ZpParams.from_variant(p, variant))
    return construct_zpq(zpq_params(p, q, variant))


def primes_3_mod_8(lo: int, hi: int) -> list[int]:
    return [x for x in range(lo, hi + 1) if x % 8 == 3 and is_prime(x)]


def enumerate_admissible_pq(limit: int) -> list[tuple[int, int]]:
    """All (p, q) meeting the Z_pq hypotheses with pq <= limit, by pq."""
    primes = primes_3_mod_8(3, limit // 3)
    out = []
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            if p * q > limit:
                break
            if (q - 1) % (p - 1) != 0:
                out.append((p, q))
    out.sort(key=lambda pq: (pq[0] * pq[1], pq[0]))
    return out
