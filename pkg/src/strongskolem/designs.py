"""One-factorization of K_{n+1} from a starter of Z_n by translation.

Vertices are the residues 0..n-1 plus the point at infinity, encoded as
the integer ``n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import NotAStarter, ValidationFailed
from .starter import Starter, check_starter

Edge = tuple[int, int]


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[Edge, ...], ...]

    @property
    def infinity(self) -> int:
        return self.n

    def edges(self):
        for f in self.factors:
            yield from f


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def one_factorization(s: Starter) -> Factorization:
    ok, witnesses = check_starter(s)
    if not ok:
        raise NotAStarter(f"cannot factorize: not a starter for Z_{s.n}", witnesses)
    n = s.n
    factors = []
    for g in range(n):
        f = [_edge(g, n)]
        f.extend(sorted(_edge((a + g) % n, (b + g) % n) for a, b in s.pairs))
        factors.append(tuple(f))
    fact = Factorization(n, tuple(factors))
    validate(fact)
    return fact


def validate(fact: Factorization) -> None:
    """Raise :class:`ValidationFailed` unless every factor is a perfect
    matching of K_{n+1} and every edge appears in exactly one factor."""
    n = fact.n
    vertices = set(range(n + 1))
    if len(fact.factors) != n:
        raise ValidationFailed(f"expected {n} factors, got {len(fact.factors)}")
    seen: dict[Edge, int] = {}
    for idx, f in enumerate(fact.factors):
        covered = [x for e in f for x in e]
        if sorted(covered) != sorted(vertices):
            raise ValidationFailed(f"factor {idx} is not a perfect matching")
        for e in f:
            e = _edge(*e)
            if e in seen:
                raise ValidationFailed(f"edge {e} in factors {seen[e]} and {idx}")
            seen[e] = idx
    expected = set(combinations(range(n + 1), 2))
    if set(seen) != expected:
        missing = sorted(expected - set(seen))[:4]
        raise ValidationFailed(f"edges missing from every factor, e.g. {missing}")


def to_json(fact: Factorization) -> str:
    data = {"n": fact.n, "factors": [[list(e) for e in f] for f in fact.factors]}
    return json.dumps(data, separators=(", ", ": ")) + "\n"


def from_json(text: str) -> Factorization:
    data = json.loads(text)
    try:
        factors = tuple(tuple(_edge(u, v) for u, v in f) for f in data["factors"])
        return Factorization(int(data["n"]), factors)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationFailed(f"malformed factorization record: {exc}") from None
