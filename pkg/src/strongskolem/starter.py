"""Starters on Z_n and the starter / strong / Skolem decision procedures.

A candidate is a set of (n-1)/2 disjoint pairs of nonzero residues. The
checks never trust the candidate: every ``False`` verdict comes with at
least one :class:`Witness` naming the offending residues.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import NotAStarter, StructuralError

WITNESS_CAP = 16


class Pair(NamedTuple):
    """Unordered pair stored as ``a < b``; build with :meth:`of` to normalize."""

    a: int
    b: int

    @classmethod
    def of(cls, x: int, y: int, n: int | None = None) -> Pair:
        if n is not None:
            x, y = x % n, y % n
        if x == y:
            raise StructuralError(f"pair has equal members {x}")
        return cls(x, y) if x < y else cls(y, x)

    def difference_class(self, n: int) -> int:
        d = self.b - self.a
        return min(d, n - d)


class Starter:
    """Order ``n`` plus ``(n-1)/2`` pairwise disjoint pairs from Z_n*.

    Equality and hashing ignore the listing order of the pairs.
    """

    __slots__ = ("n", "pairs", "_key")

    def __init__(self, n: int, pairs: Iterable):
        if n < 3 or n % 2 == 0:
            raise StructuralError(f"order must be odd and >= 3, got {n}")
        ps = tuple(p if type(p) is Pair else Pair.of(*p) for p in pairs)
        k = (n - 1) // 2
        if len(ps) != k:
            raise StructuralError(f"expected {k} pairs for n={n}, got {len(ps)}")
        seen: dict[int, Pair] = {}
        for p in ps:
            if p.a >= p.b:
                raise StructuralError(f"pair must satisfy a < b, got {tuple(p)}")
            if p.a < 1 or p.b > n - 1:
                raise StructuralError(f"pair {p.a, p.b} leaves the range 1..{n - 1}")
            for x in p:
                if x in seen:
                    raise StructuralError(
                        f"element {x} appears in both {tuple(seen[x])} and {tuple(p)}"
                    )
                seen[x] = p
        self.n = n
        self.pairs = ps
        self._key = frozenset(ps)

    @property
    def k(self) -> int:
        return (self.n - 1) // 2

    @property
    def pair_set(self) -> frozenset:
        return self._key

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, Starter):
            return NotImplemented
        return self.n == other.n and self._key == other._key

    def __hash__(self):
        return hash((self.n, self._key))

    def __repr__(self):
        body = ", ".join(f"{{{p.a},{p.b}}}" for p in self.pairs[:6])
        more = ", ..." if len(self.pairs) > 6 else ""
        return f"Starter(n={self.n}, [{body}{more}])"


@dataclass(frozen=True)
class Witness:
    """One concrete violation.

    kind is one of ``missing_element``, ``duplicate_difference``,
    ``missing_difference``, ``zero_sum``, ``repeated_sum``,
    ``difference_exceeds_k``, ``repeated_skolem_difference``. ``value`` is the offending element,
    difference class or sum; ``pairs`` are the pairs responsible.
    """

    kind: str
    value: int
    pairs: tuple[Pair, ...] = ()

    def describe(self) -> str:
        ps = " ".join(f"{{{p.a},{p.b}}}" for p in self.pairs)
        return f"{self.kind} {self.value}" + (f": {ps}" if ps else "")


class _Collector:
    def __init__(self):
        self.items: list[Witness] = []
        self.counts: dict[str, int] = defaultdict(int)

    def add(self, w: Witness):
        self.counts[w.kind] += 1
        if self.counts[w.kind] <= WITNESS_CAP:
            self.items.append(w)

    @property
    def suppressed(self) -> dict[str, int]:
        return {k: c - WITNESS_CAP for k, c in self.counts.items() if c > WITNESS_CAP}


@dataclass(frozen=True)
class Classification:
    is_starter: bool
    is_strong: bool
    is_skolem: bool
    witnesses: tuple[Witness, ...] = ()
    suppressed: dict = field(default_factory=dict)

    @property
    def is_strong_skolem(self) -> bool:
        return self.is_starter and self.is_strong and self.is_skolem

    @property
    def verdict(self) -> tuple[bool, bool, bool]:
        return self.is_starter, self.is_strong, self.is_skolem


def _starter_witnesses(s: Starter, out: _Collector) -> bool:
    n, k = s.n, s.k
    # Starter() already guarantees 2k distinct members in 1..n-1, so only the
    # difference classes can fail; scan them cheaply before building witnesses.
    hit = bytearray(k + 1)
    for a, b in s.pairs:
        d = b - a
        hit[d if 2 * d < n else n - d] += 1
    if hit.count(1) == k:
        return True
    covered = set()
    for p in s.pairs:
        covered.update(p)
    for x in range(1, n):
        if x not in covered:
            out.add(Witness("missing_element", x))
    by_class: dict[int, list[Pair]] = defaultdict(list)
    for p in s.pairs:
        by_class[p.difference_class(n)].append(p)
    for d in range(1, k + 1):
        hits = by_class.get(d, [])
        if len(hits) > 1:
            out.add(Witness("duplicate_difference", d, tuple(hits)))
        elif not hits:
            out.add(Witness("missing_difference", d))
    return not out.counts


def _strong_witnesses(s: Starter, out: _Collector) -> bool:
    n = s.n
    sums = [(a + b) % n for a, b in s.pairs]
    if 0 not in sums and len(set(sums)) == len(sums):
        return True
    before = sum(out.counts.values())
    by_sum: dict[int, list[Pair]] = defaultdict(list)
    for p in s.pairs:
        by_sum[(p.a + p.b) % n].append(p)
    for total, hits in sorted(by_sum.items()):
        if total == 0:
            for p in hits:
                out.add(Witness("zero_sum", 0, (p,)))
        elif len(hits) > 1:
            out.add(Witness("repeated_sum", total, tuple(hits)))
    return sum(out.counts.values()) == before


def _skolem_witnesses(s: Starter, out: _Collector) -> bool:
    k = s.k
    before = sum(out.counts.values())
    for p in s.pairs:
        if p.b - p.a > k:
            out.add(Witness("difference_exceeds_k", p.b - p.a, (p,)))
    # With every b-a <= k, the starter condition already forces {b-a} = {1..k};
    # the multiset test is kept so this predicate stands on its own.
    diffs = sorted(p.b - p.a for p in s.pairs)
    if diffs != list(range(1, k + 1)) and sum(out.counts.values()) == before:
        by_diff: dict[int, list[Pair]] = defaultdict(list)
        for p in s.pairs:
            by_diff[p.b - p.a].append(p)
        for d, hits in sorted(by_diff.items()):
            if len(hits) > 1:
                out.add(Witness("repeated_skolem_difference", d, tuple(hits)))
    return sum(out.counts.values()) == before


def check_starter(s: Starter) -> tuple[bool, list[Witness]]:
    out = _Collector()
    ok = _starter_witnesses(s, out)
    return ok, out.items


def check_strong(s: Starter) -> tuple[bool, list[Witness]]:
    out = _Collector()
    ok = _starter_witnesses(s, out)
    ok = _strong_witnesses(s, out) and ok
    return ok, out.items


def check_skolem(s: Starter) -> tuple[bool, list[Witness]]:
    out = _Collector()
    ok = _starter_witnesses(s, out)
    ok = _skolem_witnesses(s, out) and ok
    return ok, out.items


def classify(s: Starter) -> Classification:
    out = _Collector()
    starter = _starter_witnesses(s, out)
    strong = _strong_witnesses(s, out) and starter
    skolem = _skolem_witnesses(s, out) and starter
    return Classification(starter, strong, skolem, tuple(out.items), out.suppressed)


def _sort_key(n: int):
    return lambda p: (p.difference_class(n), p.a, p.b)


def canonical_form(s: Starter) -> Starter:
    """Same pairs, listed by ascending difference class."""
    ok, witnesses = check_starter(s)
    if not ok:
        raise NotAStarter(f"not a starter for Z_{s.n}", witnesses)
    return Starter(s.n, sorted(s.pairs, key=_sort_key(s.n)))


# -- serialization ---------------------------------------------------------


def _ordered(s: Starter) -> list[Pair]:
    # Canonical order for starters; a deterministic order for anything else.
    return sorted(s.pairs, key=_sort_key(s.n))


def starter_to_dict(s: Starter) -> dict:
    return {"n": s.n, "pairs": [[p.a, p.b] for p in _ordered(s)]}


def starter_from_dict(data: dict) -> Starter:
    try:
        n = data["n"]
        pairs = data["pairs"]
    except (KeyError, TypeError) as exc:
        raise StructuralError(f"starter record needs 'n' and 'pairs': {exc}") from None
    if not isinstance(n, int) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p) for p in pairs
    ):
        raise StructuralError("'n' must be an integer and 'pairs' a list of [a, b] integer lists")
    return Starter(n, [Pair.of(a, b) for a, b in pairs])


def to_json(s: Starter) -> str:
    return json.dumps(starter_to_dict(s), separators=(", ", ": ")) + "\n"


def to_plain(s: Starter) -> str:
    lines = [f"n={s.n}"] + [f"{p.a} {p.b}" for p in _ordered(s)]
    return "\n".join(lines) + "\n"


def from_plain(text: str) -> Starter:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise StructuralError(f"line {lineno}: expected header 'n=N', got {line!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise StructuralError(f"line {lineno}: bad order {line[2:]!r}") from None
            continue
        fields = line.split()
        if len(fields) != 2:
            raise StructuralError(f"line {lineno}: expected 'a b', got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise StructuralError(f"line {lineno}: non-integer pair {line!r}") from None
        pairs.append(Pair.of(a, b))
    if n is None:
        raise StructuralError("missing 'n=N' header")
    return Starter(n, pairs)


def from_json(text: str) -> Starter:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructuralError(f"invalid JSON: {exc}") from None
    return starter_from_dict(data)


def loads(text: str) -> Starter:
    """Parse either format, sniffing on the first non-blank character."""
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_plain(text)


def dumps(s: Starter, fmt: str = "plain") -> str:
    if fmt == "plain":
        return to_plain(s)
    if fmt == "structured":
        return to_json(s)
    raise ValueError(f"unknown format {fmt!r}")
