"""Exact modular arithmetic: primality, orders, primitive roots, quadratic
residues, cyclic subgroups and the CRT split of Z_pq.

Residues are plain Python ints, always held as the least non-negative
representative in ``[0, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, lcm
from typing import Iterator

from .errors import BadModulus, NotAUnit, ZeroElement

# Deterministic for every n < 2**64 (Sorenson & Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 1 << 64


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= _MR_LIMIT:
        raise ValueError("n is too large for the deterministic base set")
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES)


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((prime, exponent), ...)``.

    Trial division; intended for the moderate moduli used in constructions.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            out.append((f, e))
        f += 1 if f == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def totient(n: int) -> int:
    """Size of the unit group G_n."""
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def _exponent(n: int) -> int:
    # Carmichael function: exponent of G_n.
    lam = 1
    for p, e in factorize(n):
        if p == 2:
            pe = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            pe = (p - 1) * p ** (e - 1)
        lam = lcm(lam, pe)
    return lam


def _require_unit(x: int, n: int) -> int:
    if n < 1:
        raise BadModulus(f"modulus must be positive, got {n}")
    x %= n
    if gcd(x, n) != 1:
        raise NotAUnit(f"{x} is not a unit modulo {n}")
    return x


def order_mod(x: int, n: int) -> int:
    """Multiplicative order of ``x`` modulo ``n``.

    Starts from the group exponent and strips prime factors while the
    power stays 1, so the cost is polylogarithmic once ``n`` is factored.
    """
    x = _require_unit(x, n)
    if n == 1:
        return 1
    e = _exponent(n)
    for f, _ in factorize(e):
        while e % f == 0 and pow(x, e // f, n) == 1:
            e //= f
    return e


def is_primitive_root(g: int, p: int) -> bool:
    g %= p
    if g == 0:
        return False
    return all(pow(g, (p - 1) // f, p) != 1 for f, _ in factorize(p - 1))


def primitive_roots(p: int) -> Iterator[int]:
    """All primitive roots of an odd prime ``p``, ascending."""
    if p < 3 or not is_prime(p):
        raise BadModulus(f"{p} is not an odd prime")
    for g in range(2, p):
        if is_primitive_root(g, p):
            yield g


def find_primitive_root(p: int, coprime_to: int | None = None) -> int:
    """Smallest primitive root of the odd prime ``p``.

    With ``coprime_to`` set, the smallest one that is also a unit modulo
    that number, so it can be lifted into a larger unit group.
    """
    for g in primitive_roots(p):
        if coprime_to is None or gcd(g, coprime_to) == 1:
            return g
    raise BadModulus(f"every primitive root of {p} below {p} shares a factor with {coprime_to}")


def _require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise BadModulus(f"{p} is not an odd prime")


def qr_set(p: int) -> tuple[int, ...]:
    """QR(p), ascending."""
    _require_odd_prime(p)
    return tuple(sorted({y * y % p for y in range(1, p)}))


def is_qr(x: int, p: int) -> bool:
    """Euler's criterion."""
    _require_odd_prime(p)
    x %= p
    if x == 0:
        raise ZeroElement(f"0 has no quadratic character modulo {p}")
    return pow(x, (p - 1) // 2, p) == 1


@dataclass(frozen=True)
class CyclicSubgroup:
    """<g> in G_n, elements listed in power order g^0, g^1, ..."""

    modulus: int
    generator: int
    elements: tuple[int, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x % self.modulus in self._members


def subgroup_of(g: int, n: int) -> CyclicSubgroup:
    g = _require_unit(g, n)
    elements = [1 % n]
    x = g
    while x != elements[0]:
        elements.append(x)
        x = x * g % n
    return CyclicSubgroup(n, g, tuple(elements))


def coset(a: int, subgroup: CyclicSubgroup) -> tuple[int, ...]:
    """a*H, in the power order of H."""
    n = subgroup.modulus
    a = _require_unit(a, n)
    return tuple(a * h % n for h in subgroup.elements)


@dataclass(frozen=True)
class CrtView:
    """The isomorphism Z_pq -> Z_p x Z_q, x -> (x mod p, x mod q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p == self.q or gcd(self.p, self.q) != 1:
            raise BadModulus(f"moduli {self.p} and {self.q} must be coprime and distinct")

    @property
    def n(self) -> int:
        return self.p * self.q

    def split(self, x: int) -> tuple[int, int]:
        x %= self.n
        return x % self.p, x % self.q

    def join(self, a: int, b: int) -> int:
        p, q = self.p, self.q
        a %= p
        # x = a + p*t with p*t = b - a (mod q)
        t = (b - a) * pow(p, -1, q) % q
        return a + p * t


def crt_split(x: int, p: int, q: int) -> tuple[int, int]:
    return CrtView(p, q).split(x)


def crt_join(a: int, b: int, p: int, q: int) -> int:
    return CrtView(p, q).join(a, b)
