from math import gcd, lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_order, brute_powers, brute_primitive_root, brute_qr, trial_is_prime
from strongskolem.construct import enumerate_admissible_pq
from strongskolem.errors import BadModulus, NotAUnit, ZeroElement
from strongskolem.modular import (
    CrtView,
    coset,
    crt_join,
    crt_split,
    find_primitive_root,
    is_prime,
    is_qr,
    order_mod,
    qr_set,
    subgroup_of,
    totient,
)

SMALL_ODD_PRIMES = [p for p in range(3, 400) if trial_is_prime(p)]


@pytest.mark.parametrize("n, expected", [(2, True), (209, False), (19, True), (0, False), (1, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(5000) if is_prime(n)] == [n for n in range(5000) if trial_is_prime(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**63 - 25, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to the first nine primes
        (18446744073709551557, True),  # largest prime below 2**64
        ((2**31 - 1) * (2**31 + 11), False),
    ],
)
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


def test_is_prime_rejects_out_of_range():
    with pytest.raises(ValueError):
        is_prime(2**64 + 13)


@pytest.mark.parametrize("x, n, expected", [(2, 11, 10), (1, 17, 1), (1, 209, 1), (4, 209, 45)])
def test_order_mod_examples(x, n, expected):
    assert order_mod(x, n) == expected


def test_order_mod_not_a_unit():
    with pytest.raises(NotAUnit):
        order_mod(11, 209)


@given(st.integers(2, 3000), st.integers(1, 10**6))
@settings(max_examples=300)
def test_order_mod_matches_repeated_multiplication(n, x):
    x %= n
    if gcd(x, n) != 1:
        return
    e = order_mod(x, n)
    assert e == brute_order(x, n)
    assert totient(n) % e == 0


@pytest.mark.parametrize("p, expected", [(11, 2), (19, 2), (3, 2)])
def test_find_primitive_root_examples(p, expected):
    assert find_primitive_root(p) == expected


def test_find_primitive_root_is_smallest():
    for p in SMALL_ODD_PRIMES:
        assert find_primitive_root(p) == brute_primitive_root(p)


def test_find_primitive_root_needs_prime():
    with pytest.raises(BadModulus):
        find_primitive_root(21)


@pytest.mark.parametrize(
    "p, expected",
    [(11, (1, 3, 4, 5, 9)), (3, (1,)), (19, (1, 4, 5, 6, 7, 9, 11, 16, 17))],
)
def test_qr_set_examples(p, expected):
    assert qr_set(p) == expected


@pytest.mark.parametrize("p", SMALL_ODD_PRIMES)
def test_qr_set_size_and_euler(p):
    qr = qr_set(p)
    assert list(qr) == brute_qr(p)
    assert len(qr) == (p - 1) // 2
    members = set(qr)
    assert all(is_qr(x, p) == (x in members) for x in range(1, p))


def test_is_qr_examples():
    assert is_qr(-1 % 11, 11) is False
    assert is_qr(2, 11) is False
    assert is_qr(1, 19) is True
    with pytest.raises(ZeroElement):
        is_qr(22, 11)


@pytest.mark.parametrize("p", SMALL_ODD_PRIMES[:25])
def test_qr_closure_table(p):
    for x in range(1, p):
        for y in range(1, p):
            same = is_qr(x, p) == is_qr(y, p)
            assert is_qr(x * y, p) == same


@pytest.mark.parametrize("p", SMALL_ODD_PRIMES)
def test_sign_of_minus_one(p):
    assert is_qr(p - 1, p) == (p % 4 == 1)


@pytest.mark.parametrize("p", [p for p in SMALL_ODD_PRIMES if p % 4 == 3])
def test_x_and_minus_x_have_opposite_character(p):
    assert all(is_qr(x, p) != is_qr(p - x, p) for x in range(1, p))


def test_subgroup_examples():
    assert subgroup_of(4, 11).elements == (1, 4, 5, 9, 3)
    assert subgroup_of(1, 209).elements == (1,)
    h = subgroup_of(4, 209)
    assert len(h) == 45
    assert h.elements[:5] == (1, 4, 16, 64, 47)
    assert list(h.elements) == brute_powers(4, 209)
    with pytest.raises(NotAUnit):
        subgroup_of(19, 209)


@given(st.integers(3, 500), st.integers(1, 10**4))
def test_subgroup_is_closed(n, g):
    g %= n
    if gcd(g, n) != 1:
        return
    h = subgroup_of(g, n)
    assert len(set(h.elements)) == len(h) == order_mod(g, n)
    assert all(a * b % n in h for a in h for b in h.elements[:5])


def test_coset_examples():
    h = subgroup_of(4, 11)
    assert set(coset(1, h)) == set(h.elements)
    assert coset(2, h) == (2, 8, 10, 7, 6)
    big = coset(3, subgroup_of(4, 209))
    assert {3, 12, 48} <= set(big) and len(big) == 45
    with pytest.raises(NotAUnit):
        coset(11, subgroup_of(4, 209))


def test_crt_examples():
    assert crt_split(1, 11, 19) == (1, 1)
    assert crt_split(208, 11, 19) == (10, 18)
    for b in range(19):
        assert crt_join(0, b, 11, 19) % 11 == 0
    assert crt_join(13, 20, 11, 19) == crt_join(2, 1, 11, 19) == 134


def test_crt_rejects_equal_moduli():
    with pytest.raises(BadModulus):
        CrtView(11, 11)


@pytest.mark.parametrize("p, q", [(11, 19), (3, 5), (43, 67), (7, 11)])
def test_crt_is_a_bijection_and_multiplicative(p, q):
    view = CrtView(p, q)
    assert [view.join(*view.split(x)) for x in range(p * q)] == list(range(p * q))
    assert all(view.split(view.join(a, b)) == (a, b) for a in range(p) for b in range(q))
    us = [x for x in range(1, p * q) if gcd(x, p * q) == 1]
    for a in us[:40]:
        for b in us[-40:]:
            (a1, a2), (b1, b2) = view.split(a), view.split(b)
            assert view.split(a * b) == (a1 * b1 % p, a2 * b2 % q)
            assert order_mod(a, p * q) == lcm(order_mod(a, p), order_mod(a, q))


def test_order_claim_is_not_automatic():
    # lcm(p-1, q-1) equals (p-1)(q-1)/2 only when gcd(p-1, q-1) = 2.
    p, q = 43, 67
    assert (q - 1) % (p - 1) != 0
    r = find_primitive_root(q)
    assert order_mod(r, p * q) == lcm(p - 1, q - 1) == 462
    assert (p - 1) * (q - 1) // 2 == 1386


@pytest.mark.parametrize("p, q", enumerate_admissible_pq(3000))
def test_minus_one_and_two_outside_square_subgroups(p, q):
    n = p * q
    for r in (find_primitive_root(p, n), find_primitive_root(q, n)):
        h = subgroup_of(r * r % n, n)
        assert n - 1 not in h
        assert 2 not in h


def test_primitive_root_coprime_to():
    # 11 is the smallest primitive root of 643, useless as a unit mod 11*643
    assert find_primitive_root(643) == 11
    assert find_primitive_root(643, 11 * 643) == 13
    assert is_prime(643) and find_primitive_root(643, 11 * 643) == next(
        g for g in range(2, 643) if brute_order(g, 643) == 642 and g % 11)
