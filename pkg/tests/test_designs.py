from collections import Counter
from itertools import combinations

import pytest

from oracles import one_factorization_edges
from strongskolem.construct import build
from strongskolem.designs import Factorization, from_json, one_factorization, to_json, validate
from strongskolem.errors import NotAStarter, ValidationFailed
from strongskolem.search import SearchConfig, search_skolem
from strongskolem.starter import Starter

Z11 = Starter(11, [(1, 2), (3, 6), (4, 8), (5, 10), (7, 9)])


def test_z11_example():
    f = one_factorization(Z11)
    assert len(f.factors) == 11
    assert all(len(factor) == 6 for factor in f.factors)
    assert sum(1 for _ in f.edges()) == 66
    assert (0, 11) in f.factors[0]
    infinity_edges = [i for i, factor in enumerate(f.factors) for e in factor if 11 in e]
    assert infinity_edges == list(range(11))


def test_matches_translate_oracle():
    f = one_factorization(Z11)
    expected = Counter(one_factorization_edges(11, [tuple(p) for p in Z11.pairs]))
    assert Counter(frozenset(e) for e in f.edges()) == expected
    assert set(expected) == {frozenset(e) for e in combinations(range(12), 2)}


def test_non_strong_starter_still_factorizes():
    s = Starter(7, [(2, 3), (4, 6), (1, 5)])  # strong but not Skolem
    z5 = Starter(5, [(2, 3), (1, 4)])  # not strong
    for st in (s, z5):
        f = one_factorization(st)
        assert sum(1 for _ in f.edges()) == st.n * (st.n + 1) // 2


def test_skolem_starters_all_factorize():
    for s in search_skolem(SearchConfig(17, "all")).starters[:50]:
        one_factorization(s)


def test_rejects_non_starter():
    with pytest.raises(NotAStarter):
        one_factorization(Starter(5, [(1, 2), (3, 4)]))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda fs: fs[:-1],
        lambda fs: [fs[1]] + fs[1:],
        lambda fs: [fs[0][:-1] + ((fs[0][-1][0], fs[0][-1][0]),)] + fs[1:],
    ],
)
def test_validate_detects_damage(mutate):
    f = one_factorization(Z11)
    broken = Factorization(11, tuple(mutate(list(f.factors))))
    with pytest.raises(ValidationFailed):
        validate(broken)


def test_round_trip():
    f = one_factorization(build(19))
    text = to_json(f)
    back = from_json(text)
    validate(back)
    assert back == f and to_json(back) == text


def test_disjoint_factors_for_larger_order():
    f = one_factorization(build(11, 19, "half"))
    seen = set()
    for factor in f.factors:
        edges = set(factor)
        assert not edges & seen
        seen |= edges
    assert len(seen) == 209 * 210 // 2
