import pytest

from oracles import is_skolem, is_strong
from strongskolem.construct import ZpParams, construct_zp
from strongskolem.errors import BudgetExhausted
from strongskolem.search import SearchConfig, cross_validate, search_skolem
from strongskolem.starter import canonical_form, classify

# Skolem sequences of order k = (n-1)/2: 1, 0, 0, 6, 10, 0, 0, 504, 2656
SKOLEM_COUNTS = {3: 1, 5: 0, 7: 0, 9: 6, 11: 10, 13: 0, 15: 0, 17: 504, 19: 2656}


@pytest.mark.parametrize("n, count", sorted(SKOLEM_COUNTS.items()))
def test_counts(n, count):
    assert search_skolem(SearchConfig(n, "count")).count == count


def test_examples():
    assert search_skolem(SearchConfig(7)).count == 0
    assert search_skolem(SearchConfig(11, require_strong=True)).count >= 1
    assert search_skolem(SearchConfig(3, require_strong=True)).count == 0


@pytest.mark.parametrize("n", [n for n in range(3, 16, 2) if n % 8 not in (1, 3)])
def test_nothing_outside_admissible_orders(n):
    result = search_skolem(SearchConfig(n, "count"))
    assert result.exhaustive and result.count == 0


@pytest.mark.parametrize("n", [9, 11, 17])
def test_results_pass_classify_and_nest(n):
    plain = search_skolem(SearchConfig(n, "all"))
    strong = search_skolem(SearchConfig(n, "all", require_strong=True))
    for s in plain.starters:
        c = classify(s)
        assert c.is_starter and c.is_skolem
        assert canonical_form(s).pairs == s.pairs
    for s in strong.starters:
        assert classify(s).is_strong_skolem
    assert {s.pair_set for s in strong.starters} <= {s.pair_set for s in plain.starters}
    strong_in_plain = [s for s in plain.starters if classify(s).is_strong]
    assert len(strong_in_plain) == strong.count


def test_results_match_literal_definitions():
    for s in search_skolem(SearchConfig(11, "all")).starters:
        pairs = [tuple(p) for p in s.pairs]
        assert is_skolem(11, pairs)
    for s in search_skolem(SearchConfig(11, "all", require_strong=True)).starters:
        assert is_strong(11, [tuple(p) for p in s.pairs])


def test_strong_at_nine_is_recorded_not_assumed():
    result = search_skolem(SearchConfig(9, "count", require_strong=True))
    assert result.exhaustive
    assert result.count == 0


@pytest.mark.parametrize("n", [11, 17, 19])
@pytest.mark.parametrize("strong", [False, True])
def test_count_independent_of_branch_order(n, strong):
    down = search_skolem(SearchConfig(n, "all", strong))
    up = search_skolem(SearchConfig(n, "all", strong, descending=False))
    assert down.count == up.count
    assert down.starters == up.starters


def test_first_mode_stops_early():
    result = search_skolem(SearchConfig(19, "first", require_strong=True))
    assert result.count == 1 and len(result.starters) == 1
    assert result.nodes < search_skolem(SearchConfig(19, "count", True)).nodes


def test_budget_exhaustion_carries_partial_result():
    with pytest.raises(BudgetExhausted) as info:
        search_skolem(SearchConfig(17, "count", budget=500))
    partial = info.value.partial
    assert not partial.exhaustive
    assert partial.count <= SKOLEM_COUNTS[17]


@pytest.mark.parametrize("kwargs", [dict(n=8), dict(n=1), dict(n=11, mode="some"), dict(n=11, budget=0)])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs)


def test_oracle_contains_constructions():
    found = {s.pair_set for s in search_skolem(SearchConfig(11, "all", True)).starters}
    for variant in ("x2", "half"):
        assert construct_zp(ZpParams.from_variant(11, variant)).pair_set in found


def test_cross_validate():
    assert cross_validate(10, 0) == []
    report = cross_validate(19, 1000)
    labels = {r.label: r for r in report}
    assert labels["zp 11 x2"].oracle_checked and labels["zp 11 x2"].outcome == "ok"
    assert labels["zp 19 half"].oracle_checked and labels["zp 19 half"].outcome == "ok"
    assert labels["zpq 11 19 x2"].outcome == "ok"
    assert not labels["zpq 11 19 x2"].oracle_checked
    assert all(r.outcome in ("ok", "no_lambda") for r in report)
