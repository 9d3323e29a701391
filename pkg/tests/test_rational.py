from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from curvecount.cache import CountCache, load_cache, save_cache
from curvecount.rational import DegreeSplit, kontsevich_sum, n_rational, splits
from oracles import rational_counts_classical

CLASSICAL = rational_counts_classical(30)


def test_splits_small():
    assert splits(1) == []
    assert [(s.d1, s.d2, s.weight) for s in splits(2)] == [(1, 1, 6)]
    assert [(s.d1, s.d2, s.weight) for s in splits(4)] == [(1, 3, 135), (2, 2, 1008), (3, 1, 135)]


@pytest.mark.parametrize("bad", [0, -3])
def test_splits_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        splits(bad)


@given(st.integers(2, 40).flatmap(lambda d: st.tuples(st.just(d), st.integers(1, d - 1))))
def test_split_weight_symmetric(dd):
    d, d1 = dd
    assert DegreeSplit(d1, d - d1).weight == DegreeSplit(d - d1, d1).weight


@pytest.mark.parametrize(
    "d, expected", [(1, 1), (2, 1), (3, 12), (4, 620), (5, 87304), (6, 26312976), (7, 14616808192)]
)
def test_seed_values(d, expected):
    assert n_rational(d) == expected


def test_d3_by_hand():
    # (1,2) and (2,1) each give (2 - 2/7) * 21 * 2 = 72
    assert kontsevich_sum(3, {1: 1, 2: 1}) == 144


def test_matches_division_free_recursion():
    cache = CountCache()
    assert {d: n_rational(d, cache) for d in range(1, 31)} == CLASSICAL


def test_recursion_reproduces_base_value_two():
    assert kontsevich_sum(2, {1: 1}) / 6 == 1


def test_pre_division_sum_is_divisible():
    cache = CountCache()
    n_rational(30, cache)
    for d in range(2, 31):
        q = kontsevich_sum(d, cache.genus0_values())
        assert q.denominator == 1
        assert q.numerator % (6 * (d - 1)) == 0


def test_summation_order_irrelevant():
    cache = CountCache()
    n_rational(20, cache)
    values = cache.genus0_values()
    for d in range(2, 21):
        forward = kontsevich_sum(d, values)
        assert kontsevich_sum(d, values, "reverse") == forward
        assert kontsevich_sum(d, values, "swapped") == forward


def test_cache_transparency(tmp_path):
    cold = [n_rational(d) for d in range(1, 21)]
    warm_cache = CountCache()
    n_rational(20, warm_cache)
    warm = [n_rational(d, warm_cache) for d in range(1, 21)]
    path = tmp_path / "cache.json"
    save_cache(path, warm_cache)
    restored = load_cache(path)
    assert [n_rational(d, restored) for d in range(1, 21)] == cold == warm


def test_fills_bottom_up():
    cache = CountCache()
    n_rational(9, cache)
    assert sorted(cache.genus0_values()) == list(range(1, 10))


def test_partial_cache_is_extended():
    cache = CountCache({"genus0": {1: 1, 2: 1, 3: 12}})
    assert n_rational(6, cache) == 26312976
