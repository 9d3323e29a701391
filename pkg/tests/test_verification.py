import dataclasses
import json

import pytest
from hypothesis import given, settings, strategies as st

from curvecount.cache import CountCache
from curvecount.genus_two import THEOREM
from curvecount.verification import check_decomposition, check_table, run_suite


def test_table_fresh_cache():
    results = check_table(CountCache())
    assert len(results) == 14
    assert all(r.passed for r in results)


def test_table_empty_cache_same_as_default():
    assert check_table(CountCache()) == check_table()


def test_table_fault_injection():
    cache = CountCache({"genus0": {1: 1, 2: 1, 3: 12, 4: 621}})
    failures = [r for r in check_table(cache) if not r.passed]
    assert failures
    hit = [r for r in failures if r.name == "table:n_rational" and r.degree == 4]
    assert hit and (hit[0].lhs, hit[0].rhs) == ("621", "620")
    assert all(r.degree >= 4 for r in failures)


def test_decomposition_witness():
    results = check_decomposition(4)
    assert [r.degree for r in results] == [2, 3, 4]
    assert all(r.passed for r in results)
    assert (results[-1].lhs, results[-1].rhs) == ("14400", "14400")
    only = check_decomposition(2)
    assert len(only) == 1 and only[0].passed and only[0].lhs == only[0].rhs == "0"


def test_decomposition_to_15():
    assert all(r.passed for r in check_decomposition(15))


def test_decomposition_needs_two():
    with pytest.raises(ValueError):
        check_decomposition(1)


def test_suite_7():
    report = run_suite(7)
    assert report.passed
    assert len(report.checks) >= 40
    names = {c.name.split(":")[0] for c in report.checks}
    assert names == {"table", "decomposition", "integrality", "divisibility", "symmetry"}


def test_suite_15():
    assert run_suite(15).passed


def test_suite_rejects_small_range():
    with pytest.raises(ValueError):
        run_suite(6)


def test_report_is_deterministic_and_ordered():
    a, b = run_suite(8).to_json(), run_suite(8).to_json()
    assert a == b
    checks = json.loads(a)["checks"]
    keys = [(c["name"], c["degree"]) for c in checks]
    assert keys == sorted(keys)


def test_report_json_shape():
    obj = json.loads(run_suite(7).to_json())
    assert set(obj) == {"max_degree", "passed", "checks"}
    for check in obj["checks"]:
        assert {"name", "degree", "passed"} <= set(check) <= {"name", "degree", "passed", "lhs", "rhs"}
        for side in ("lhs", "rhs"):
            if side in check:
                assert isinstance(check[side], str)


MUTABLE = ["leading", "square_shift", "constant", "tacnode_scale", "node_weight", "node_shift", "degree_scale"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(MUTABLE), st.integers(-5, 5).filter(bool))
def test_any_coefficient_mutation_is_caught(field, delta):
    mutated = dataclasses.replace(THEOREM, **{field: getattr(THEOREM, field) + delta})
    report = run_suite(7, coefficients=mutated)
    assert not report.passed
    assert report.failures


def test_mutation_failure_carries_witness():
    report = run_suite(7, coefficients=dataclasses.replace(THEOREM, constant=27))
    hit = [c for c in report.failures if c.name == "table:n_genus_two" and c.degree == 4]
    assert hit and hit[0].rhs == "14400" and hit[0].lhs != "14400"
