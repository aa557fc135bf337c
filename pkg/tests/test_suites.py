import json

import pytest

from quadinv.suites import default_params, run_suite, suite_names


def test_every_suite_is_runnable_small():
    small = {
        "cases": 6,
        "bound": 12,
        "instances": 1,
        "max_dim": 4,
        "max_steps": 2,
        "search_bound": 10,
        "ranks": [0, 1],
        "combos": [[0, 3], [2, 3]],
    }
    for name in suite_names():
        params = {k: v for k, v in small.items() if k in default_params(name)}
        report = run_suite(name, seed=1, params=params)
        assert report.passed, (name, report.failures[:2])
        assert report.cases > 0
        assert report.suite == name


def test_unknown_suite_and_params_rejected():
    with pytest.raises(ValueError):
        run_suite("no-such-suite")
    with pytest.raises(ValueError):
        run_suite("steinberg", params={"bogus": 1})


def test_reports_are_deterministic():
    a = run_suite("sw-diagonalization", seed=9, params={"cases": 10})
    b = run_suite("sw-diagonalization", seed=9, params={"cases": 10})
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)
    c = run_suite("sw-diagonalization", seed=10, params={"cases": 10})
    assert c.seed != a.seed


def test_report_shape():
    report = run_suite("distinguishing", seed=0)
    data = report.to_json()
    assert data["suite"] == "distinguishing"
    assert data["failures"] == []
    assert data["passed"] is True
    assert report.elapsed >= 0
    assert set(data) == {"suite", "cases", "failures", "seed", "passed"}


def test_manifest_covers_registry():
    names = suite_names()
    assert len(names) == len(set(names))
    for name in names:
        assert isinstance(default_params(name), dict)
