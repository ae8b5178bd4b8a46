import json

import pytest

from witt_forge import cache, verify
from witt_forge.partitions import CapacityError

CHEAP = ["drs", "kschur_counterexample", "non_models", "reutenauer", "theta_table"]


def dump(reports):
    return json.dumps([r.to_dict(timing=False) for r in reports], sort_keys=True)


def test_report_shape():
    (r,) = verify.run_paper_suite(["theta_table"])
    d = r.to_dict()
    assert d["schema"] == 1 and d["check"] == "theta_table" and d["status"] == "pass"
    assert "seconds" in d and "seconds" not in r.to_dict(timing=False)


def test_reports_are_reproducible():
    assert dump(verify.run_paper_suite(CHEAP)) == dump(verify.run_paper_suite(CHEAP))


def test_order_is_by_name():
    names = [r.name for r in verify.run_paper_suite(["theta_table", "drs", "non_models"])]
    assert names == ["drs", "non_models", "theta_table"]


def test_unknown_check():
    with pytest.raises(ValueError):
        verify.run_check("nope")


def test_max_degree_capacity():
    with pytest.raises(CapacityError):
        verify.run_check("drs", max_degree=10)


def test_cache_cold_and_warm_agree(tmp_path):
    path = tmp_path / "cache.json"
    cache.clear_memory()
    cold = dump(verify.run_paper_suite(["drs", "reutenauer", "dp_iterates"]))
    assert cache.save(path) > 0
    cache.clear_memory()
    assert cache.load(path) > 0
    warm = dump(verify.run_paper_suite(["drs", "reutenauer", "dp_iterates"]))
    assert cold == warm


def test_bad_cache_files_are_ignored(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text("{not json")
    assert cache.load(path) == 0
    path.write_text(json.dumps({"format": 999, "columns": {}}))
    assert cache.load(path) == 0
    assert cache.load(tmp_path / "missing.json") == 0


def test_cache_path_resolution(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "env.json"))
    assert cache.resolve_path() == tmp_path / "env.json"
    assert cache.resolve_path(str(tmp_path / "cli.json")) == tmp_path / "cli.json"
    monkeypatch.delenv(cache.ENV_VAR)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert cache.resolve_path() == tmp_path / "witt-forge" / "cache.json"


def test_kschur_tensor_values():
    data = verify.kschur_tensor()
    assert data["reconstructs"]
    assert data["coords"][((2, 1, 1), (2, 2))] == -1


@pytest.mark.slow
def test_slow_p5_case():
    r = verify.run_check("dp_iterates", slow=True)
    assert r.passed and any(row["p"] == 5 for row in r.details["results"])
