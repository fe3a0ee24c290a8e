import itertools

import pytest

from nakayama import census
from nakayama.census import CHECKS, CensusConfig, CheckFailed, enumerate_series, run_checks, verify_all
from nakayama.kupisch import KupischError, canonical_form, from_sequence, parse


def slow_enumerate(n, c_max):
    """Filter every tuple in [1, c_max]^n and collapse rotations by hand."""
    seen = set()
    for c in itertools.product(range(1, c_max + 1), repeat=n):
        try:
            ks = from_sequence(c)
        except KupischError:
            continue
        seen.add(min(c[k:] + c[:k] for k in range(n)) if 1 not in c else ks.c)
    return seen


@pytest.mark.parametrize(
    "n,c_max,want",
    [
        (1, 3, {(1,), (2,), (3,)}),
        (2, 2, {(2, 2), (2, 1)}),
        (2, 3, {(2, 2), (2, 3), (3, 3), (2, 1)}),
    ],
)
def test_enumerate_examples(n, c_max, want):
    got = [ks.c for ks in enumerate_series(n, c_max)]
    assert set(got) == want and len(got) == len(want)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("c_max", [1, 2, 4, 6])
def test_enumerate_complete(n, c_max):
    got = [ks.c for ks in enumerate_series(n, c_max)]
    assert len(got) == len(set(got))
    assert set(got) == slow_enumerate(n, c_max)


def test_enumerate_is_canonical_and_deterministic():
    for n in range(1, 6):
        first = list(enumerate_series(n, 7))
        assert first == list(enumerate_series(n, 7))
        for ks in first:
            assert canonical_form(ks) == ks


def test_census_size_matches_slow_path_n5():
    assert sum(1 for _ in enumerate_series(5, 9)) == len(slow_enumerate(5, 9))


def test_simple_algebra_passes_everything():
    rep = verify_all(CensusConfig(n_max=1, c_max=1))
    assert rep["algebras_checked"] == 1 and rep["failures"] == 0 and rep["skips"] == 0
    for name in CHECKS:
        c = rep["checks"][name]
        assert c["passes"] + c["inapplicable"] == 1 and c["first_counterexample"] is None


def test_small_config_zero_failures():
    rep = verify_all(CensusConfig(n_max=3, c_max=4))
    assert rep["failures"] == 0 and rep["skips"] == 0
    assert rep["algebras_checked"] == sum(rep["algebras_per_n"].values())


def test_n_min_restricts():
    rep = verify_all(CensusConfig(n_min=2, n_max=2, c_max=2))
    assert rep["algebras_checked"] == 2


@pytest.mark.parametrize(
    "kwargs", [dict(n_max=0), dict(c_max=0), dict(n_min=3, n_max=2), dict(checks=("nope",))]
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        CensusConfig(**kwargs)


def test_deterministic_across_runs_and_jobs():
    cfg = CensusConfig(n_max=4, c_max=6)
    a = census.report_json(verify_all(cfg), timing=False)
    b = census.report_json(verify_all(cfg), timing=False)
    c = census.report_json(verify_all(cfg, jobs=2, chunk_size=7), timing=False)
    assert a == b == c


def test_failure_records_first_counterexample(monkeypatch):
    def flaky(facts):
        if facts.ks.n >= 2 and facts.ks.c[0] == 2:
            raise CheckFailed(f"boom on {facts.ks.c}")

    monkeypatch.setitem(CHECKS, "flaky", flaky)
    rep = verify_all(CensusConfig(n_max=3, c_max=3, checks=("flaky",)), chunk_size=2)
    entry = rep["checks"]["flaky"]
    assert rep["failures"] == entry["failures"] > 0
    # enumeration order: n, then cyclic before linear, then lexicographic
    assert entry["first_counterexample"] == {"series": "2,2", "detail": "boom on (2, 2)"}


def test_crash_counts_as_failure(monkeypatch):
    monkeypatch.setitem(CHECKS, "crash", lambda facts: 1 // 0)
    out = run_checks(parse("2,2"), ["crash"])
    assert out["crash"][0] == "fail" and "ZeroDivisionError" in out["crash"][1]


def test_budget_exhaustion_is_skip_not_pass():
    out = run_checks(parse("4,4,4"), ["nonnegative_solutions"], budget=0)
    assert out["nonnegative_solutions"][0] == census.SKIP


def test_hypothesis_outside_is_inapplicable():
    # finite global dimension: the infinite-only characterizations do not apply
    out = run_checks(parse("2,3"), ["gorenstein_characterizations"])
    assert out["gorenstein_characterizations"][0] == census.INAPPLICABLE


def test_default_jobs(monkeypatch):
    monkeypatch.setenv("ANALYZER_JOBS", "3")
    assert census.default_jobs() == 3
    monkeypatch.setenv("ANALYZER_JOBS", "junk")
    assert census.default_jobs() == 1
    monkeypatch.delenv("ANALYZER_JOBS")
    assert census.default_jobs() == 1
