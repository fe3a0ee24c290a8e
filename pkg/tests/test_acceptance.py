"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines inline;
they are also printed (uncaptured) under plain ``pytest``.
"""
import gc
import math
import random
import time

import numpy as np
import pytest

from nakayama import cartan as cm
from nakayama.census import CensusConfig, enumerate_series, report_json, run_checks, verify_all
from nakayama.kupisch import Shape, parse, random_cyclic_series, render
from nakayama.oracle import INFINITE, global_dim
from nakayama.quiver import build, cycles, summarize
from nakayama.report import analyze

N_MAX, C_MAX = 6, 9


@pytest.fixture
def verdict(capsys):
    def emit(index, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{index}/9] {'PASS' if ok else 'FAIL'}  {title}: {detail}")
        assert ok, detail

    return emit


def census(*checks):
    return verify_all(CensusConfig(n_max=N_MAX, c_max=C_MAX, checks=checks))


def clean(report, *names):
    return report["algebras_checked"] > 0 and all(
        report["checks"][n]["failures"] == 0 and report["checks"][n]["skips"] == 0 for n in names
    )


def test_finite_global_dimension_decision(verdict):
    start = time.perf_counter()
    rep = census("finite_gldim_decision")
    elapsed = time.perf_counter() - start
    c = rep["checks"]["finite_gldim_decision"]
    ok = clean(rep, "finite_gldim_decision") and c["passes"] == rep["algebras_checked"] and elapsed < 300
    verdict(1, "finite global dimension agrees with oracle", ok,
            f"{c['passes']}/{rep['algebras_checked']} agree in {elapsed:.1f}s (limit 300s)")


def test_gorenstein_decision(verdict):
    names = ("gorenstein_decision", "gorenstein_characterizations")
    rep = census(*names)
    total = rep["algebras_checked"]
    infinite = sum(
        1 for n in range(1, N_MAX + 1) for ks in enumerate_series(n, C_MAX) if global_dim(ks) == INFINITE
    )
    g = rep["checks"]["gorenstein_decision"]
    four = rep["checks"]["gorenstein_characterizations"]
    ok = clean(rep, *names) and g["passes"] == total and four["passes"] == infinite
    verdict(2, "Gorenstein decision and four characterizations", ok,
            f"decision {g['passes']}/{total}; characterizations agree on {four['passes']}/{infinite} "
            f"infinite-gldim algebras")


def test_smith_form_shape(verdict):
    names = ("snf_shape", "black_cycle_rank", "snf_certificates")
    rep = census(*names)
    total = rep["algebras_checked"]
    r = rep["checks"]["black_cycle_rank"]
    ok = clean(rep, *names) and rep["checks"]["snf_shape"]["passes"] == total
    ok = ok and r["passes"] + r["inapplicable"] == total and r["passes"] > 0
    verdict(3, "Smith form diag(1..1, w, 0..0), rank n+1-c, rank (C|C^T) = n+1-b", ok,
            f"shape {rep['checks']['snf_shape']['passes']}/{total}; "
            f"black-cycle rank on {r['passes']} algebras with b>0")


def _fixture_facts(text):
    rep = analyze(text, oracle=True, cartan=True)
    rq = rep["resolution_quiver"]
    return rep, rq


def test_worked_fixtures(verdict):
    problems = []

    rep, rq = _fixture_facts("2,3,3")
    if not (rq["component_count"] == 2 and [c["weight"] for c in rq["cycles"]] == [1, 1]
            and rep["decisions"]["gorenstein"] is False and rep["cartan"]["snf_diagonal"] == [1, 1, 0]):
        problems.append("(2,3,3)")

    rep, rq = _fixture_facts("2,3,3,3")
    if not (rq["component_count"] == 1 and rq["cycles"][0]["vertices"] == [1, 3, 2] and rq["weight"] == 2
            and rep["decisions"] == {"finite_global_dimension": False, "gorenstein": True}
            and rep["cartan"]["snf_diagonal"] == [1, 1, 1, 2] and rep["cartan"]["determinant"] == 2):
        problems.append("(2,3,3,3)")

    rep, rq = _fixture_facts("2,3")
    if not (rep["decisions"]["finite_global_dimension"] is True and rep["oracle"]["global_dimension"] == 2
            and rep["cartan"]["determinant"] == 1):
        problems.append("(2,3)")

    rep, rq = _fixture_facts("2,2")
    if not (rep["decisions"] == {"finite_global_dimension": False, "gorenstein": True}
            and rep["selfinjective"] and rep["cartan"]["snf_diagonal"] == [1, 0]):
        problems.append("(2,2)")

    verdict(4, "worked fixtures", not problems,
            f"mismatches: {problems}" if problems else "(2,3,3), (2,3,3,3), (2,3), (2,2) as derived")


def test_selfinjective_gcd_law(verdict):
    bad = []
    cases = 0
    for n in range(2, 9):
        for m in range(2, 13):
            cases += 1
            ks = parse(",".join([str(m)] * n))
            cyc, count = cycles(build(ks), ks)
            g = math.gcd(m, n)
            if count != g or any(cy.weight != m // g for cy in cyc):
                bad.append((m, n, "cycles"))
            if not np.array_equal(cm.cartan_matrix(ks), cm.circulant_cartan(m, n)):
                bad.append((m, n, "circulant"))
    verdict(5, "selfinjective gcd law and circulant Cartan", not bad,
            f"{cases - len(bad)}/{cases} cases" + (f", failures {bad[:5]}" if bad else ""))


def test_retraction_invariants(verdict):
    rep = census("retraction_chain")
    c = rep["checks"]["retraction_chain"]
    ok = clean(rep, "retraction_chain") and c["passes"] == rep["algebras_checked"]
    verdict(6, "retraction chain invariants", ok,
            f"{c['passes']}/{rep['algebras_checked']} chains preserve c, w, det, merge the quiver, "
            f"end selfinjective, simple iff finite gldim")


LEMMA_SUITE = (
    "psi_preimage_is_second_syzygy",
    "psi_cyclic_iff_pd_not_odd",
    "psi_cyclic_iff_infinite_pd",
    "second_cosyzygy_socle",
    "black_iff_psi_gamma_fixed",
    "black_cycle_is_psi_cycle",
    "infinite_injdim_projectives",
)
PSI_FACTS = LEMMA_SUITE[:3]


def test_lemma_suite(verdict):
    rep = census(*LEMMA_SUITE)
    # findings: linear algebras on which a psi-map fact fails
    findings = []
    for n in range(1, N_MAX + 1):
        for ks in enumerate_series(n, C_MAX):
            if ks.shape is not Shape.LINEAR:
                continue
            for name, (status, detail) in run_checks(ks, PSI_FACTS).items():
                if status == "fail":
                    findings.append(f"{render(ks)} {name}: {detail}")
    ok = clean(rep, *LEMMA_SUITE)
    summary = ", ".join(f"{n}={rep['checks'][n]['passes']}" for n in LEMMA_SUITE)
    verdict(7, "lemma suite", ok,
            f"passes {summary}; linear-case findings: {len(findings)}"
            + (f" first {findings[0]}" if findings else ""))


def test_performance(verdict):
    rng = random.Random(20240601)
    ks = random_cyclic_series(10**6, 10**6, rng)
    text = render(ks)
    gc.collect()
    start = time.perf_counter()
    rep = analyze(text)
    elapsed = time.perf_counter() - start
    ok = elapsed < 2.0 and rep["n"] == 10**6 and "cartan" not in rep and "oracle" not in rep
    verdict(8, "analyze n=10^6 quiver decisions", ok,
            f"{elapsed:.2f}s (limit 2s), {rep['resolution_quiver']['component_count']} cycles, "
            f"finite gldim={rep['decisions']['finite_global_dimension']}, "
            f"gorenstein={rep['decisions']['gorenstein']}")


def test_determinism(verdict):
    cfg = CensusConfig(n_max=N_MAX, c_max=C_MAX)
    first = report_json(verify_all(cfg), timing=False)
    second = report_json(verify_all(cfg), timing=False)
    parallel = report_json(verify_all(cfg, jobs=2, chunk_size=97), timing=False)
    ok = first == second == parallel
    verdict(9, "census determinism", ok,
            f"two serial runs and one 2-process run give identical reports ({len(first)} bytes)")
