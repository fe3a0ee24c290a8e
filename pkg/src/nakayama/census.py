"""Exhaustive verification over all small connected Nakayama algebras.

Every algebra with ``n <= n_max`` simples and composition lengths at most
``c_max`` is enumerated once up to rotation, and each registered check is run
on it.  A check compares a fast, quiver- or matrix-based statement against
the brute-force module calculus of :mod:`nakayama.oracle` (or against another
independent computation).

Check functions take a :class:`Facts` and either return ``None`` (pass),
return :data:`SKIP` (budget exceeded), return :data:`INAPPLICABLE` (the
statement's hypothesis does not hold for this algebra), or raise
:class:`CheckFailed`.
"""
from __future__ import annotations

import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from . import cartan as cm
from . import oracle as orc
from .kupisch import (
    KupischSeries,
    Shape,
    canonical_form,
    is_selfinjective,
    normalize,
    rotate,
)
from .quiver import (
    QuiverSummary,
    cycle_weight,
    find_cycles,
    is_black_simple,
    is_psi_black_simple,
    psi_quiver,
    summarize,
)
from .retraction import left_retract, merge_map, retraction_chain

__all__ = [
    "CensusConfig",
    "CheckFailed",
    "CHECKS",
    "Facts",
    "enumerate_series",
    "run_checks",
    "verify_all",
    "report_json",
]

SKIP = "skip"
INAPPLICABLE = "inapplicable"


class CheckFailed(AssertionError):
    pass


def expect(condition: bool, detail: str) -> None:
    if not condition:
        raise CheckFailed(detail)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_series(n: int, c_max: int) -> Iterator[KupischSeries]:
    """Every connected Nakayama algebra with ``n`` simples and ``c_i <= c_max``.

    Cyclic series come first, one canonical (least) rotation each, in
    lexicographic order; then the linear series (simple projective last).
    """
    if n < 1 or c_max < 1:
        raise ValueError("n and c_max must be positive")
    if n == 1:
        yield KupischSeries((1,), Shape.LINEAR)
        for m in range(2, c_max + 1):
            yield KupischSeries((m,), Shape.CYCLIC)
        return
    for c in _admissible(n, c_max, low=2, wrap=True):
        if min(rotate(c, k) for k in range(n)) == c:
            yield KupischSeries(c, Shape.CYCLIC)
    for head in _admissible(n - 1, c_max, low=2, wrap=False):
        c = head + (1,)
        if head[-1] <= 2:
            yield KupischSeries(c, Shape.LINEAR)


def _admissible(n: int, c_max: int, low: int, wrap: bool) -> Iterator[tuple[int, ...]]:
    # lexicographic DFS with the local condition c_{i+1} >= c_i - 1
    c = [0] * n

    def go(i: int):
        lo = low if i == 0 else max(low, c[i - 1] - 1)
        for v in range(lo, c_max + 1):
            c[i] = v
            if i == n - 1:
                if not wrap or c[0] >= v - 1:
                    yield tuple(c)
            else:
                yield from go(i + 1)

    if n == 0:
        return
    yield from go(0)


# ---------------------------------------------------------------------------
# per-algebra facts


class Facts:
    """Lazily computed data about one algebra, shared by all checks."""

    def __init__(self, ks: KupischSeries, budget: int = 200_000):
        self.ks = ks
        self.n = ks.n
        self.budget = budget

    @cached_property
    def summary(self) -> QuiverSummary:
        return summarize(self.ks)

    @cached_property
    def cycles(self):
        return self.summary.cycles

    @cached_property
    def d(self) -> tuple[int, ...]:
        return orc.injective_lengths(self.ks)

    @cached_property
    def psi(self):
        return psi_quiver(self.ks)

    @cached_property
    def psi_cycles(self) -> list[tuple[int, ...]]:
        return find_cycles(self.psi.succ)

    @cached_property
    def gamma_cyclic(self) -> frozenset[int]:
        return frozenset(v for cy in self.cycles for v in cy.vertices)

    @cached_property
    def psi_cyclic(self) -> frozenset[int]:
        return frozenset(v for cy in self.psi_cycles for v in cy)

    @cached_property
    def pd_simple(self) -> tuple:
        return orc.simple_proj_dims(self.ks)

    @cached_property
    def id_simple(self) -> tuple:
        return orc.simple_inj_dims(self.ks)

    @cached_property
    def gldim_infinite(self) -> bool:
        return orc.global_dim(self.ks) == orc.INFINITE

    @cached_property
    def gorenstein_oracle(self) -> bool:
        return orc.is_gorenstein_oracle(self.ks)

    @cached_property
    def cartan(self) -> np.ndarray:
        return cm.cartan_matrix(self.ks)

    @cached_property
    def snf(self) -> cm.SmithForm:
        return cm.smith_normal_form(self.cartan, certificates=True)

    @cached_property
    def det(self) -> int:
        return cm.determinant(self.cartan)

    def psi_of(self, j: int) -> int:
        return self.psi.succ[j - 1]

    def gamma_of(self, i: int) -> int:
        return self.summary.quiver.succ[i - 1]


# ---------------------------------------------------------------------------
# checks

CHECKS: dict[str, Callable[[Facts], Optional[str]]] = {}


def check(name: str):
    def register(fn):
        CHECKS[name] = fn
        return fn

    return register


def _fmt(dim) -> str:
    return "inf" if dim == orc.INFINITE else str(dim)


@check("finite_gldim_decision")
def _finite_gldim(f: Facts):
    fast = f.summary.finite_global_dimension
    expect(fast == (not f.gldim_infinite),
           f"quiver says finite={fast}, oracle pd(S_i)={[_fmt(x) for x in f.pd_simple]}")


@check("gorenstein_decision")
def _gorenstein(f: Facts):
    expect(f.summary.gorenstein == f.gorenstein_oracle,
           f"quiver says gorenstein={f.summary.gorenstein}, oracle {f.gorenstein_oracle}")


@check("gorenstein_characterizations")
def _gorenstein_four(f: Facts):
    if not f.gldim_infinite:
        return INAPPLICABLE
    all_black = all(cy.black for cy in f.cycles)
    gamma_black = all(f.pd_simple[v - 1] != 1 for v in f.gamma_cyclic)
    psi_black = all(f.id_simple[v - 1] != 1 for v in f.psi_cyclic)
    same_sets = f.gamma_cyclic == f.psi_cyclic
    values = (f.gorenstein_oracle, all_black, gamma_black, psi_black, same_sets)
    expect(len(set(values)) == 1,
           f"oracle/black cycles/gamma-black/psi-black/equal sets = {values}")


@check("black_cycle_is_psi_cycle")
def _black_psi(f: Facts):
    psi_sets = {frozenset(cy) for cy in f.psi_cycles}
    for cy in f.cycles:
        vs = frozenset(cy.vertices)
        values = (vs in psi_sets, vs <= f.psi_cyclic, cy.black)
        expect(len(set(values)) == 1, f"cycle {cy.vertices}: psi-cycle/psi-cyclic/black = {values}")


@check("psi_preimage_is_second_syzygy")
def _psi_syzygy(f: Facts):
    ks = f.ks
    for s in range(1, f.n + 1):
        if ks.c[s - 1] == 1:
            continue
        omega2 = orc.syzygy_power(ks, orc.simple(s), 2)
        factors = set(omega2.factors(f.n)) if omega2 else set()
        pre = {t for t in range(1, f.n + 1) if f.psi_of(t) == s}
        expect(pre == factors, f"S_{s}: psi-preimage {sorted(pre)} vs factors of second syzygy {sorted(factors)}")


@check("psi_odd_pd_descent")
def _psi_parity_descent(f: Facts):
    for s in range(1, f.n + 1):
        p_psi = f.pd_simple[f.psi_of(s) - 1]
        p = f.pd_simple[s - 1]
        if p_psi != orc.INFINITE and p_psi % 2 == 1:
            expect(p != orc.INFINITE and p % 2 == 1 and p <= p_psi - 2,
                   f"S_{s}: pd psi(S) = {_fmt(p_psi)} odd but pd S = {_fmt(p)}")


@check("psi_cyclic_iff_pd_not_odd")
def _psi_parity(f: Facts):
    for s in range(1, f.n + 1):
        p = f.pd_simple[s - 1]
        not_odd = p == orc.INFINITE or p % 2 == 0
        expect((s in f.psi_cyclic) == not_odd,
               f"S_{s}: psi-cyclic={s in f.psi_cyclic}, pd={_fmt(p)}")


@check("psi_cyclic_iff_infinite_pd")
def _psi_infinite(f: Facts):
    infinite = frozenset(s for s in range(1, f.n + 1) if f.pd_simple[s - 1] == orc.INFINITE)
    expect((f.psi_cyclic == infinite) == f.gldim_infinite,
           f"psi-cyclic {sorted(f.psi_cyclic)}, infinite pd {sorted(infinite)}, "
           f"gldim infinite={f.gldim_infinite}")


@check("second_cosyzygy_socle")
def _cosyzygy_socle(f: Facts):
    ks = f.ks
    for m in orc.all_modules(ks):
        if orc.inj_dim(ks, m) <= 1:
            continue
        m2 = orc.cosyzygy_power(ks, m, 2)
        expect(m2 is not None and m2.socle(f.n) == f.psi_of(m.socle(f.n)),
               f"module {tuple(m)}: second cosyzygy {m2}")


@check("black_iff_psi_gamma_fixed")
def _black_fixed(f: Facts):
    for i in range(1, f.n + 1):
        expect((f.pd_simple[i - 1] != 1) == (f.psi_of(f.gamma_of(i)) == i),
               f"S_{i}: pd={_fmt(f.pd_simple[i - 1])}, psi(gamma(i))={f.psi_of(f.gamma_of(i))}")


@check("infinite_injdim_projectives")
def _proj_inj(f: Facts):
    if not f.gldim_infinite:
        return INAPPLICABLE
    ks, n = f.ks, f.n
    for i in range(1, n + 1):
        p = orc.projective(ks, i)
        soc = p.socle(n)
        infinite = orc.inj_dim(ks, p) == orc.INFINITE
        witness = any(
            orc.projective(ks, s).socle(n) == soc and ks.c[i - 1] < ks.c[s - 1]
            for s in f.gamma_cyclic
        )
        expect(infinite == witness, f"P_{i}: id infinite={infinite}, gamma-cyclic witness={witness}")
    for j in range(1, n + 1):
        inj = orc.injective(ks, j)
        infinite = orc.proj_dim(ks, inj) == orc.INFINITE
        witness = any(
            orc.injective(ks, s).top == inj.top and f.d[j - 1] < f.d[s - 1]
            for s in f.psi_cyclic
        )
        expect(infinite == witness, f"I_{j}: pd infinite={infinite}, psi-cyclic witness={witness}")


@check("gamma_matches_closed_form")
def _gamma(f: Facts):
    for i in range(1, f.n + 1):
        expect(orc.gamma_oracle(f.ks, i) == f.gamma_of(i), f"vertex {i}")
        expect(orc.psi_oracle(f.ks, i) == f.psi_of(i), f"psi at vertex {i}")


@check("black_fast_path")
def _black_fast(f: Facts):
    for i in range(1, f.n + 1):
        expect(is_black_simple(f.ks, i) == (f.pd_simple[i - 1] != 1),
               f"S_{i}: fast gamma-black disagrees with pd={_fmt(f.pd_simple[i - 1])}")
        expect(is_psi_black_simple(f.ks, i, f.d) == (f.id_simple[i - 1] != 1),
               f"S_{i}: fast psi-black disagrees with id={_fmt(f.id_simple[i - 1])}")


@check("cartan_sums")
def _cartan_sums(f: Facts):
    c = f.cartan
    expect(tuple(int(x) for x in c.sum(axis=0)) == f.ks.c, "column sums differ from c")
    expect(tuple(int(x) for x in c.sum(axis=1)) == f.d, "row sums differ from injective lengths")


@check("common_cycle_weight")
def _weights(f: Facts):
    ws = {cy.weight for cy in f.cycles}
    expect(len(ws) == 1 and min(ws) >= 1, f"cycle weights {sorted(ws)}")


@check("opposite_quiver_invariants")
def _opposite(f: Facts):
    ws = {cycle_weight(cy, f.d) for cy in f.psi_cycles}
    expect(len(f.psi_cycles) == len(f.cycles) and ws == {f.summary.weight},
           f"psi quiver: {len(f.psi_cycles)} cycles weights {sorted(ws)}; "
           f"quiver: {len(f.cycles)} cycles weight {f.summary.weight}")
    expect(len(f.gamma_cyclic) == len(f.psi_cyclic),
           f"{len(f.gamma_cyclic)} gamma-cyclic vs {len(f.psi_cyclic)} psi-cyclic")


@check("snf_shape")
def _snf(f: Facts):
    want = cm.expected_snf(f.n, f.summary.weight, f.summary.component_count)
    expect(f.snf.diagonal == want, f"SNF {f.snf.diagonal}, expected {want}")
    expect(cm.rank(f.cartan) == f.n + 1 - f.summary.component_count,
           f"rank {cm.rank(f.cartan)} vs n+1-c = {f.n + 1 - f.summary.component_count}")


@check("snf_certificates")
def _snf_cert(f: Facts):
    s = f.snf
    lhs = s.left.dot(f.cartan).dot(s.right)
    expect(np.array_equal(lhs, s.matrix(f.n, f.n)), "left @ C @ right is not the diagonal")
    expect(abs(cm.determinant(s.left)) == 1 and abs(cm.determinant(s.right)) == 1,
           "transforms not unimodular")
    expect(cm.is_smith_diagonal(s.diagonal), f"{s.diagonal} not a divisibility chain")


@check("transpose_snf")
def _transpose(f: Facts):
    t = cm.smith_normal_form(f.cartan.T.copy())
    expect(t.diagonal == f.snf.diagonal, f"SNF of transpose {t.diagonal} vs {f.snf.diagonal}")


@check("black_cycle_rank")
def _black_rank(f: Facts):
    b = sum(cy.black for cy in f.cycles)
    c = f.cartan
    horizontal = cm.rank(np.hstack([c, c.T]))
    vertical = cm.rank(np.vstack([c, c.T]))
    expect(horizontal == vertical, f"rank (C|C^T)={horizontal} but stacked rank {vertical}")
    if b == 0:
        return INAPPLICABLE
    expect(horizontal == f.n + 1 - b, f"b={b}, rank (C|C^T)={horizontal}")


@check("cartan_determinant")
def _det(f: Facts):
    det = f.det
    product = 1
    for x in f.snf.diagonal:
        product *= x
    expect(abs(det) == product, f"det {det} vs SNF product {product}")
    expect((det == 1) == (not f.gldim_infinite), f"det {det}, gldim infinite={f.gldim_infinite}")
    if f.summary.component_count == 1:
        expect(det == f.summary.weight, f"connected quiver: det {det} vs weight {f.summary.weight}")
    else:
        expect(det == 0, f"disconnected quiver but det {det}")


@check("cycle_indicator_solutions")
def _linear_a(f: Facts):
    rep = cm.check_linear_solutions(f.ks, budget=0)
    expect(rep.prop_a, "cycle indicators are not a maximal independent solution set")
    expect(rep.prop_c, "black-cycle indicators / stacked system mismatch")


@check("nonnegative_solutions")
def _linear_b(f: Facts):
    rep = cm.check_linear_solutions(f.ks, budget=f.budget)
    if rep.prop_b is None:
        return SKIP
    expect(rep.prop_b, rep.detail)


@check("retraction_chain")
def _retraction(f: Facts):
    ks = f.ks
    chain = retraction_chain(ks)
    det0 = f.det
    count0, weight0 = f.summary.component_count, f.summary.weight
    for step, nxt in zip(chain.steps, chain.steps[1:]):
        a = step.series
        n = a.n
        la = left_retract(step)
        sa, sl = summarize(a), summarize(la)
        for i in range(1, n):
            fa = sa.quiver.succ[i - 1]
            expect(merge_map(n, fa) == sl.quiver.succ[i - 1], f"{a.c}: merged successor of {i}")
            k, rem = divmod(a.c[i - 1] + i - fa, n)
            expect(rem == 0 and la.c[i - 1] + i == k * (n - 1) + fa,
                   f"{a.c}: index identity fails at {i}")
        expect(sa.component_count == sl.component_count and sa.weight == sl.weight,
               f"{a.c} -> {la.c}: cycles/weight {sa.component_count}/{sa.weight} "
               f"-> {sl.component_count}/{sl.weight}")
        projective_on_cycle = a.shape is Shape.LINEAR and any(n in cy.vertices for cy in sa.cycles)
        if not projective_on_cycle:
            expect(Counter(cy.size for cy in sa.cycles) == Counter(cy.size for cy in sl.cycles),
                   f"{a.c} -> {la.c}: cycle sizes changed")
        expect(cm.determinant(cm.cartan_matrix(la)) == det0, f"{a.c} -> {la.c}: determinant changed")
        expect(nxt.series.n == n - 1, "chain length bookkeeping")
    t = chain.terminal
    expect(is_selfinjective(t), f"terminal {t.c} not selfinjective")
    expect(summarize(t).component_count == count0 and summarize(t).weight == weight0,
           "terminal cycle data differs")
    expect((t.c == (1,)) == (not f.gldim_infinite), f"terminal {t.c}, gldim infinite={f.gldim_infinite}")


@check("normalization")
def _normalization(f: Facts):
    ks = f.ks
    ns = normalize(ks)
    c = ns.c
    expect(sorted(c) == sorted(ks.c), "normalize changed the multiset")
    expect(c == rotate(ks.c, ns.offset), "offset does not reproduce the rotation")
    if ks.shape is Shape.CYCLIC and not is_selfinjective(ks):
        expect(c[0] == min(c) == c[-1] - 1, f"{c} not normalized")
    else:
        expect(ns.offset == 0, "nonzero offset on linear/selfinjective input")
    cf = canonical_form(ks)
    expect(canonical_form(cf) == cf and sorted(cf.c) == sorted(ks.c), "canonical form")


@check("rotation_invariance")
def _rotations(f: Facts):
    ks = f.ks
    if ks.shape is Shape.LINEAR or ks.n == 1:
        return INAPPLICABLE
    base = (f.summary.finite_global_dimension, f.summary.gorenstein,
            f.summary.component_count, f.summary.weight, f.snf.diagonal)
    for k in range(1, ks.n):
        r = KupischSeries(rotate(ks.c, k), Shape.CYCLIC)
        s = summarize(r)
        got = (s.finite_global_dimension, s.gorenstein, s.component_count, s.weight,
               cm.smith_normal_form(cm.cartan_matrix(r)).diagonal)
        expect(got == base, f"rotation {r.c}: {got} vs {base}")
        expect(canonical_form(r) == canonical_form(ks), f"canonical form of rotation {r.c}")


# ---------------------------------------------------------------------------
# running


@dataclass(frozen=True)
class CensusConfig:
    n_max: int = 6
    c_max: int = 9
    checks: tuple[str, ...] = tuple(CHECKS)
    budget: int = 200_000
    n_min: int = 1

    def __post_init__(self):
        if self.n_max < 1 or self.c_max < 1:
            raise ValueError("n_max and c_max must be at least 1")
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError("need 1 <= n_min <= n_max")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {unknown}")


def _order_key(ks: KupischSeries) -> tuple:
    return (ks.n, 0 if ks.shape is Shape.CYCLIC else 1, ks.c)


@dataclass
class _Tally:
    passes: int = 0
    failures: int = 0
    skips: int = 0
    inapplicable: int = 0
    first: Optional[tuple] = None  # (order key, series text, detail)

    def merge(self, other: "_Tally") -> None:
        self.passes += other.passes
        self.failures += other.failures
        self.skips += other.skips
        self.inapplicable += other.inapplicable
        if other.first is not None and (self.first is None or other.first[0] < self.first[0]):
            self.first = other.first


def run_checks(ks: KupischSeries, names: Sequence[str], budget: int = 200_000) -> dict[str, tuple[str, str]]:
    """Run the named checks on one algebra: ``{name: (status, detail)}``."""
    facts = Facts(ks, budget)
    out = {}
    for name in names:
        try:
            verdict = CHECKS[name](facts)
        except CheckFailed as exc:
            out[name] = ("fail", str(exc))
            continue
        except Exception as exc:  # any crash in a check is a finding too
            out[name] = ("fail", f"{type(exc).__name__}: {exc}")
            continue
        out[name] = (verdict or "pass", "")
    return out


def _run_chunk(args) -> tuple[int, dict[str, _Tally]]:
    series, names, budget = args
    tallies = {name: _Tally() for name in names}
    for ks in series:
        for name, (status, detail) in run_checks(ks, names, budget).items():
            t = tallies[name]
            if status == "pass":
                t.passes += 1
            elif status == SKIP:
                t.skips += 1
            elif status == INAPPLICABLE:
                t.inapplicable += 1
            else:
                t.failures += 1
                cand = (_order_key(ks), ",".join(map(str, ks.c)), detail)
                if t.first is None or cand[0] < t.first[0]:
                    t.first = cand
    return len(series), tallies


def _chunks(config: CensusConfig, size: int) -> Iterator[list[KupischSeries]]:
    buf: list[KupischSeries] = []
    for n in range(config.n_min, config.n_max + 1):
        for ks in enumerate_series(n, config.c_max):
            buf.append(ks)
            if len(buf) == size:
                yield buf
                buf = []
    if buf:
        yield buf


def verify_all(config: CensusConfig = CensusConfig(), jobs: int = 1, chunk_size: int = 500) -> dict:
    """Run every configured check on every enumerated algebra.

    The aggregate depends only on ``config``: counts add up and each check
    keeps the counterexample that comes first in enumeration order, so the
    result is the same for any ``jobs``.
    """
    start = time.perf_counter()
    names = tuple(config.checks)
    per_n = Counter()
    for n in range(config.n_min, config.n_max + 1):
        per_n[n] = sum(1 for _ in enumerate_series(n, config.c_max))
    tasks = ((chunk, names, config.budget) for chunk in _chunks(config, chunk_size))
    total = {name: _Tally() for name in names}
    checked = 0
    if jobs <= 1:
        results = map(_run_chunk, tasks)
        for count, tallies in results:
            checked += count
            for name, t in tallies.items():
                total[name].merge(t)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for count, tallies in pool.map(_run_chunk, tasks):
                checked += count
                for name, t in tallies.items():
                    total[name].merge(t)
    elapsed = time.perf_counter() - start
    checks = {}
    for name in names:
        t = total[name]
        checks[name] = {
            "passes": t.passes,
            "failures": t.failures,
            "skips": t.skips,
            "inapplicable": t.inapplicable,
            "first_counterexample": None if t.first is None else {"series": t.first[1], "detail": t.first[2]},
        }
    return {
        "config": {"n_min": config.n_min, "n_max": config.n_max, "c_max": config.c_max, "checks": list(names), "budget": config.budget},
        "algebras_checked": checked,
        "algebras_per_n": {str(n): per_n[n] for n in sorted(per_n)},
        "failures": sum(t.failures for t in total.values()),
        "skips": sum(t.skips for t in total.values()),
        "checks": checks,
        "elapsed_seconds": round(elapsed, 3),
    }


def report_json(report: dict, timing: bool = True) -> str:
    body = dict(report)
    if not timing:
        body.pop("elapsed_seconds", None)
    return json.dumps(body, separators=(",", ":"))


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ANALYZER_JOBS", "1")))
    except ValueError:
        return 1
