"""Resolution quivers and the fast decision procedures built on them.

The resolution quiver has one arrow out of every vertex, ``i -> f(i)`` with
``f(i) = c_i + i (mod n)``, so it is a functional graph: every connected
component holds exactly one cycle.  Global dimension is finite iff there is a
single component and its cycle has weight 1; with infinite global dimension
the algebra is Gorenstein iff every cycle is black.

All decisions here run in ``O(n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .kupisch import KupischSeries
from .oracle import injective_lengths

__all__ = [
    "ResolutionQuiver",
    "CycleData",
    "NonIntegerWeightError",
    "build",
    "psi_quiver",
    "cycles",
    "find_cycles",
    "cycle_weight",
    "is_black_simple",
    "black_flags",
    "is_psi_black_simple",
    "has_finite_global_dimension",
    "is_gorenstein",
    "cyclic_sets",
    "QuiverSummary",
    "summarize",
]


class NonIntegerWeightError(ArithmeticError):
    """A cycle's length sum is not divisible by ``n``; indicates a bug."""


@dataclass(frozen=True)
class ResolutionQuiver:
    """Functional graph on ``1..n``; ``succ[i - 1]`` is the target of vertex ``i``."""

    succ: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.succ)

    def __call__(self, i: int) -> int:
        return self.succ[i - 1]


class CycleData(NamedTuple):
    vertices: tuple[int, ...]
    weight: int
    black: bool

    @property
    def size(self) -> int:
        return len(self.vertices)


def build(ks: KupischSeries) -> ResolutionQuiver:
    n = ks.n
    return ResolutionQuiver(tuple((c + i) % n + 1 for i, c in enumerate(ks.c)))


def psi_quiver(ks: KupischSeries) -> ResolutionQuiver:
    """The functional graph of the map ``psi``; isomorphic to the quiver of the opposite algebra."""
    n = ks.n
    d = injective_lengths(ks)
    return ResolutionQuiver(tuple((j - dj) % n + 1 for j, dj in enumerate(d)))


def find_cycles(succ: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of a functional graph given 1-based successors.

    Each cycle starts at its least vertex; cycles come sorted by that vertex.
    Iterative three-colour walk, linear time.
    """
    n = len(succ)
    # 0 = unvisited, 1 = on the current walk, 2 = finished
    state = bytearray(n + 1)
    found = []
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        v = start
        while not state[v]:
            state[v] = 1
            path.append(v)
            v = succ[v - 1]
        if state[v] == 1:
            if len(path) == 1:
                found.append((v,))
            else:
                cyc = path[path.index(v):]
                m = cyc.index(min(cyc))
                found.append(tuple(cyc[m:] + cyc[:m]))
        for u in path:
            state[u] = 2
    found.sort()
    return found


def cycle_weight(vertices: Sequence[int], lengths: Sequence[int]) -> int:
    n = len(lengths)
    total = sum(lengths[v - 1] for v in vertices)
    w, r = divmod(total, n)
    if r:
        raise NonIntegerWeightError(
            f"cycle {tuple(vertices)} has length sum {total}, not divisible by n={n}"
        )
    return w


def is_black_simple(ks: KupischSeries, i: int) -> bool:
    """``pd S_i != 1``, read off the sequence.

    ``pd S_i == 1`` exactly when ``S_i`` is not projective and
    ``rad P_i`` is projective, i.e. ``c_{i+1} == c_i - 1``.
    """
    c = ks.c
    ci = c[i - 1]
    return ci == 1 or c[i % ks.n] != ci - 1


def is_psi_black_simple(ks: KupischSeries, j: int, d: Optional[Sequence[int]] = None) -> bool:
    """``id S_j != 1``; dual of :func:`is_black_simple` using injective lengths."""
    if d is None:
        d = injective_lengths(ks)
    dj = d[j - 1]
    return dj == 1 or d[j - 2] != dj - 1


def black_flags(ks: KupischSeries) -> list[bool]:
    """:func:`is_black_simple` for every vertex, 0-based."""
    c = ks.c
    return [ci == 1 or cn != ci - 1 for ci, cn in zip(c, c[1:] + c[:1])]


def cycles(rq: ResolutionQuiver, ks: KupischSeries) -> tuple[list[CycleData], int]:
    """All cycles with weight and black flag, plus the component count."""
    c = ks.c
    n = ks.n
    black = black_flags(ks)
    out = []
    for cyc in find_cycles(rq.succ):
        total = 0
        all_black = True
        for v in cyc:
            total += c[v - 1]
            all_black = all_black and black[v - 1]
        w, r = divmod(total, n)
        if r:
            raise NonIntegerWeightError(
                f"cycle {cyc} has length sum {total}, not divisible by n={n}"
            )
        out.append(CycleData(cyc, w, all_black))
    return out, len(out)


def _decide_finite(cycle_list: Sequence[CycleData]) -> bool:
    return len(cycle_list) == 1 and cycle_list[0].weight == 1


def has_finite_global_dimension(ks: KupischSeries) -> bool:
    cyc, _ = cycles(build(ks), ks)
    return _decide_finite(cyc)


def is_gorenstein(ks: KupischSeries) -> bool:
    cyc, _ = cycles(build(ks), ks)
    return _decide_finite(cyc) or all(c.black for c in cyc)


def cyclic_sets(ks: KupischSeries) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices on cycles of the resolution quiver and of the ``psi`` quiver."""
    gamma = frozenset(v for cyc in find_cycles(build(ks).succ) for v in cyc)
    psi = frozenset(v for cyc in find_cycles(psi_quiver(ks).succ) for v in cyc)
    return gamma, psi


@dataclass(frozen=True)
class QuiverSummary:
    quiver: ResolutionQuiver
    cycles: tuple[CycleData, ...]
    finite_global_dimension: bool
    gorenstein: bool

    @property
    def component_count(self) -> int:
        return len(self.cycles)

    @property
    def weight(self) -> int:
        return self.cycles[0].weight


def summarize(ks: KupischSeries) -> QuiverSummary:
    """Build the quiver once and take both decisions from it."""
    rq = build(ks)
    cyc, _ = cycles(rq, ks)
    finite = _decide_finite(cyc)
    return QuiverSummary(rq, tuple(cyc), finite, finite or all(c.black for c in cyc))
