"""Left retractions of admissible sequences.

A normalized non-selfinjective series ``(c_1, ..., c_n)`` retracts to the
``n - 1`` term series ``c'_i = c_i - floor((c_i + i - 1) / n)``.  Iterating
(renormalizing before each step) ends at a selfinjective series; global
dimension is finite exactly when that terminal series is the simple algebra.
"""
from __future__ import annotations

from dataclasses import dataclass

from .kupisch import (
    KupischSeries,
    NormalizedSeries,
    Shape,
    is_selfinjective,
    normalize,
)

__all__ = [
    "SelfinjectiveInputError",
    "RetractionChain",
    "left_retract",
    "retraction_chain",
    "terminal_is_simple",
    "merge_map",
]


class SelfinjectiveInputError(ValueError):
    pass


@dataclass(frozen=True)
class RetractionChain:
    """Normalized presentations ``A_0, A_1, ..., A_r``; ``A_r`` is selfinjective."""

    steps: tuple[NormalizedSeries, ...]

    @property
    def terminal(self) -> KupischSeries:
        return self.steps[-1].series

    def __len__(self) -> int:
        return len(self.steps)


def left_retract(ns: NormalizedSeries | KupischSeries) -> KupischSeries:
    """One retraction step; the input must already be normalized."""
    ks = ns.series if isinstance(ns, NormalizedSeries) else ns
    if is_selfinjective(ks):
        raise SelfinjectiveInputError(f"{ks.c} is selfinjective; no left retraction")
    n = ks.n
    c = ks.c
    # selfinjective was excluded above, so n >= 2
    out = tuple(c[i] - (c[i] + i) // n for i in range(n - 1))
    # no rotation here: vertex i of L(A) must stay vertex i
    return KupischSeries(out, Shape.LINEAR if 1 in out else Shape.CYCLIC)


def retraction_chain(ks: KupischSeries) -> RetractionChain:
    steps = [normalize(ks)]
    while not is_selfinjective(steps[-1].series):
        steps.append(normalize(left_retract(steps[-1])))
    return RetractionChain(tuple(steps))


def terminal_is_simple(chain: RetractionChain) -> bool:
    t = chain.terminal
    return t.c == (1,)


def merge_map(n: int, i: int) -> int:
    """Vertex ``i`` of ``A`` seen in ``L(A)``: identity below ``n``, ``n -> 1``."""
    return 1 if i == n else i
