"""Admissible (Kupisch) sequences of connected Nakayama algebras.

A connected Nakayama algebra with ``n`` simple modules is determined up to
isomorphism by the composition lengths ``c_1, ..., c_n`` of its indecomposable
projectives, ordered so that ``rad P_i`` is a quotient of ``P_{i+1}``.  Two
shapes occur: the quiver is an oriented cycle (every ``c_i >= 2``) or an
oriented line, in which case exactly one projective is simple and by
convention it sits at position ``n``.

Indices in every public output are 1-based.  Internally sequences are stored
as plain tuples, so ``ks.c[i - 1]`` is ``c_i``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Shape",
    "KupischSeries",
    "NormalizedSeries",
    "KupischError",
    "EmptyInputError",
    "NonPositiveEntryError",
    "AdmissibilityViolation",
    "DisconnectedAlgebraError",
    "NoNormalizedRotationError",
    "parse",
    "render",
    "from_sequence",
    "normalize",
    "canonical_form",
    "is_selfinjective",
    "rotate",
    "random_cyclic_series",
]


class Shape(str, enum.Enum):
    CYCLIC = "cyclic"
    LINEAR = "linear"


class KupischError(ValueError):
    """Base class for invalid admissible sequences."""


class EmptyInputError(KupischError):
    pass


class NonPositiveEntryError(KupischError):
    def __init__(self, index: int, value: int | str):
        self.index = index
        self.value = value
        super().__init__(f"entry {index} is {value!r}; entries must be positive integers")


class AdmissibilityViolation(KupischError):
    """Raised when ``c_{i+1} >= c_i - 1`` fails; ``index`` is the 1-based ``i+1``."""

    def __init__(self, index: int, c: Sequence[int], message: str | None = None):
        self.index = index
        self.c = tuple(c)
        if message is None:
            n = len(c)
            prev = (index - 2) % n
            message = (
                f"admissibility fails at index {index}: "
                f"c_{index} = {c[index - 1]} < c_{prev + 1} - 1 = {c[prev] - 1}"
            )
        super().__init__(message)


class DisconnectedAlgebraError(KupischError):
    pass


class NoNormalizedRotationError(AssertionError):
    """Cannot happen for a validated series; signals a bug upstream."""


def _check_admissible(c: Sequence[int], wrap: bool) -> None:
    n = len(c)
    stop = n if wrap else n - 1
    for i in range(stop):
        j = (i + 1) % n
        if c[j] < c[i] - 1:
            raise AdmissibilityViolation(j + 1, c)


@dataclass(frozen=True)
class KupischSeries:
    """A validated admissible sequence.

    Construct directly with an explicit shape, or use :func:`from_sequence` /
    :func:`parse` to infer it.
    """

    c: tuple[int, ...]
    shape: Shape

    def __post_init__(self):
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "shape", Shape(self.shape))
        if not c:
            raise EmptyInputError("admissible sequence is empty")
        for i, x in enumerate(c):
            if x < 1:
                raise NonPositiveEntryError(i + 1, x)
        n = len(c)
        if self.shape is Shape.CYCLIC:
            if min(c) < 2:
                raise DisconnectedAlgebraError(
                    "a cyclic Nakayama algebra has no simple projective (all c_i >= 2)"
                )
            _check_admissible(c, wrap=True)
        else:
            ones = [i + 1 for i, x in enumerate(c) if x == 1]
            if ones != [n]:
                raise DisconnectedAlgebraError(
                    f"a linear series needs exactly one entry 1, at position {n}; "
                    f"found 1 at positions {ones}"
                )
            _check_admissible(c, wrap=False)

    @property
    def n(self) -> int:
        return len(self.c)

    def __len__(self) -> int:
        return len(self.c)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class NormalizedSeries:
    """A normalized presentation together with the rotation that produced it.

    ``series.c[k] == original.c[(k + offset) % n]``.
    """

    series: KupischSeries
    offset: int

    @property
    def c(self) -> tuple[int, ...]:
        return self.series.c

    @property
    def n(self) -> int:
        return self.series.n


def rotate(c: Sequence[int], offset: int) -> tuple[int, ...]:
    """Rotation starting at 0-based position ``offset``."""
    n = len(c)
    offset %= n
    return tuple(c[offset:]) + tuple(c[:offset])


def from_sequence(values: Iterable[int]) -> KupischSeries:
    """Validate ``values`` and infer the shape.

    A sequence containing a single 1 is linear; it is rotated so the 1 lands at
    the last position.  Admissibility violations are reported with indices of
    the sequence as given.
    """
    c = tuple(values)
    if not c:
        raise EmptyInputError("admissible sequence is empty")
    for i, x in enumerate(c):
        if x < 1:
            raise NonPositiveEntryError(i + 1, x)
    n = len(c)
    ones = [i for i, x in enumerate(c) if x == 1]
    if not ones:
        return KupischSeries(c, Shape.CYCLIC)
    if len(ones) > 1:
        raise DisconnectedAlgebraError(
            f"entries at positions {[i + 1 for i in ones]} are 1; "
            "a connected algebra has at most one simple projective"
        )
    k = ones[0]
    # the wrap from the simple projective back to its successor is unconstrained
    for step in range(n - 1):
        i = (k + 1 + step) % n
        j = (i + 1) % n
        if c[j] < c[i] - 1:
            raise AdmissibilityViolation(j + 1, c)
    return KupischSeries(rotate(c, k + 1), Shape.LINEAR)


_TOKEN = re.compile(r"[\s,]+")


def parse(text: str) -> KupischSeries:
    """Parse ``"c1,c2,...,cn"`` (commas and/or whitespace) into a series."""
    tokens = [t for t in _TOKEN.split(text.strip()) if t]
    if not tokens:
        raise EmptyInputError("no entries in input")
    values = []
    for i, tok in enumerate(tokens):
        try:
            v = int(tok)
        except ValueError:
            raise NonPositiveEntryError(i + 1, tok) from None
        if v < 1:
            raise NonPositiveEntryError(i + 1, tok)
        values.append(v)
    return from_sequence(values)


def render(ks: KupischSeries) -> str:
    return ",".join(map(str, ks.c))


def is_selfinjective(ks: KupischSeries) -> bool:
    """Constant cyclic sequences, plus the simple algebra ``(1)``."""
    if ks.shape is Shape.LINEAR:
        return ks.n == 1
    first = ks.c[0]
    return all(x == first for x in ks.c)


def normalize(ks: KupischSeries) -> NormalizedSeries:
    """Rotate so that ``c_1 = min c = c_n - 1`` (cyclic, non-selfinjective).

    Linear series already carry the simple projective last and selfinjective
    ones are rotation-invariant; both come back with offset 0.  Among several
    valid rotations the smallest offset wins.
    """
    if ks.shape is Shape.LINEAR or is_selfinjective(ks):
        return NormalizedSeries(ks, 0)
    c = ks.c
    n = ks.n
    p = min(c)
    for k in range(n):
        if c[k] == p and c[k - 1] == p + 1:
            return NormalizedSeries(KupischSeries(rotate(c, k), Shape.CYCLIC), k)
    raise NoNormalizedRotationError(f"no normalized rotation of {c}")


def canonical_form(ks: KupischSeries) -> KupischSeries:
    """Lexicographically least rotation (identity on linear series)."""
    if ks.shape is Shape.LINEAR:
        return ks
    c = ks.c
    best = min(rotate(c, k) for k in range(ks.n))
    return ks if best == c else KupischSeries(best, Shape.CYCLIC)


def random_cyclic_series(n: int, c_max: int, rng=None) -> KupischSeries:
    """A random admissible cyclic series with entries in ``[2, c_max]``.

    Draws entries uniformly, then lowers each to the largest admissible
    sequence below the draw (``c_i <= c_{i+1} + 1`` all the way round).
    """
    import random

    if c_max < 2:
        raise ValueError("cyclic series need c_max >= 2")
    rng = rng if rng is not None else random.Random()
    c = [rng.randint(2, c_max) for _ in range(n)]
    # two sweeps backwards around the cycle settle the wrap-around constraint
    for _ in range(2):
        nxt = c[0]
        for i in range(n - 1, -1, -1):
            if c[i] > nxt + 1:
                c[i] = nxt + 1
            nxt = c[i]
    return KupischSeries(tuple(c), Shape.CYCLIC)
