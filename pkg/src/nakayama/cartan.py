"""Exact integer linear algebra on Cartan matrices.

Matrices are numpy arrays of ``dtype=object`` holding Python ints, so no
entry can overflow however large elimination makes it.  The Smith normal form
is computed by the classic reduction that always pivots on the entry of least
absolute value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .kupisch import KupischSeries
from .quiver import CycleData, cycles, build, summarize

__all__ = [
    "exact",
    "identity",
    "cartan_matrix",
    "circulant_cartan",
    "SmithForm",
    "smith_normal_form",
    "is_smith_diagonal",
    "determinant",
    "rank",
    "expected_snf",
    "verify_snf_shape",
    "cycle_indicator",
    "EnumerationTooLarge",
    "nonnegative_solutions",
    "LinearSolutionsReport",
    "check_linear_solutions",
]


def exact(rows: Iterable[Iterable[int]]) -> np.ndarray:
    """Object-dtype integer matrix from nested iterables."""
    data = [[int(x) for x in row] for row in rows]
    out = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        out[i, :] = row
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(0)
    return out


def cartan_matrix(ks: KupischSeries) -> np.ndarray:
    """Entry ``(i, j)`` counts copies of ``S_i`` in ``P_j``."""
    n = ks.n
    out = _zeros(n, n)
    for j, cj in enumerate(ks.c):
        q, r = divmod(cj, n)
        for i in range(n):
            out[(j + i) % n, j] = q + (1 if i < r else 0)
    return out


def circulant_cartan(m: int, n: int) -> np.ndarray:
    """Closed form for the selfinjective sequence ``(m, ..., m)``.

    With ``m = k n + r``, ``1 <= r <= n``: ``k + 1`` where ``0 <= i - j < r``
    or ``j - i > n - r``, else ``k``.
    """
    k, r = divmod(m, n)
    if r == 0:
        k, r = k - 1, n
    out = _zeros(n, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out[i - 1, j - 1] = k + 1 if (0 <= i - j < r or j - i > n - r) else k
    return out


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]
    rank: int
    left: Optional[np.ndarray] = None
    right: Optional[np.ndarray] = None

    def matrix(self, rows: int, cols: int) -> np.ndarray:
        out = _zeros(rows, cols)
        for k, d in enumerate(self.diagonal):
            out[k, k] = d
        return out


def _least_nonzero(a: np.ndarray, t: int) -> Optional[tuple[int, int]]:
    best = None
    best_abs = 0
    rows, cols = a.shape
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            x = row[j]
            if x and (best is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(m, certificates: bool = False) -> SmithForm:
    """Smith normal form over the integers.

    With ``certificates=True`` the result carries unimodular ``left`` and
    ``right`` with ``left @ m @ right`` equal to the diagonal matrix.
    """
    a = exact(m) if not isinstance(m, np.ndarray) else m.astype(object).copy()
    rows, cols = a.shape
    left = identity(rows) if certificates else None
    right = identity(cols) if certificates else None

    def swap_rows(i, k):
        if i != k:
            a[[i, k]] = a[[k, i]]
            if certificates:
                left[[i, k]] = left[[k, i]]

    def swap_cols(j, k):
        if j != k:
            a[:, [j, k]] = a[:, [k, j]]
            if certificates:
                right[:, [j, k]] = right[:, [k, j]]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = a[dst] + q * a[src]
        if certificates:
            left[dst] = left[dst] + q * left[src]

    def add_col(dst, src, q):
        a[:, dst] = a[:, dst] + q * a[:, src]
        if certificates:
            right[:, dst] = right[:, dst] + q * right[:, src]

    t = 0
    while t < min(rows, cols):
        pos = _least_nonzero(a, t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            p = a[t, t]
            for i in range(t + 1, rows):
                if a[i, t]:
                    add_row(i, t, -(a[i, t] // p))
            for j in range(t + 1, cols):
                if a[t, j]:
                    add_col(j, t, -(a[t, j] // p))
            # remainders left in the pivot row/column are smaller than |p|
            rest = [(i, t) for i in range(t + 1, rows) if a[i, t]]
            rest += [(t, j) for j in range(t + 1, cols) if a[t, j]]
            if rest:
                i, j = min(rest, key=lambda ij: abs(a[ij]))
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i, j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t, t] < 0:
            a[t] = -a[t]
            if certificates:
                left[t] = -left[t]
        t += 1

    diagonal = tuple(int(a[k, k]) for k in range(min(rows, cols)))
    return SmithForm(diagonal, t, left, right)


def is_smith_diagonal(diagonal: Sequence[int]) -> bool:
    """Nonnegative, nonzero entries first, each dividing the next."""
    if any(d < 0 for d in diagonal):
        return False
    nonzero = [d for d in diagonal if d]
    if list(diagonal[: len(nonzero)]) != nonzero:
        return False
    return all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


def determinant(m) -> int:
    """Bareiss fraction-free elimination; exact."""
    a = [[int(x) for x in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(m) -> int:
    """Rank via fraction-free elimination (independent of the Smith form)."""
    a = [[int(x) for x in row] for row in (m.tolist() if isinstance(m, np.ndarray) else m)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for j in range(cols):
        piv = next((i for i in range(r, rows) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][j]
        for i in range(r + 1, rows):
            if a[i][j]:
                f = a[i][j]
                a[i] = [p * x - f * y for x, y in zip(a[i], a[r])]
                g = math.gcd(*a[i])
                if g > 1:
                    a[i] = [x // g for x in a[i]]
        r += 1
        if r == rows:
            break
    return r


def expected_snf(n: int, weight: int, cycle_count: int) -> tuple[int, ...]:
    """``(1, ..., 1, w, 0, ..., 0)`` with ``cycle_count - 1`` zeros."""
    ones = n - cycle_count
    return (1,) * ones + (weight,) + (0,) * (cycle_count - 1)


def verify_snf_shape(ks: KupischSeries) -> bool:
    s = summarize(ks)
    snf = smith_normal_form(cartan_matrix(ks))
    want = expected_snf(ks.n, s.weight, s.component_count)
    return snf.diagonal == want and snf.rank == ks.n + 1 - s.component_count


def cycle_indicator(cycle: CycleData | Sequence[int], n: int) -> np.ndarray:
    """0/1 column vector supported on the cycle's vertices."""
    vertices = cycle.vertices if isinstance(cycle, CycleData) else cycle
    out = _zeros(n, 1)
    for v in vertices:
        out[v - 1, 0] = 1
    return out


class EnumerationTooLarge(RuntimeError):
    pass


def nonnegative_solutions(
    matrix, rhs: int, bound: int, budget: int = 1_000_000
) -> list[tuple[int, ...]]:
    """All ``x`` in ``{0..bound}^n`` with ``matrix @ x == rhs * 1``.

    Depth-first over coordinates, pruning any row whose partial sum exceeds
    ``rhs`` (entries are nonnegative) and any row whose variables are all set
    but which misses ``rhs``.  Raises :class:`EnumerationTooLarge` once more
    than ``budget`` partial assignments have been visited.
    """
    a = [[int(x) for x in row] for row in (matrix.tolist() if isinstance(matrix, np.ndarray) else matrix)]
    rows, n = len(a), len(a[0])
    if any(x < 0 for row in a for x in row):
        raise ValueError("nonnegative_solutions needs a nonnegative matrix")
    last = [max((j for j in range(n) if a[i][j]), default=-1) for i in range(rows)]
    closes = [[i for i in range(rows) if last[i] == j] for j in range(n)]
    if any(last[i] == -1 and rhs != 0 for i in range(rows)):
        return []
    partial = [0] * rows
    x = [0] * n
    out = []
    visited = 0

    def descend(j: int) -> None:
        nonlocal visited
        if j == n:
            out.append(tuple(x))
            return
        col = [a[i][j] for i in range(rows)]
        for v in range(bound + 1):
            visited += 1
            if visited > budget:
                raise EnumerationTooLarge(f"more than {budget} partial assignments")
            if any(partial[i] + col[i] * v > rhs for i in range(rows)):
                break
            if any(partial[i] + col[i] * v != rhs for i in closes[j]):
                continue
            for i in range(rows):
                partial[i] += col[i] * v
            x[j] = v
            descend(j + 1)
            for i in range(rows):
                partial[i] -= col[i] * v
        x[j] = 0

    descend(0)
    return out


@dataclass(frozen=True)
class LinearSolutionsReport:
    prop_a: bool
    prop_b: Optional[bool]
    prop_c: bool
    detail: str = ""

    @property
    def prop_b_skipped(self) -> bool:
        return self.prop_b is None


def _solves(m: np.ndarray, xi: np.ndarray, w: int) -> bool:
    return all(v == w for v in (m.dot(xi)).ravel())


def check_linear_solutions(ks: KupischSeries, budget: int = 200_000) -> LinearSolutionsReport:
    """Check how cycle indicators sit inside the solutions of ``C xi = w 1``.

    * ``prop_a``: each cycle indicator solves ``C xi = w 1`` and there are
      exactly ``n + 1 - rank C`` of them.
    * ``prop_b``: the nonnegative integer solutions are exactly the cycle
      indicators (``None`` when the search exceeds ``budget``).
    * ``prop_c``: black-cycle indicators solve ``C^T xi = C xi = w 1``; if
      there are ``b > 0`` black cycles then ``b = n + 1 - rank (C | C^T)``;
      the stacked system is consistent iff ``b > 0``.
    """
    n = ks.n
    cyc, count = cycles(build(ks), ks)
    w = cyc[0].weight
    c = cartan_matrix(ks)
    ct = c.T.copy()
    indicators = [cycle_indicator(cy, n) for cy in cyc]
    notes = []

    prop_a = all(_solves(c, xi, w) for xi in indicators) and count == n + 1 - rank(c)

    try:
        sols = set(nonnegative_solutions(c, w, w, budget=budget))
        want = {tuple(int(v) for v in xi.ravel()) for xi in indicators}
        prop_b: Optional[bool] = sols == want
        if not prop_b:
            notes.append(f"nonnegative solutions {sorted(sols)} != indicators {sorted(want)}")
    except EnumerationTooLarge:
        prop_b = None
        notes.append("nonnegative enumeration skipped: budget exceeded")

    black = [xi for xi, cy in zip(indicators, cyc) if cy.black]
    b = len(black)
    stacked = np.vstack([ct, c])
    ones = _zeros(2 * n, 1)
    ones[:, 0] = 1
    consistent = rank(stacked) == rank(np.hstack([stacked, ones]))
    prop_c = all(_solves(c, xi, w) and _solves(ct, xi, w) for xi in black)
    prop_c = prop_c and consistent == (b > 0)
    if b > 0:
        horizontal = rank(np.hstack([c, ct]))
        prop_c = prop_c and horizontal == rank(stacked) and b == n + 1 - horizontal
    return LinearSolutionsReport(prop_a, prop_b, prop_c, "; ".join(notes))
