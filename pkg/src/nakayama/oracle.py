"""Definition-level homological algebra over a Nakayama algebra.

Every indecomposable module is uniserial, hence a quotient ``P_top / rad^length``
of an indecomposable projective.  Syzygies and cosyzygies of such modules are
again uniserial, so projective and injective dimensions can be computed by
iterating these maps on ``(top, length)`` pairs until either the zero module
is reached or a state repeats.

Nothing here consults the resolution quiver; these functions are the ground
truth the fast decisions in :mod:`nakayama.quiver` are checked against.
"""
from __future__ import annotations

import math
from typing import Callable, Iterator, NamedTuple, Optional

from .kupisch import KupischSeries

INFINITE = math.inf

#: A homological dimension: a nonnegative ``int``, or :data:`INFINITE`.
HomDimension = float


class SerialModule(NamedTuple):
    """Uniserial module with top ``S_top`` and composition length ``length``.

    Composition factors from top to socle are ``S_top, S_{top+1}, ...``
    (indices mod ``n``, 1-based).
    """

    top: int
    length: int

    def socle(self, n: int) -> int:
        return (self.top + self.length - 2) % n + 1

    def factors(self, n: int) -> list[int]:
        return [(self.top - 1 + k) % n + 1 for k in range(self.length)]


def is_valid_module(ks: KupischSeries, m: SerialModule) -> bool:
    return 1 <= m.top <= ks.n and 1 <= m.length <= ks.c[m.top - 1]


def all_modules(ks: KupischSeries) -> Iterator[SerialModule]:
    """Every indecomposable module, each exactly once."""
    for top in range(1, ks.n + 1):
        for length in range(1, ks.c[top - 1] + 1):
            yield SerialModule(top, length)


def simple(i: int) -> SerialModule:
    return SerialModule(i, 1)


def projective(ks: KupischSeries, i: int) -> SerialModule:
    return SerialModule(i, ks.c[i - 1])


def injective(ks: KupischSeries, j: int) -> SerialModule:
    d = injective_length(ks, j)
    return SerialModule((j - d) % ks.n + 1, d)


def syzygy(ks: KupischSeries, m: SerialModule) -> Optional[SerialModule]:
    """Kernel of the projective cover ``P_top -> M``; ``None`` if ``M`` is projective."""
    c_top = ks.c[m.top - 1]
    if m.length == c_top:
        return None
    return SerialModule((m.top + m.length - 1) % ks.n + 1, c_top - m.length)


def injective_length(ks: KupischSeries, j: int) -> int:
    """Length of the injective envelope ``I(S_j)``.

    This is the longest uniserial module with socle ``S_j``; a module of
    length ``l`` with that socle has top ``S_{j-l+1}`` and exists iff
    ``l <= c_{j-l+1}``.  The admissible lengths form an interval ``1..d``.
    """
    n = ks.n
    c = ks.c
    length = 1
    while length + 1 <= c[(j - length - 1) % n]:
        length += 1
    return length


def injective_lengths(ks: KupischSeries) -> tuple[int, ...]:
    """All injective lengths in one sweep.

    Removing the socle of a uniserial module with socle ``S_{j+1}`` leaves one
    with socle ``S_j``, so ``d_{j+1} <= d_j + 1``; each ``d_{j+1}`` is found by
    counting down from ``d_j + 1``.  Total work is ``O(n + max c)``.
    """
    n = ks.n
    c = ks.c
    d = [0] * n
    d[0] = injective_length(ks, 1)
    for j in range(1, n):
        length = d[j - 1] + 1
        # a module with socle S_{j+1} (0-based j) and this length has top index j - length + 1
        while length > c[(j - length + 1) % n]:
            length -= 1
        d[j] = length
    return tuple(d)


def cosyzygy(ks: KupischSeries, m: SerialModule) -> Optional[SerialModule]:
    """Cokernel of the injective envelope; ``None`` if ``M`` is injective."""
    n = ks.n
    s = m.socle(n)
    d = injective_length(ks, s)
    if m.length == d:
        return None
    return SerialModule((s - d) % n + 1, d - m.length)


def _dimension(
    step: Callable[[KupischSeries, SerialModule], Optional[SerialModule]],
    ks: KupischSeries,
    m: SerialModule,
) -> HomDimension:
    seen = set()
    k = 0
    current = m
    while current not in seen:
        seen.add(current)
        nxt = step(ks, current)
        if nxt is None:
            return k
        current = nxt
        k += 1
    return INFINITE


def proj_dim(ks: KupischSeries, m: SerialModule) -> HomDimension:
    """Projective dimension by iterated syzygies with exact repeat detection."""
    return _dimension(syzygy, ks, m)


def inj_dim(ks: KupischSeries, m: SerialModule) -> HomDimension:
    return _dimension(cosyzygy, ks, m)


def syzygy_power(ks: KupischSeries, m: SerialModule, k: int) -> Optional[SerialModule]:
    out: Optional[SerialModule] = m
    for _ in range(k):
        if out is None:
            return None
        out = syzygy(ks, out)
    return out


def cosyzygy_power(ks: KupischSeries, m: SerialModule, k: int) -> Optional[SerialModule]:
    out: Optional[SerialModule] = m
    for _ in range(k):
        if out is None:
            return None
        out = cosyzygy(ks, out)
    return out


def simple_proj_dims(ks: KupischSeries) -> tuple[HomDimension, ...]:
    return tuple(proj_dim(ks, simple(i)) for i in range(1, ks.n + 1))


def simple_inj_dims(ks: KupischSeries) -> tuple[HomDimension, ...]:
    return tuple(inj_dim(ks, simple(i)) for i in range(1, ks.n + 1))


def global_dim(ks: KupischSeries) -> HomDimension:
    return max(simple_proj_dims(ks))


def gamma_oracle(ks: KupischSeries, i: int) -> int:
    """Shifted socle of ``P_i``: the successor of ``S_i`` in the resolution quiver."""
    soc = projective(ks, i).socle(ks.n)
    return soc % ks.n + 1


def psi_oracle(ks: KupischSeries, j: int) -> int:
    """Inverse-shifted top of ``I(S_j)``."""
    return (j - injective_length(ks, j) - 1) % ks.n + 1


def is_gorenstein_oracle(ks: KupischSeries) -> bool:
    """``id A`` and ``pd DA`` both finite, checked summand by summand."""
    n = ks.n
    if any(inj_dim(ks, projective(ks, i)) == INFINITE for i in range(1, n + 1)):
        return False
    return all(proj_dim(ks, injective(ks, j)) != INFINITE for j in range(1, n + 1))
