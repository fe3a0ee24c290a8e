"""Fast homological decisions for connected Nakayama algebras.

Global-dimension finiteness and the Gorenstein property are read off the
resolution quiver of the admissible sequence; the Cartan matrix and its
Smith normal form carry the same cycle data.  :mod:`nakayama.oracle` computes
everything again from syzygies and cosyzygies, and :mod:`nakayama.census`
compares the two on every small algebra.
"""
from .kupisch import (
    KupischError,
    KupischSeries,
    NormalizedSeries,
    Shape,
    canonical_form,
    from_sequence,
    is_selfinjective,
    normalize,
    parse,
    render,
)
from .quiver import (
    CycleData,
    ResolutionQuiver,
    build,
    cycles,
    cyclic_sets,
    has_finite_global_dimension,
    is_gorenstein,
    psi_quiver,
    summarize,
)
from .report import analyze

__version__ = "0.1.0"
