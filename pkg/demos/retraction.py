"""
Left retractions down to a selfinjective algebra
================================================

Each step removes one simple and keeps the cycle count, the weight and the
Cartan determinant.  The chain ends at the simple algebra exactly when the
global dimension is finite.
"""

from nakayama import parse
from nakayama.retraction import retraction_chain, terminal_is_simple

for text in ["2,3,3,3", "2,3", "3,4,4,4,3", "2,2,1"]:
    chain = retraction_chain(parse(text))
    steps = " -> ".join(str(s.c) for s in chain.steps)
    print(f"{steps}   terminal simple: {terminal_is_simple(chain)}")
