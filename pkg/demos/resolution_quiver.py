"""
Reading homological properties off the resolution quiver
========================================================

A connected Nakayama algebra is fixed by its admissible sequence.  The
resolution quiver has one arrow i -> f(i) per vertex, so it is a functional
graph and every component carries exactly one cycle.
"""

from nakayama import oracle, parse
from nakayama.quiver import build, cycles, psi_quiver, summarize

ks = parse("2,3,3,3")
rq = build(ks)
print("successors:", rq.succ)

# one component; its cycle is 1 -> 3 -> 2 -> 1 with weight (2+3+3)/4
cyc, count = cycles(rq, ks)
for c in cyc:
    print("cycle", c.vertices, "weight", c.weight, "black" if c.black else "not black")

s = summarize(ks)
print("finite global dimension:", s.finite_global_dimension)
print("gorenstein:", s.gorenstein)

# the brute-force calculus agrees
print("oracle gldim:", oracle.global_dim(ks))
print("oracle gorenstein:", oracle.is_gorenstein_oracle(ks))

# (2,3,3) has two loops and only one of them is black
ks = parse("2,3,3")
cyc, _ = cycles(build(ks), ks)
print([(c.vertices, c.black) for c in cyc], "gorenstein:", summarize(ks).gorenstein)
print("psi quiver:", psi_quiver(ks).succ)
