"""
Cartan matrices and their Smith normal form
===========================================

The Smith form of the Cartan matrix is diag(1, ..., 1, w, 0, ..., 0) where w
is the common weight of the cycles and the number of zeros is one less than
the number of cycles.
"""

import math

from nakayama import parse
from nakayama.cartan import cartan_matrix, circulant_cartan, determinant, rank, smith_normal_form
from nakayama.quiver import summarize

for text in ["2,3,3,3", "2,3,3", "2,3", "6,6,6,6"]:
    ks = parse(text)
    c = cartan_matrix(ks)
    s = summarize(ks)
    snf = smith_normal_form(c)
    print(f"({text})  det={determinant(c)}  rank={rank(c)}  snf={snf.diagonal}"
          f"  cycles={s.component_count}  weight={s.weight}")

# certificates: left @ C @ right is the diagonal
snf = smith_normal_form(cartan_matrix(parse("2,3,3,3")), certificates=True)
print(snf.left.dot(cartan_matrix(parse("2,3,3,3"))).dot(snf.right))

# selfinjective (m,...,m): gcd(m, n) cycles, circulant Cartan matrix
m, n = 6, 4
print(circulant_cartan(m, n))
print("gcd:", math.gcd(m, n), "cycles:", summarize(parse(",".join([str(m)] * n))).component_count)
