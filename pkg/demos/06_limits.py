"""
Limits at the edge of the simplex
=================================

Take the distributions (1 - e, 2e/3, e/3) as e shrinks.  In the limit the
absolute distribution is (1, 0, 0) and says nothing about outcomes 1 and 2,
but the relative probabilities keep the ratio between them.
"""

from relprob import embed, family_limit
from relprob.limits import FAMILIES
from relprob.magnitude import render

lim = family_limit(FAMILIES["abs-lose-info"], steps=40)
for i, j in [(0, 1), (1, 0), (1, 2)]:
    print(f"P({i}, {j}) =", render(lim[i, j]))

# in the embedded picture every entry lands in [0, 1]
print(embed(lim).matrix().round(6))
