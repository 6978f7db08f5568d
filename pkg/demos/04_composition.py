"""
Composing RPFs
==============

A top-level RPF weighs several components against each other; composing them
gives one RPF over all of their outcomes.
"""

from relprob import Composition, catalog, compose, total_comparability_conditions
from relprob.magnitude import render

top = catalog.from_absolute([0.25, 0.75])
parts = [catalog.uniform(2), catalog.uniform(2)]
p = compose(Composition(top, parts))
print("cross entry P(h_1,0, h_0,0) =", render(p[2, 0]))

# two components that each contain an impossible outcome: the composition
# loses comparability between those two outcomes
chain = catalog.finite_geometric(2, 0)
c = Composition(catalog.uniform(2), [chain, chain])
print(total_comparability_conditions(c).as_dict())
print("P(1, 3) =", render(compose(c)[1, 3]))
