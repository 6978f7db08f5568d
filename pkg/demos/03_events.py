"""
Relative probability of events
==============================

For a totally comparable RPF, events (sets of outcomes) can be compared with
each other, including events of probability zero.
"""

from relprob import absolute_event_prob, catalog, event_rel_prob, to_absolute
from relprob.magnitude import render

p = catalog.from_absolute([0.7, 0.2, 0.1])
print("P({1, 2}, {0}) =", render(event_rel_prob(p, {1, 2}, {0})))
print("P({1, 2})      =", absolute_event_prob(p, {1, 2}))

# the empty event is impossible relative to anything non-empty, yet equal to itself
print("P({}, {0}) =", render(event_rel_prob(p, set(), {0})))
print("P({}, {})  =", render(event_rel_prob(p, set(), set())))

# in a chain, outcome 0 carries all the absolute mass, but the lower outcomes
# still have well defined odds against each other
chain = catalog.finite_geometric(3, 0)
print("absolute:", to_absolute(chain))
print("P({1}, {2}) =", render(event_rel_prob(chain, {1}, {2})))
