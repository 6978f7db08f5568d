"""
Magnitudes and the wildcard
===========================

Relative probabilities live in [0, inf] plus one extra element ``*`` that
stands for "no information".  This script walks through the arithmetic.
"""

from relprob import INF, WILDCARD, ZERO, Magnitude, matches
from relprob.magnitude import render

two, half = Magnitude.of(2), Magnitude.of(0.5)

# products and inverses behave like ordinary ratios...
print("2 * 0.5 =", render(two * half))
print("1 / 0   =", render(ZERO.inverse()))

# ...except that 0 * inf has no sensible value, so it becomes the wildcard
print("0 * inf =", render(ZERO * INF))
print("* * 2   =", render(WILDCARD * two))

# values are stored as logs, so huge ratios do not overflow
big = Magnitude.finite(5000.0)
print("e^5000 * e^5000 =", render(big * big))

# "a is matched by b" means a == b, or b is the wildcard.  It is an order,
# not a symmetric relation.
print("2 matched by * :", matches(two, WILDCARD))
print("* matched by 2 :", matches(WILDCARD, two))
