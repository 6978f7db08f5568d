"""
A compact representation
========================

An RPF is fixed by its possibility classes, one log weight per outcome, and a
small table relating the classes.  This is much smaller than the full table
when there are few classes.
"""

import numpy as np

from relprob import to_classed, to_dense
from relprob.generate import random_rpf

rng = np.random.default_rng(0)
p = random_rpf(rng, 6, "anchored", n_classes=3)
c = to_classed(p)
print("assignment:", c.assignment)
print("log values:", np.round(c.log_values, 3))
print("class order:\n", c.class_order)
print("dense table recovered:", to_dense(c) == p)
