"""
Standard RPFs and their structure
=================================

Build a few of the standard relative probability functions and ask which
outcomes can be compared, which are possible, and how they split into
possibility classes.
"""

from relprob import catalog, classify, validate
from relprob.document import serialize_document
from relprob.magnitude import render

# a geometric RPF: each outcome is twice as likely as the one before it
geo = catalog.finite_geometric(4, 2)
print("P(3, 0) =", render(geo[3, 0]))
print("axiom violations:", validate(geo))

# squeezing the ratio to 0 gives a strict chain of impossibilities
chain = catalog.finite_geometric(3, 0)
print(classify(chain).as_dict())

# an absolute distribution with two zeros: the zero outcomes cannot be
# compared with each other, yet outcome 0 is still an anchor
d = catalog.from_absolute([0.6, 0.4, 0.0, 0.0])
report = classify(d)
print("totally comparable:", report.totally_comparable)
print("anchors:", sorted(report.anchors))
print("classes:", report.classes, "order:", sorted(report.class_dag))

# documents are canonical JSON, the same format the command line reads
print(serialize_document(d), end="")
