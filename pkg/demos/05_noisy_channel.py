"""
Decoding a noisy channel
========================

A message from four candidates is sent repeatedly over a channel that passes
it intact with probability 0.9 and otherwise substitutes a uniform draw.  The
receiver saw message 0 three times and message 1 once.
"""

from relprob import bayes_update, catalog, noisy_channel_likelihood, to_absolute
from relprob.magnitude import render

lik = noisy_channel_likelihood(4, 0.9, [3, 1, 0, 0])
print("likelihood ratio P(0, 1) =", render(lik[0, 1]))

# with a uniform prior the posterior is the likelihood itself
post = bayes_update(catalog.uniform(4), lik)
print("posterior:", to_absolute(post).round(6))

# a prior that rules message 0 out keeps it ruled out, whatever the data say
prior = catalog.from_absolute([0.0, 0.5, 0.25, 0.25])
post = bayes_update(prior, lik)
print("P(0, 1) after update:", render(post[0, 1]))
