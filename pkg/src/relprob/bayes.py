"""Bayesian updating of RPFs.

The posterior of a prior RPF given data is the entrywise product of the prior
with the likelihood-ratio RPF, ``P(h1, h2 | D) = P_D(h1, h2) * P(h1, h2)``.
No normalising constant is involved.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .catalog import from_weights
from .errors import RpfError
from .magnitude import MUL_TABLE, Kind
from .rpf import DenseRpf, ensure_valid

__all__ = [
    "pointwise_product",
    "bayes_update",
    "sequential_update",
    "likelihood_from_density",
    "noisy_channel_likelihood",
    "message_likelihood",
]


def pointwise_product(p1: DenseRpf, p2: DenseRpf) -> DenseRpf:
    if p1.k != p2.k:
        raise RpfError(f"dimension mismatch: {p1.k} vs {p2.k}")
    ensure_valid(p1)
    ensure_valid(p2)
    return DenseRpf(MUL_TABLE[p1.kinds, p2.kinds], p1.logs + p2.logs)


def bayes_update(prior: DenseRpf, likelihood: DenseRpf) -> DenseRpf:
    """Posterior RPF from a prior and a likelihood-ratio RPF."""
    return pointwise_product(likelihood, prior)


def sequential_update(prior: DenseRpf, likelihoods: Iterable[DenseRpf]) -> DenseRpf:
    posterior = ensure_valid(prior)
    for lik in likelihoods:
        posterior = bayes_update(posterior, lik)
    return posterior


def likelihood_from_density(density: Sequence[float]) -> DenseRpf:
    """Likelihood-ratio RPF from per-hypothesis likelihoods ``P(D | h)``."""
    return from_weights(density)


def _check_channel(k: int, p: float) -> None:
    if k < 1:
        raise RpfError("the channel needs at least one message")
    if not 0.0 <= p < 1.0:
        raise RpfError(f"channel reliability must lie in [0, 1), got {p!r}")


def noisy_channel_likelihood(k: int, p: float, counts: Sequence[int]) -> DenseRpf:
    """Likelihood RPF after receiving message ``m`` ``counts[m]`` times.

    Each transmission arrives intact with probability ``p`` and is otherwise
    replaced by a uniform draw over the ``k`` messages.  The ratio between two
    hypotheses is ``(1 + p k / (1 - p)) ** (c_h1 - c_h2)``.
    """
    _check_channel(k, p)
    c = np.asarray(counts)
    if c.shape != (k,):
        raise RpfError(f"expected {k} counts, got {c.shape[0] if c.ndim == 1 else c.shape}")
    if not np.issubdtype(c.dtype, np.integer) or np.any(c < 0):
        raise RpfError("counts must be non-negative integers")
    log_base = math.log1p(p * k / (1.0 - p))
    diff = np.subtract.outer(c, c).astype(float)
    return DenseRpf(np.full((k, k), Kind.FINITE), diff * log_base)


def message_likelihood(k: int, p: float, received: int) -> DenseRpf:
    """Likelihood RPF of a single received message."""
    _check_channel(k, p)
    if not 0 <= received < k:
        raise RpfError(f"received message {received} out of range for k={k}")
    density = np.full(k, (1.0 - p) / k)
    density[received] += p
    return likelihood_from_density(density)
