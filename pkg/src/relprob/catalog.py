"""Constructors for the standard example RPFs and for absolute distributions."""

from __future__ import annotations

import numpy as np

from .errors import RpfError
from .magnitude import Kind, Magnitude
from .rpf import DenseRpf

__all__ = [
    "uniform",
    "indeterminate",
    "certain",
    "empty",
    "unit",
    "finite_geometric",
    "binomial",
    "check_distribution",
    "from_absolute",
    "from_weights",
]

# tolerance on the total mass of an absolute distribution
SUM_TOL = 1e-9


def uniform(k: int) -> DenseRpf:
    """Every outcome equally likely: all entries 1."""
    if k < 0:
        raise RpfError("k must be non-negative")
    return DenseRpf(np.full((k, k), Kind.FINITE))


def indeterminate(k: int) -> DenseRpf:
    """Every distinct pair incomparable.  The diagonal stays 1 (identity axiom)."""
    if k < 0:
        raise RpfError("k must be non-negative")
    kinds = np.full((k, k), Kind.WILD)
    np.fill_diagonal(kinds, Kind.FINITE)
    return DenseRpf(kinds)


def certain(k: int, c: int) -> DenseRpf:
    """Outcome ``c`` is infinitely more likely than every other outcome.

    Pairs not involving ``c`` are left at 1.
    """
    if not 0 <= c < k:
        raise RpfError(f"certain outcome {c} out of range for k={k}")
    kinds = np.full((k, k), Kind.FINITE)
    kinds[c, :] = Kind.INF
    kinds[:, c] = Kind.ZERO
    kinds[c, c] = Kind.FINITE
    return DenseRpf(kinds)


def empty() -> DenseRpf:
    return uniform(0)


def unit() -> DenseRpf:
    return uniform(1)


def finite_geometric(k: int, r) -> DenseRpf:
    """Each outcome is ``r`` times as likely as its predecessor.

    ``P(h_i, h_j) = r ** (i - j)``.  With ``r`` equal to 0 or ``inf`` this is
    the limit geometric RPF: a strict chain of zero/infinite ratios.
    """
    if k < 0:
        raise RpfError("k must be non-negative")
    r = Magnitude.of(r)
    if r.is_wildcard:
        raise RpfError("geometric ratio cannot be the wildcard")
    steps = np.subtract.outer(np.arange(k), np.arange(k))
    if r.is_finite:
        return DenseRpf(np.full((k, k), Kind.FINITE), steps * r.log)
    up, down = (Kind.INF, Kind.ZERO) if r.is_inf else (Kind.ZERO, Kind.INF)
    kinds = np.where(steps > 0, up, np.where(steps < 0, down, Kind.FINITE))
    return DenseRpf(kinds)


def _log_factorials(n: int) -> np.ndarray:
    return np.concatenate([[0.0], np.cumsum(np.log(np.arange(1, n + 1)))])


def binomial(n: int, p: float) -> DenseRpf:
    """Relative binomial distribution over ``0..n`` successes."""
    if n < 0:
        raise RpfError("n must be non-negative")
    if not 0.0 < p < 1.0:
        raise RpfError(f"success probability must lie in (0, 1), got {p!r}")
    lf = _log_factorials(n)
    h = np.arange(n + 1)
    # log of 1 / (h! (n-h)!) plus h log-odds; entries are differences of this
    w = -(lf[h] + lf[n - h]) + h * (np.log(p) - np.log1p(-p))
    return DenseRpf(np.full((n + 1, n + 1), Kind.FINITE), np.subtract.outer(w, w))


def check_distribution(probs) -> np.ndarray:
    """Return ``probs`` as a float array after checking it is a categorical distribution."""
    d = np.asarray(probs, dtype=float)
    if d.ndim != 1:
        raise RpfError("an absolute distribution is a 1-d array")
    if d.size == 0:
        raise RpfError("an absolute distribution needs at least one outcome")
    if np.any(~np.isfinite(d)) or np.any(d < 0) or np.any(d > 1):
        raise RpfError("probabilities must lie in [0, 1]")
    if abs(d.sum() - 1.0) > SUM_TOL:
        raise RpfError(f"probabilities sum to {float(d.sum())!r}, not 1")
    return d


def from_weights(weights) -> DenseRpf:
    """Entrywise ratios ``w_i / w_j`` of non-negative weights; ``0/0`` off the diagonal is ``*``."""
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or np.any(~np.isfinite(w)) or np.any(w < 0):
        raise RpfError("weights must be a 1-d array of finite non-negative numbers")
    pos = w > 0
    with np.errstate(divide="ignore"):
        lw = np.where(pos, np.log(np.where(pos, w, 1.0)), 0.0)
    pi, pj = pos[:, None], pos[None, :]
    kinds = np.select(
        [pi & pj, pi & ~pj, ~pi & pj],
        [Kind.FINITE, Kind.INF, Kind.ZERO],
        default=Kind.WILD,
    )
    np.fill_diagonal(kinds, Kind.FINITE)
    return DenseRpf(kinds, np.subtract.outer(lw, lw))


def from_absolute(probs) -> DenseRpf:
    """The RPF ``P(i, j) = P(i) / P(j)`` of a categorical distribution."""
    return from_weights(check_distribution(probs))
