"""Relative probability of events (sets of outcomes) for totally comparable RPFs.

``P(e1, e2)`` is the ratio of column sums ``sum_{h in e1} P(h, r)`` over
``sum_{h in e2} P(h, r)`` taken against a reference outcome ``r``.  Any
reference gives the same value when the ratio resolves; an internal anchor of
one of the events always resolves it.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import IncomparableError, NotAnchoredError, RpfError
from .magnitude import ONE, ZERO, Kind, Magnitude
from .rpf import DenseRpf, ensure_valid, find_anchors, is_totally_comparable

__all__ = [
    "as_event",
    "column_sum",
    "internal_anchor",
    "event_rel_prob",
    "to_absolute",
    "absolute_event_prob",
]


def as_event(p: DenseRpf, members: Iterable[int]) -> frozenset[int]:
    e = frozenset(int(h) for h in members)
    bad = [h for h in e if not 0 <= h < p.k]
    if bad:
        raise RpfError(f"event members {sorted(bad)} out of range for k={p.k}")
    return e


def _require_totally_comparable(p: DenseRpf) -> None:
    ensure_valid(p)
    if not is_totally_comparable(p):
        raise IncomparableError("event probabilities need a totally comparable RPF")


def internal_anchor(p: DenseRpf, e: Iterable[int]) -> int:
    """Lowest member of ``e`` that is possible with respect to every member of ``e``."""
    _require_totally_comparable(p)
    idx = sorted(as_event(p, e))
    if not idx:
        raise RpfError("the empty event has no internal anchor")
    sub = p.kinds[np.ix_(idx, idx)]
    ok = np.all((sub == Kind.FINITE) | (sub == Kind.INF), axis=1)
    return idx[int(np.flatnonzero(ok)[0])]


def column_sum(p: DenseRpf, members: Iterable[int], ref: int) -> Magnitude:
    """``sum_{h in members} P(h, ref)``, log-sum-exp over the finite terms."""
    idx = sorted(members)
    kinds = p.kinds[idx, ref]
    if np.any(kinds == Kind.WILD):
        return Magnitude(Kind.WILD)
    if np.any(kinds == Kind.INF):
        return Magnitude(Kind.INF)
    logs = p.logs[idx, ref][kinds == Kind.FINITE]
    if logs.size == 0:
        return ZERO
    return Magnitude.finite(float(np.logaddexp.reduce(logs)))


def event_rel_prob(p: DenseRpf, e1: Iterable[int], e2: Iterable[int]) -> Magnitude:
    """Probability of event ``e1`` relative to event ``e2``.  Never the wildcard."""
    _require_totally_comparable(p)
    e1, e2 = as_event(p, e1), as_event(p, e2)
    if not e1 and not e2:
        return ONE
    ref = internal_anchor(p, e1 if e1 else e2)
    return column_sum(p, e1, ref) / column_sum(p, e2, ref)


def to_absolute(p: DenseRpf) -> np.ndarray:
    """An absolute distribution matching ``p``, normalised against the lowest anchor."""
    ensure_valid(p)
    if p.k == 0:
        raise NotAnchoredError("the empty RPF has no absolute distribution")
    anchors = find_anchors(p)
    if not anchors:
        raise NotAnchoredError("RPF has no anchor outcome")
    a = min(anchors)
    # column a is finite or zero because a is possible w.r.t. everything
    finite = p.kinds[:, a] == Kind.FINITE
    logs = np.where(finite, p.logs[:, a], -np.inf)
    out = np.exp(logs - np.logaddexp.reduce(logs[finite]))
    return out


def absolute_event_prob(p: DenseRpf, e: Iterable[int]) -> float:
    """``P(e, Omega)`` as a plain probability."""
    if p.k == 0:
        raise RpfError("absolute probabilities need at least one outcome")
    m = event_rel_prob(p, e, range(p.k))
    return m.value
