"""Limits of totally comparable RPFs via the inverse odds embedding.

Every entry of a totally comparable RPF lies in ``[0, inf]``; mapping each
through ``x -> x / (x + 1)`` places the whole table in the cube ``[0, 1]**(k*k)``.
Limits are taken coordinatewise there and mapped back.  Boundary coordinates
(0 and 1) correspond to entries 0 and ``inf``, which is where an absolute
distribution loses information and an RPF keeps it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .catalog import from_absolute, uniform
from .errors import IncomparableError, NotConvergedError, RpfError
from .magnitude import Kind
from .rpf import DenseRpf, ensure_valid, is_totally_comparable

__all__ = [
    "EmbeddedRpf",
    "embed",
    "unembed",
    "sequence_limit",
    "family_limit",
    "FAMILIES",
    "CONVERGENCE_TOL",
    "SETTLE_STEPS",
]

CONVERGENCE_TOL = 1e-9
SETTLE_STEPS = 3


@dataclass(frozen=True, eq=False)
class EmbeddedRpf:
    k: int
    coords: np.ndarray  # row-major, length k*k

    def matrix(self) -> np.ndarray:
        return self.coords.reshape(self.k, self.k)


def _embed_arrays(kinds: np.ndarray, logs: np.ndarray) -> np.ndarray:
    # x / (x + 1) written as a logistic of the log, stable at both ends
    u = np.empty(kinds.shape)
    finite = kinds == Kind.FINITE
    u[finite] = 0.5 * (1.0 + np.tanh(0.5 * logs[finite]))
    u[kinds == Kind.ZERO] = 0.0
    u[kinds == Kind.INF] = 1.0
    return u


def embed(p: DenseRpf) -> EmbeddedRpf:
    if not is_totally_comparable(p):
        raise IncomparableError("cannot embed an RPF with wildcard entries")
    return EmbeddedRpf(p.k, _embed_arrays(p.kinds, p.logs).ravel())


def _odds_arrays(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    kinds = np.full(u.shape, Kind.FINITE, dtype=np.int8)
    kinds[u == 0.0] = Kind.ZERO
    kinds[u == 1.0] = Kind.INF
    interior = kinds == Kind.FINITE
    logs = np.zeros(u.shape)
    logs[interior] = np.log(u[interior]) - np.log1p(-u[interior])
    return kinds, logs


def unembed(e: EmbeddedRpf) -> DenseRpf:
    coords = np.asarray(e.coords, dtype=float)
    if coords.shape != (e.k * e.k,):
        raise RpfError(f"expected {e.k * e.k} coordinates, got {coords.shape}")
    if np.any(~np.isfinite(coords)) or np.any(coords < 0) or np.any(coords > 1):
        raise RpfError("embedded coordinates must lie in [0, 1]")
    kinds, logs = _odds_arrays(coords.reshape(e.k, e.k))
    return ensure_valid(DenseRpf(kinds, logs))


def sequence_limit(
    seq: Sequence[DenseRpf],
    tol: float = CONVERGENCE_TOL,
    settle: int = SETTLE_STEPS,
) -> DenseRpf:
    """Coordinatewise limit of a sequence of totally comparable RPFs.

    The sequence has converged when each of its last ``settle`` steps (fewer
    if the sequence is shorter) moves no embedded coordinate by more than
    ``tol``.  Moving coordinates within ``tol`` of 0 or 1 are snapped onto the
    boundary; stationary entries are returned exactly as given.  The result
    is re-validated, and a snapped table that breaks an axiom is reported as
    non-convergence.
    """
    seq = list(seq)
    if len(seq) < 2:
        raise RpfError("a limit needs at least two terms")
    k = seq[0].k
    if any(p.k != k for p in seq):
        raise RpfError("all terms of a sequence must have the same size")
    for p in seq:
        ensure_valid(p)
    if k == 0:
        return seq[-1]
    pts = np.stack([embed(p).matrix() for p in seq])

    window = min(settle, len(seq) - 1)
    steps = np.abs(np.diff(pts[-window - 1:], axis=0))
    worst = steps.max(axis=0)
    if worst.max() > tol:
        i, j = np.unravel_index(int(np.argmax(worst)), worst.shape)
        raise NotConvergedError(
            f"entry ({i}, {j}) still moves by {worst[i, j]:.3g} over the last {window} step(s)",
            entry=(int(i), int(j)),
        )

    last = seq[-1]
    u = pts[-1].copy()
    moving = worst > 0
    u[moving & (u <= tol)] = 0.0
    u[moving & (u >= 1.0 - tol)] = 1.0
    snapped = moving & ((u == 0.0) | (u == 1.0))
    if not snapped.any():
        return last

    kinds, logs = _odds_arrays(u)
    kinds = np.where(snapped, kinds, last.kinds)
    logs = np.where(snapped, 0.0, last.logs)
    limit = DenseRpf(kinds, logs)
    if limit.violations:
        v = limit.violations[0]
        raise NotConvergedError(
            f"boundary snapping produced an invalid table ({v})",
            entry=tuple(v.indices[:2]) if len(v.indices) >= 2 else (v.indices[0], v.indices[0]),
        )
    return limit


def family_limit(
    family: Callable[[float], DenseRpf],
    steps: int = 40,
    tol: float = CONVERGENCE_TOL,
    settle: int = SETTLE_STEPS,
) -> DenseRpf:
    """Limit of ``family(eps)`` as ``eps = 2**-n`` for ``n = 1..steps``."""
    if steps < 2:
        raise RpfError("need at least two steps")
    return sequence_limit([family(2.0 ** -n) for n in range(1, steps + 1)], tol, settle)


def _abs_lose_info(eps: float) -> DenseRpf:
    return from_absolute([1.0 - eps, 2.0 * eps / 3.0, eps / 3.0])


def _equal_rate_zeros(eps: float) -> DenseRpf:
    return from_absolute([eps, 1.0 - 2.0 * eps, eps])


def _near_fair_coin(eps: float) -> DenseRpf:
    return from_absolute([0.5 + eps / 2.0, 0.5 - eps / 2.0])


# named one-parameter families, keyed by the names the CLI accepts
FAMILIES: dict[str, Callable[[float], DenseRpf]] = {
    "abs-lose-info": _abs_lose_info,
    "equal-rate-zeros": _equal_rate_zeros,
    "near-fair-coin": _near_fair_coin,
    "uniform-3": lambda eps: uniform(3),
}
