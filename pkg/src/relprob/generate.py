"""Random RPFs and simplex points for property tests and demonstrations.

Random RPFs are built from their class structure: outcomes are split into
mutual-possibility classes, each class gets random log weights, and the
classes are related by a random strict partial order (``inf`` above, ``0``
below, ``*`` for incomparable pairs).
"""

from __future__ import annotations

import numpy as np

from .magnitude import Kind
from .rpf import DenseRpf

__all__ = ["random_simplex_point", "random_rpf", "random_class_order", "STRUCTURES"]

STRUCTURES = ("tmp", "totally_comparable", "anchored", "unanchored", "any")


def random_simplex_point(rng: np.random.Generator, k: int, zeros: int = 0) -> np.ndarray:
    """Uniform point on the simplex with exactly ``zeros`` zero coordinates."""
    if not 0 <= zeros < k:
        raise ValueError("need 0 <= zeros < k")
    d = np.zeros(k)
    support = rng.permutation(k)[: k - zeros]
    d[support] = rng.dirichlet(np.ones(k - zeros))
    return d / d.sum()


def random_class_order(
    rng: np.random.Generator, n: int, structure: str = "any", edge_prob: float = 0.5
) -> np.ndarray:
    """Boolean ``above[a, b]`` for a random strict partial order on ``n`` classes."""
    perm = rng.permutation(n)
    above = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(x + 1, n):
            if structure == "totally_comparable":
                edge = True
            elif structure == "unanchored" and x == 0 and y == 1:
                edge = False
            else:
                edge = rng.random() < edge_prob
            if structure == "anchored" and x == 0:
                edge = True
            above[perm[x], perm[y]] = edge
    # transitive closure
    for m in range(n):
        above |= above[:, m:m + 1] & above[m:m + 1, :]
    return above


def random_rpf(
    rng: np.random.Generator,
    k: int,
    structure: str = "any",
    n_classes: int | None = None,
    spread: float = 2.0,
) -> DenseRpf:
    """A random valid RPF on ``k`` outcomes with the requested structure.

    ``structure`` is one of :data:`STRUCTURES`.  ``"tmp"`` gives a single
    class; ``"unanchored"`` needs at least two classes and so ``k >= 2``.
    """
    if structure not in STRUCTURES:
        raise ValueError(f"unknown structure {structure!r}")
    if k == 0:
        return DenseRpf(np.zeros((0, 0)))
    if structure == "tmp":
        n = 1
    elif n_classes is not None:
        n = n_classes
    else:
        lo = 2 if structure == "unanchored" else 1
        n = int(rng.integers(lo, k + 1))
    if structure == "unanchored" and not 2 <= n <= k:
        raise ValueError("an unanchored RPF needs between 2 and k classes")
    if not 1 <= n <= k:
        raise ValueError("need 1 <= n_classes <= k")

    cls = np.concatenate([np.arange(n), rng.integers(0, n, size=k - n)])
    cls = rng.permutation(cls)
    weights = rng.normal(0.0, spread, size=k)
    above = random_class_order(rng, n, structure)

    a, b = cls[:, None], cls[None, :]
    same = a == b
    up = above[a, b]
    down = above[b, a]
    kinds = np.select([same, up, down], [Kind.FINITE, Kind.INF, Kind.ZERO], default=Kind.WILD)
    logs = np.where(same, weights[:, None] - weights[None, :], 0.0)
    return DenseRpf(kinds, logs)
