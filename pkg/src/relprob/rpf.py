"""Relative probability functions: representations and structural analysis.

A relative probability function (RPF) on ``k`` outcomes assigns to every
ordered pair ``(i, j)`` a magnitude ``P(i, j)``, the probability of outcome
``i`` relative to outcome ``j``.  A valid RPF satisfies

* identity:     ``P(i, i) = 1``
* inverse:      ``P(i, j) = P(j, i) ** -1``
* composition:  ``P(i, l)`` is matched by ``P(i, j) * P(j, l)``

:class:`DenseRpf` stores the full table as two numpy arrays (variant codes
and logs) so the ``O(k**3)`` composition check runs vectorised.
:class:`ClassedRpf` is the compact form built from mutual-possibility
classes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .errors import AxiomViolationError, RpfError
from .magnitude import (
    INV_TABLE,
    LOG_TOL,
    MUL_TABLE,
    Kind,
    Magnitude,
    matches,
    mw_mul,
)

__all__ = [
    "DenseRpf",
    "ClassedRpf",
    "Violation",
    "ClassificationReport",
    "validate",
    "ensure_valid",
    "comparable",
    "possible",
    "mutually_possible",
    "is_totally_comparable",
    "is_totally_mutually_possible",
    "possibility_classes",
    "find_anchors",
    "classify",
    "to_classed",
    "to_dense",
    "matched_by",
    "check_path_composition",
]

_F = int(Kind.FINITE)
_W = int(Kind.WILD)


class DenseRpf:
    """A ``k x k`` table of magnitudes.

    Construction does not check the axioms (use :func:`validate`), so the same
    type carries both candidate tables and verified RPFs.  Instances are
    immutable; the underlying arrays are read-only.
    """

    def __init__(self, kinds, logs=None):
        kinds = np.array(kinds, dtype=np.int8, copy=True)
        if kinds.ndim != 2 or kinds.shape[0] != kinds.shape[1]:
            if kinds.size == 0:
                kinds = kinds.reshape(0, 0)
            else:
                raise RpfError(f"RPF table must be square, got shape {kinds.shape}")
        if kinds.size and (kinds.min() < 0 or kinds.max() > 3):
            raise RpfError("variant codes must lie in 0..3")
        if logs is None:
            logs = np.zeros(kinds.shape)
        logs = np.array(logs, dtype=np.float64, copy=True).reshape(kinds.shape)
        finite = kinds == _F
        if not np.all(np.isfinite(logs[finite])):
            raise RpfError("finite entries need finite logs")
        logs[~finite] = 0.0
        kinds.flags.writeable = False
        logs.flags.writeable = False
        self.kinds = kinds
        self.logs = logs

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> DenseRpf:
        """Build from nested rows of anything :meth:`Magnitude.of` accepts."""
        rows = [list(r) for r in rows]
        k = len(rows)
        if any(len(r) != k for r in rows):
            raise RpfError("RPF table must be square")
        kinds = np.zeros((k, k), dtype=np.int8)
        logs = np.zeros((k, k))
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                m = Magnitude.of(v)
                kinds[i, j] = m.kind
                logs[i, j] = m.log
        return cls(kinds, logs)

    @property
    def k(self) -> int:
        return self.kinds.shape[0]

    def __len__(self) -> int:
        return self.k

    def __getitem__(self, ij) -> Magnitude:
        i, j = ij
        return Magnitude(Kind(int(self.kinds[i, j])), float(self.logs[i, j]))

    def entries(self) -> list[list[Magnitude]]:
        return [[self[i, j] for j in range(self.k)] for i in range(self.k)]

    def values(self) -> np.ndarray:
        """Linear values as floats, with ``nan`` standing in for the wildcard."""
        out = np.exp(self.logs)
        out[self.kinds == Kind.ZERO] = 0.0
        out[self.kinds == Kind.INF] = np.inf
        out[self.kinds == Kind.WILD] = np.nan
        return out

    @cached_property
    def violations(self) -> list[Violation]:
        return _find_violations(self)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseRpf):
            return NotImplemented
        if self.kinds.shape != other.kinds.shape or not np.array_equal(self.kinds, other.kinds):
            return False
        finite = self.kinds == _F
        return bool(np.all(np.abs(self.logs[finite] - other.logs[finite]) <= LOG_TOL))

    __hash__ = None

    def __repr__(self) -> str:
        from .magnitude import render

        rows = ", ".join("[" + ", ".join(render(m) for m in row) + "]" for row in self.entries())
        return f"DenseRpf(k={self.k}, [{rows}])"


class Violation(NamedTuple):
    """One broken axiom.  ``indices`` is ``(i,)``, ``(i, j)`` with ``i < j``, or ``(i, j, l)``."""

    axiom: str
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.axiom} {tuple(int(x) for x in self.indices)}"


def _find_violations(p: DenseRpf) -> list[Violation]:
    kinds, logs = p.kinds, p.logs
    out: list[Violation] = []
    if p.k == 0:
        return out

    dk, dl = np.diagonal(kinds), np.diagonal(logs)
    for i in np.flatnonzero((dk != _F) | (np.abs(dl) > LOG_TOL)):
        out.append(Violation("identity", (int(i),)))

    inv_kinds = INV_TABLE[kinds.T]
    bad = (kinds != inv_kinds) | ((kinds == _F) & (np.abs(logs + logs.T) > LOG_TOL))
    for i, j in zip(*np.nonzero(np.triu(bad, 1))):
        out.append(Violation("inverse", (int(i), int(j))))

    # product[i, j, l] = P(i, j) * P(j, l), compared against P(i, l)
    prod_kinds = MUL_TABLE[kinds[:, :, None], kinds[None, :, :]]
    prod_logs = logs[:, :, None] + logs[None, :, :]
    target_kinds = kinds[:, None, :]
    target_logs = logs[:, None, :]
    ok = (prod_kinds == _W) | (
        (target_kinds == prod_kinds)
        & ((prod_kinds != _F) | (np.abs(target_logs - prod_logs) <= LOG_TOL))
    )
    for i, j, l in np.argwhere(~ok):
        out.append(Violation("composition", (int(i), int(j), int(l))))
    return out


def validate(p: DenseRpf) -> list[Violation]:
    """Every axiom violation in ``p``; an empty list means ``p`` is a valid RPF."""
    if not isinstance(p, DenseRpf):
        raise TypeError(f"expected DenseRpf, got {type(p).__name__}")
    return list(p.violations)


def ensure_valid(p: DenseRpf) -> DenseRpf:
    if p.violations:
        raise AxiomViolationError(p.violations)
    return p


def _check_index(p: DenseRpf, *idx: int) -> None:
    for i in idx:
        if not 0 <= i < p.k:
            raise IndexError(f"outcome {i} out of range for k={p.k}")


def comparable(p: DenseRpf, i: int, j: int) -> bool:
    _check_index(p, i, j)
    return int(p.kinds[i, j]) != _W


def possible(p: DenseRpf, i: int, j: int) -> bool:
    """``i`` is possible with respect to ``j``: the entry is finite or infinite."""
    _check_index(p, i, j)
    return int(p.kinds[i, j]) in (Kind.FINITE, Kind.INF)


def mutually_possible(p: DenseRpf, i: int, j: int) -> bool:
    _check_index(p, i, j)
    return int(p.kinds[i, j]) == _F


def is_totally_comparable(p: DenseRpf) -> bool:
    return not bool(np.any(p.kinds == _W))


def is_totally_mutually_possible(p: DenseRpf) -> bool:
    return bool(np.all(p.kinds == _F))


def possibility_classes(p: DenseRpf) -> tuple[tuple[tuple[int, ...], ...], frozenset]:
    """Mutual-possibility classes and the strict order between them.

    Returns ``(classes, dag)``.  ``classes`` are sorted tuples of outcomes,
    ordered by their lowest member; class ids are positions in that tuple.
    ``dag`` holds ``(c1, c2)`` when class ``c1`` is possible with respect to
    the distinct class ``c2``.
    """
    ensure_valid(p)
    mp = p.kinds == _F
    ids = -np.ones(p.k, dtype=int)
    classes: list[tuple[int, ...]] = []
    for h in range(p.k):
        if ids[h] >= 0:
            continue
        members = np.flatnonzero(mp[h])
        ids[members] = len(classes)
        classes.append(tuple(int(x) for x in members))
    reps = [c[0] for c in classes]
    dag = frozenset(
        (a, b)
        for a, b in itertools.permutations(range(len(classes)), 2)
        if int(p.kinds[reps[a], reps[b]]) == Kind.INF
    )
    return tuple(classes), dag


def find_anchors(p: DenseRpf) -> frozenset[int]:
    """Outcomes possible with respect to every other outcome."""
    ensure_valid(p)
    poss = (p.kinds == _F) | (p.kinds == Kind.INF)
    return frozenset(int(a) for a in np.flatnonzero(np.all(poss, axis=1)))


@dataclass(frozen=True)
class ClassificationReport:
    totally_comparable: bool
    anchors: frozenset[int]
    totally_mutually_possible: bool
    classes: tuple[tuple[int, ...], ...]
    class_dag: frozenset

    @property
    def anchored(self) -> bool:
        return bool(self.anchors)

    def as_dict(self) -> dict:
        return {
            "totally_comparable": self.totally_comparable,
            "anchored": self.anchored,
            "anchors": sorted(self.anchors),
            "totally_mutually_possible": self.totally_mutually_possible,
            "classes": [list(c) for c in self.classes],
            "class_dag": sorted([list(e) for e in self.class_dag]),
        }


def classify(p: DenseRpf) -> ClassificationReport:
    classes, dag = possibility_classes(p)
    return ClassificationReport(
        totally_comparable=is_totally_comparable(p),
        anchors=find_anchors(p),
        totally_mutually_possible=is_totally_mutually_possible(p),
        classes=classes,
        class_dag=dag,
    )


def matched_by(p1: DenseRpf, p2: DenseRpf) -> bool:
    """True when every entry of ``p1`` is matched by the same entry of ``p2``."""
    if p1.k != p2.k:
        raise RpfError(f"dimension mismatch: {p1.k} vs {p2.k}")
    wild = p2.kinds == _W
    same = (p1.kinds == p2.kinds) & (
        (p1.kinds != _F) | (np.abs(p1.logs - p2.logs) <= LOG_TOL)
    )
    return bool(np.all(wild | same))


def check_path_composition(p: DenseRpf, path: Sequence[int]) -> bool:
    """Check ``P(first, last)`` is matched by the product of successive steps."""
    path = list(path)
    if not path:
        raise RpfError("path must be non-empty")
    _check_index(p, *path)
    product = Magnitude.finite(0.0)
    for a, b in zip(path, path[1:]):
        product = mw_mul(product, p[a, b])
    return matches(p[path[0], path[-1]], product)


# ---------------------------------------------------------------------------
# classed representation


@dataclass(frozen=True, eq=False)
class ClassedRpf:
    """Outcome-to-class assignment, per-outcome log value, and class comparison.

    An entry is reconstructed as
    ``class_order[assignment[i], assignment[j]] * exp(log_values[i] - log_values[j])``.
    ``class_order`` is itself an RPF over the classes with values restricted
    to ``{0, 1, inf, *}``.
    """

    assignment: tuple[int, ...]
    log_values: tuple[float, ...]
    class_order: DenseRpf = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(a) for a in self.assignment))
        object.__setattr__(self, "log_values", tuple(float(x) for x in self.log_values))

    @property
    def k(self) -> int:
        return len(self.assignment)

    @property
    def n_classes(self) -> int:
        return self.class_order.k

    def problems(self) -> list[str]:
        """Structural invariant failures; empty when the representation is canonical."""
        out: list[str] = []
        if len(self.log_values) != self.k:
            out.append("log_values length differs from assignment length")
            return out
        if not all(math.isfinite(x) for x in self.log_values):
            out.append("log_values must be finite")
        q = self.class_order
        c = q.k
        if any(not 0 <= a < c for a in self.assignment):
            out.append("assignment refers to a missing class")
            return out
        if set(self.assignment) != set(range(c)):
            out.append("every class needs at least one member")
        firsts = [self.assignment.index(x) for x in range(c) if x in self.assignment]
        if firsts != sorted(firsts):
            out.append("class ids must follow the order of each class's lowest member")
        for x, h in enumerate(firsts):
            if abs(self.log_values[h]) > LOG_TOL:
                out.append(f"lowest member of class {x} must have log value 0")
        out.extend(f"class order: {v}" for v in q.violations)
        off = ~np.eye(c, dtype=bool)
        if np.any(q.kinds[off] == _F):
            out.append("distinct classes cannot be mutually possible")
        return out


def to_classed(p: DenseRpf) -> ClassedRpf:
    classes, _ = possibility_classes(p)
    assignment = np.zeros(p.k, dtype=int)
    log_values = np.zeros(p.k)
    for c, members in enumerate(classes):
        base = members[0]
        assignment[list(members)] = c
        log_values[list(members)] = p.logs[list(members), base]
    reps = [c[0] for c in classes]
    q_kinds = p.kinds[np.ix_(reps, reps)]
    return ClassedRpf(tuple(assignment), tuple(log_values), DenseRpf(q_kinds))


def to_dense(c: ClassedRpf) -> DenseRpf:
    problems = c.problems()
    if problems:
        raise RpfError("invalid classed RPF: " + "; ".join(problems))
    a = np.asarray(c.assignment, dtype=int)
    ell = np.asarray(c.log_values, dtype=float)
    if c.k == 0:
        return DenseRpf(np.zeros((0, 0)))
    q_kinds = c.class_order.kinds[np.ix_(a, a)]
    # Q in {0, 1, inf, *}, so the product's variant is Q's variant
    return DenseRpf(q_kinds, ell[:, None] - ell[None, :])

