"""Hierarchical composition: component RPFs joined under a top-level RPF.

Outcomes of the composed RPF are laid out component-major: all outcomes of
component 0, then component 1, and so on.  Within a component the entries are
copied; across components ``(k1, i)`` vs ``(k2, j)`` the entry is

    P_k1(i, all of k1) * P_top(k1, k2) * P_k2(all of k2, j)
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import IncomparableError, RpfError
from .magnitude import INV_TABLE, MUL_TABLE, Kind
from .events import event_rel_prob
from .rpf import (
    DenseRpf,
    ensure_valid,
    is_totally_comparable,
    is_totally_mutually_possible,
)

__all__ = ["Composition", "CompositionReport", "compose", "total_comparability_conditions"]


@dataclass(frozen=True)
class Composition:
    top: DenseRpf
    components: tuple[DenseRpf, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if self.top.k != len(self.components):
            raise RpfError(
                f"top RPF has {self.top.k} outcomes but {len(self.components)} components were given"
            )
        ensure_valid(self.top)
        for c in self.components:
            ensure_valid(c)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.k for c in self.components)

    @property
    def offsets(self) -> tuple[int, ...]:
        """Index of each component's first outcome in the composed RPF."""
        return tuple(int(x) for x in np.concatenate([[0], np.cumsum(self.sizes)[:-1]])) if self.sizes else ()

    def flat_index(self, component: int, i: int) -> int:
        if not 0 <= i < self.sizes[component]:
            raise IndexError(f"outcome {i} out of range for component {component}")
        return self.offsets[component] + i


def _share_of_component(c: DenseRpf) -> tuple[np.ndarray, np.ndarray]:
    """Kinds and logs of ``P_c(h, all of c)`` for every outcome ``h``."""
    kinds = np.empty(c.k, dtype=np.int8)
    logs = np.zeros(c.k)
    everything = range(c.k)
    for h in range(c.k):
        m = event_rel_prob(c, [h], everything)
        kinds[h], logs[h] = m.kind, m.log
    return kinds, logs


def compose(c: Composition) -> DenseRpf:
    for n, comp in enumerate(c.components):
        if comp.k == 0:
            raise RpfError(f"component {n} is empty")
        if not is_totally_comparable(comp):
            raise IncomparableError(f"component {n} is not totally comparable")

    total = sum(c.sizes)
    kinds = np.empty((total, total), dtype=np.int8)
    logs = np.zeros((total, total))
    shares = [_share_of_component(comp) for comp in c.components]
    blocks = [slice(o, o + s) for o, s in zip(c.offsets, c.sizes)]

    for a, (comp_a, sl_a) in enumerate(zip(c.components, blocks)):
        up_k, up_l = shares[a]
        for b, sl_b in enumerate(blocks):
            if a == b:
                kinds[sl_a, sl_a] = comp_a.kinds
                logs[sl_a, sl_a] = comp_a.logs
                continue
            down_k, down_l = shares[b]
            # P_b(all, j) is the inverse of P_b(j, all)
            down_k = INV_TABLE[down_k]
            top_k = int(c.top.kinds[a, b])
            left = MUL_TABLE[up_k, top_k]
            kinds[sl_a, sl_b] = MUL_TABLE[left[:, None], down_k[None, :]]
            logs[sl_a, sl_b] = (up_l + c.top.logs[a, b])[:, None] - down_l[None, :]
    return DenseRpf(kinds, logs)


@dataclass(frozen=True)
class CompositionReport:
    """The three conditions that together decide total comparability of a composition.

    1. the top RPF and every component are totally comparable;
    2. at most one component is not totally mutually possible;
    3. every component is possible with respect to that exceptional component.
    """

    condition1: bool
    condition2: bool
    condition3: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return self.condition1 and self.condition2 and self.condition3

    def as_dict(self) -> dict:
        return {
            "condition1": self.condition1,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def total_comparability_conditions(c: Composition) -> CompositionReport:
    witnesses: dict[str, tuple] = {}

    not_tc = [n for n, comp in enumerate(c.components) if not is_totally_comparable(comp)]
    if not is_totally_comparable(c.top):
        i, j = (int(x) for x in np.argwhere(c.top.kinds == Kind.WILD)[0])
        witnesses["condition1"] = ("top", i, j)
    elif not_tc:
        witnesses["condition1"] = ("component", not_tc[0])
    cond1 = "condition1" not in witnesses

    not_tmp = [n for n, comp in enumerate(c.components) if not is_totally_mutually_possible(comp)]
    cond2 = len(not_tmp) <= 1
    if not cond2:
        witnesses["condition2"] = tuple(not_tmp[:2])

    cond3 = True
    if len(not_tmp) == 1:
        x = not_tmp[0]
        for n in range(c.top.k):
            if int(c.top.kinds[n, x]) not in (Kind.FINITE, Kind.INF):
                cond3 = False
                witnesses["condition3"] = (n, x)
                break
    return CompositionReport(cond1, cond2, cond3, witnesses)
