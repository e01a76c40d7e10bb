"""Vertex partitions with per-class caps on the maximum average degree.

Both partitioners climb the objective

    f = sum_i target_i * |V_i| + (number of edges between classes) / 2

by single-vertex moves. At a local maximum every class respects its cap as
long as the digraph's maximum average degree is within the slack allowance.
:func:`modlov_partition` additionally removes directed cycles from classes
with cap exactly 1 ("Brooks cycles") by moves that never lower ``f``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, Sequence

from .core import Digraph, HalfInt, find_digon, max_avg_degree, weak_components
from .errors import IterationCapError, PreconditionError
from .patterns import first_violation

log = logging.getLogger(__name__)

SlackKind = Literal["lovasz", "modlov"]


@dataclass(frozen=True)
class PartitionTargets:
    targets: tuple[HalfInt, ...]
    slack_kind: SlackKind = "lovasz"

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(HalfInt.of(t) for t in self.targets))
        if not self.targets:
            raise ValueError("need at least one target")
        if any(t < 0 for t in self.targets):
            raise ValueError(f"targets must be non-negative, got {[str(t) for t in self.targets]}")
        if self.slack_kind not in ("lovasz", "modlov"):
            raise ValueError(f"unknown slack kind {self.slack_kind!r}")

    @property
    def s(self) -> int:
        return len(self.targets)

    @property
    def capacity(self) -> HalfInt:
        """Largest maximum average degree the targets can absorb."""
        extra = self.s - 1 if self.slack_kind == "lovasz" else self.s - 2
        return HalfInt(extra) + sum(self.targets, HalfInt(0))


@dataclass(frozen=True)
class Partition:
    class_of: tuple[int, ...]
    num_classes: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for v, i in enumerate(self.class_of):
            out[i].append(v)
        return out


def f_objective(D: Digraph, P: Partition, T: PartitionTargets) -> HalfInt:
    if len(P.class_of) != D.n:
        raise ValueError("partition does not cover the digraph")
    if P.num_classes != T.s:
        raise ValueError(f"{P.num_classes} classes but {T.s} targets")
    twice = 0
    for v, i in enumerate(P.class_of):
        if not 0 <= i < T.s:
            raise ValueError(f"class index {i} out of range for vertex {v}")
        twice += T.targets[i].twice
    twice += sum(1 for u, v in D.edges() if P.class_of[u] != P.class_of[v])
    return HalfInt(twice)


class _Search:
    """Mutable partition plus per-vertex neighbor counts per class."""

    def __init__(self, D: Digraph, caps: Sequence[int], class_of: list[int]):
        self.D = D
        self.caps = list(caps)  # twice the target of each class
        self.s = len(caps)
        self.class_of = class_of
        # cnt[v][j] = (out-neighbors + in-neighbors) of v inside class j
        self.cnt = [[0] * self.s for _ in range(D.n)]
        for v in range(D.n):
            row = self.cnt[v]
            for w in D.out_adj[v]:
                row[class_of[w]] += 1
            for w in D.in_adj[v]:
                row[class_of[w]] += 1
        self.moves = 0

    def gain2(self, u: int, j: int) -> int:
        """Twice the change in f from moving ``u`` into class ``j``."""
        i = self.class_of[u]
        row = self.cnt[u]
        return row[i] - row[j] + self.caps[j] - self.caps[i]

    def move(self, u: int, j: int) -> None:
        i = self.class_of[u]
        self.class_of[u] = j
        for w in self.D.out_adj[u]:
            self.cnt[w][i] -= 1
            self.cnt[w][j] += 1
        for w in self.D.in_adj[u]:
            self.cnt[w][i] -= 1
            self.cnt[w][j] += 1
        self.moves += 1

    def f2(self) -> int:
        twice = sum(self.caps[i] for i in self.class_of)
        twice += sum(1 for u, v in self.D.edges() if self.class_of[u] != self.class_of[v])
        return twice

    def find_improving(self) -> tuple[int, int] | None:
        for u in range(self.D.n):
            i = self.class_of[u]
            for j in range(self.s):
                if j != i and self.gain2(u, j) > 0:
                    return u, j
        return None

    def climb(self, trace: list | None = None, labels: Sequence[int] | None = None) -> int:
        """First-improvement ascent, rescanning from vertex 0 after each move."""
        accepted = 0
        while (step := self.find_improving()) is not None:
            u, j = step
            self.move(u, j)
            accepted += 1
            if trace is not None:
                trace.append(("climb", u, labels[j] if labels else j, HalfInt(self.f2())))
        return accepted


def _canonical_order(T: PartitionTargets) -> list[int]:
    # Larger caps first, original index on ties; makes output follow the targets
    # when they are permuted.
    return sorted(range(T.s), key=lambda i: (-T.targets[i].twice, i))


def _start(D: Digraph, T: PartitionTargets) -> tuple[_Search, list[int]]:
    order = _canonical_order(T)
    caps = [T.targets[i].twice for i in order]
    class_of = [v % T.s for v in range(D.n)]
    return _Search(D, caps, class_of), order


def _finish(search: _Search, order: list[int]) -> Partition:
    return Partition(tuple(order[i] for i in search.class_of), len(order))


def _check_capacity(D: Digraph, T: PartitionTargets) -> None:
    delta = max_avg_degree(D)
    if delta > T.capacity:
        slack = T.capacity - delta
        raise PreconditionError(
            f"max average degree {delta} exceeds {T.capacity} allowed by targets "
            f"{[str(t) for t in T.targets]} (slack {slack})",
            slack=slack,
        )


def lovasz_partition(D: Digraph, T: PartitionTargets, trace: list | None = None) -> Partition:
    """Partition V(D) into ``T.s`` classes whose maximum average degree respects the targets.

    Requires ``max_avg(D) <= (s-1)/2 + sum(targets)``. The result is a local
    maximum of f under single-vertex moves; ``trace``, when given, receives one
    entry per accepted move with the new value of f.
    """
    if T.slack_kind != "lovasz":
        T = PartitionTargets(T.targets, "lovasz")
    _check_capacity(D, T)
    search, order = _start(D, T)
    search.climb(trace, order)
    P = _finish(search, order)
    _assert_caps(D, P, T)
    return P


def _assert_caps(D: Digraph, P: Partition, T: PartitionTargets) -> None:
    for i, members in enumerate(P.classes()):
        member_set = set(members)
        for v in members:
            twice = sum(1 for w in D.out_adj[v] if w in member_set) + sum(
                1 for w in D.in_adj[v] if w in member_set
            )
            if twice > T.targets[i].twice:
                raise AssertionError(
                    f"local optimum violates cap of class {i}: vertex {v} has average degree "
                    f"{HalfInt(twice)} > {T.targets[i]}"
                )


def _brooks_cycle_in(D: Digraph, class_of: Sequence[int], i: int) -> tuple[int, ...] | None:
    members = [v for v, c in enumerate(class_of) if c == i]
    member_set = set(members)
    for comp in weak_components(D, members):
        if len(comp) < 2:
            continue
        if all(
            sum(1 for w in D.out_adj[v] if w in member_set) == 1
            and sum(1 for w in D.in_adj[v] if w in member_set) == 1
            for v in comp
        ):
            cycle = [comp[0]]
            while True:
                nxt = next(w for w in D.out_adj[cycle[-1]] if w in member_set)
                if nxt == comp[0]:
                    break
                cycle.append(nxt)
            return tuple(cycle)
    return None


def find_brooks_cycle(D: Digraph, P: Partition, i: int, T: PartitionTargets) -> tuple[int, ...] | None:
    """A directed cycle forming a whole weak component of class ``i``, or None.

    Class ``i`` must have target exactly 1. The cycle is listed from its
    smallest vertex along the edge direction.
    """
    if not 0 <= i < T.s:
        raise ValueError(f"class index {i} out of range")
    if T.targets[i] != 1:
        raise ValueError(f"Brooks cycles are defined for unit targets; class {i} has {T.targets[i]}")
    return _brooks_cycle_in(D, P.class_of, i)


def check_modlov_input(D: Digraph) -> None:
    digon = find_digon(D)
    if digon is not None:
        raise PreconditionError(f"not oriented: digon at {{{digon[0]},{digon[1]}}}", witness=digon)
    bad = first_violation(D)
    if bad is not None:
        pid, witness = bad
        raise PreconditionError(
            f"contains {pid} at {{{','.join(map(str, witness))}}}", witness=witness
        )


def modlov_partition(
    D: Digraph,
    T: PartitionTargets,
    trace: list | None = None,
    check_input: bool = True,
    move_cap: int | None = None,
) -> Partition:
    """Partition with capped classes in which every unit-target class is acyclic.

    Requires an oriented ``D`` that avoids F1, F2, G1, G2 and satisfies
    ``max_avg(D) <= (s-2)/2 + sum(targets)``. After the f-ascent, each Brooks
    cycle loses its lowest vertex (other than the one just moved) to the
    lowest class that can take it without lowering f, and the ascent is
    re-run. More than ``move_cap`` (default ``4*n*s``) such moves raises
    :class:`IterationCapError`.
    """
    if T.slack_kind != "modlov":
        T = PartitionTargets(T.targets, "modlov")
    if check_input:
        check_modlov_input(D)
    _check_capacity(D, T)
    search, order = _start(D, T)
    search.climb(trace, order)
    unit = [ci for ci, cap in enumerate(search.caps) if cap == 2]
    cap = 4 * D.n * T.s if move_cap is None else move_cap
    moves = 0
    last = None
    while True:
        found = None
        for ci in unit:
            cyc = _brooks_cycle_in(D, search.class_of, ci)
            if cyc is not None:
                found = (ci, cyc)
                break
        if found is None:
            break
        if moves >= cap:
            raise IterationCapError(
                f"Brooks-cycle elimination exceeded {cap} moves; input may contain a forbidden pattern"
            )
        ci, cyc = found
        choice = None
        for v0 in sorted(cyc):
            if v0 == last:
                continue
            row = search.cnt[v0]
            for j in range(search.s):
                if j != ci and row[j] <= search.caps[j]:
                    choice = (v0, j)
                    break
            if choice:
                break
        if choice is None:
            raise AssertionError(f"no admissible move off Brooks cycle {cyc}")
        v0, j = choice
        gain = search.gain2(v0, j)
        assert gain >= 0, "Brooks-cycle move lowered f"
        search.move(v0, j)
        if trace is not None:
            trace.append(("brooks", v0, order[j], HalfInt(search.f2())))
        moves += 1
        last = v0
        search.climb(trace, order)
    log.debug("modlov: %d Brooks-cycle moves", moves)
    P = _finish(search, order)
    _assert_caps(D, P, T)
    return P
