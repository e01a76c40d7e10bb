"""Weak m-degeneracy by peeling, acyclicity, and coloring validation."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .core import Digraph

Side = Literal["out", "in"]


@dataclass(frozen=True)
class Coloring:
    """Color index per vertex. ``num_colors`` is one more than the largest color."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.assignment):
            raise ValueError("colors must be non-negative")

    @classmethod
    def of(cls, assignment: Iterable[int]) -> Coloring:
        return cls(tuple(assignment))

    @property
    def num_colors(self) -> int:
        return max(self.assignment, default=-1) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    def compacted(self) -> Coloring:
        """Renumber colors by order of first appearance."""
        remap: dict[int, int] = {}
        for c in self.assignment:
            remap.setdefault(c, len(remap))
        return Coloring(tuple(remap[c] for c in self.assignment))

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass(frozen=True)
class PeelResult:
    order: tuple[tuple[int, Side], ...]
    core: tuple[int, ...]

    @property
    def removed(self) -> list[int]:
        return [v for v, _ in self.order]


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def peel_vertices(D: Digraph, m: int, vertices: Iterable[int] | None = None) -> PeelResult:
    """Peel the subgraph induced on ``vertices`` (default: all of D).

    Repeatedly deletes the lowest-index vertex whose out- or in-degree in the
    surviving subgraph is below ``m``.
    """
    _check_m(m)
    alive = set(range(D.n)) if vertices is None else set(vertices)
    dout = {v: sum(1 for w in D.out_adj[v] if w in alive) for v in alive}
    din = {v: sum(1 for w in D.in_adj[v] if w in alive) for v in alive}
    heap = [v for v in alive if dout[v] < m or din[v] < m]
    heapq.heapify(heap)
    queued = set(heap)
    order: list[tuple[int, Side]] = []
    while heap:
        v = heapq.heappop(heap)
        side: Side = "out" if dout[v] < m else "in"
        order.append((v, side))
        alive.discard(v)
        for w in D.in_adj[v]:
            if w in alive:
                dout[w] -= 1
                if dout[w] < m and w not in queued:
                    queued.add(w)
                    heapq.heappush(heap, w)
        for w in D.out_adj[v]:
            if w in alive:
                din[w] -= 1
                if din[w] < m and w not in queued:
                    queued.add(w)
                    heapq.heappush(heap, w)
    return PeelResult(tuple(order), tuple(sorted(alive)))


def peel(D: Digraph, m: int) -> PeelResult:
    return peel_vertices(D, m)


def is_weakly_m_degenerate(D: Digraph, m: int, vertices: Iterable[int] | None = None) -> bool:
    return not peel_vertices(D, m, vertices).core


def has_directed_cycle(D: Digraph, vertices: Iterable[int] | None = None) -> bool:
    """Iterative three-color DFS over the subgraph induced on ``vertices``."""
    alive = set(range(D.n)) if vertices is None else set(vertices)
    WHITE, GREY, BLACK = 0, 1, 2
    state = dict.fromkeys(alive, WHITE)
    for root in sorted(alive):
        if state[root] != WHITE:
            continue
        state[root] = GREY
        stack = [(root, iter(D.out_adj[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in alive:
                    continue
                if state[w] == GREY:
                    return True
                if state[w] == WHITE:
                    state[w] = GREY
                    stack.append((w, iter(D.out_adj[w])))
                    break
            else:
                state[v] = BLACK
                stack.pop()
    return False


def is_acyclic(D: Digraph, vertices: Iterable[int] | None = None) -> bool:
    vs = None if vertices is None else list(vertices)
    by_peel = is_weakly_m_degenerate(D, 1, vs)
    by_dfs = not has_directed_cycle(D, vs)
    if by_peel != by_dfs:
        raise AssertionError(f"peeling ({by_peel}) and DFS ({by_dfs}) disagree on acyclicity")
    return by_peel


@dataclass(frozen=True)
class Verdict:
    ok: bool
    bad_class: int | None = None
    core: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "verified=true"
        core = ",".join(map(str, self.core))
        return f"verified=false class={self.bad_class} core={{{core}}}"


def verify_coloring(D: Digraph, c: Coloring | Sequence[int], m: int) -> Verdict:
    """Check that every color class induces a weakly m-degenerate subgraph.

    On failure the verdict names the first bad class and its nonempty core.
    """
    _check_m(m)
    assignment = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(assignment) != D.n:
        raise ValueError(f"coloring has {len(assignment)} entries for {D.n} vertices")
    classes: dict[int, list[int]] = {}
    for v, col in enumerate(assignment):
        classes.setdefault(col, []).append(v)
    for col in sorted(classes):
        core = peel_vertices(D, m, classes[col]).core
        if core:
            return Verdict(False, col, core)
    return Verdict(True)
