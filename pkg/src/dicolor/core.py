"""Finite digraphs on dense vertex indices, with exact degree statistics.

Vertices are ``0..n-1``. Adjacency is stored twice (out and in) as sorted
tuples so that every algorithm can break ties by lowest index without
re-sorting. Digons are representable; self-loops and parallel edges are not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence


class DigraphError(ValueError):
    """Base class for malformed edge lists."""


class SelfLoopError(DigraphError):
    pass


class VertexRangeError(DigraphError):
    pass


class DuplicateEdgeError(DigraphError):
    pass


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An exact multiple of 1/2, stored as twice its value."""

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise TypeError(f"HalfInt needs an int, got {self.twice!r}")

    @classmethod
    def of(cls, value: int | Fraction | HalfInt | str) -> HalfInt:
        """Convert an int, a Fraction with denominator 1 or 2, or text like ``"5/2"``."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            return cls(int(doubled))
        raise TypeError(f"cannot make a HalfInt from {value!r}")

    @classmethod
    def half_of(cls, k: int) -> HalfInt:
        return cls(k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def floor(self) -> int:
        return self.twice // 2

    def ceil(self) -> int:
        return -((-self.twice) // 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def _coerce(self, other: object) -> HalfInt | None:
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(2 * other)
        return None

    def __add__(self, other: HalfInt | int) -> HalfInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt(self.twice + o.twice)

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt(self.twice - o.twice)

    def __rsub__(self, other: int) -> HalfInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return HalfInt(o.twice - self.twice)

    def __neg__(self) -> HalfInt:
        return HalfInt(-self.twice)

    def __mul__(self, k: int) -> HalfInt:
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        return HalfInt(self.twice * k)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Fraction):
                return self.as_fraction() == other
            return NotImplemented
        return self.twice == o.twice

    def __lt__(self, other: HalfInt | int) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Fraction):
                return self.as_fraction() < other
            return NotImplemented
        return self.twice < o.twice

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"

    def to_json(self) -> dict[str, int]:
        return {"numerator": self.twice, "denominator": 2}


ZERO = HalfInt(0)
HALF = HalfInt(1)
ONE = HalfInt(2)


class Digraph:
    """Immutable directed graph on vertices ``0..n-1``.

    Build instances with :func:`from_edge_list` (or the generators); the
    constructor trusts its arguments.
    """

    __slots__ = ("n", "out_adj", "in_adj", "_out_sets", "_in_sets")

    def __init__(self, n: int, out_adj: Sequence[Sequence[int]], in_adj: Sequence[Sequence[int]]):
        self.n = n
        self.out_adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in out_adj)
        self.in_adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in in_adj)
        self._out_sets = tuple(frozenset(a) for a in self.out_adj)
        self._in_sets = tuple(frozenset(a) for a in self.in_adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._out_sets[u]

    def out_set(self, v: int) -> frozenset[int]:
        return self._out_sets[v]

    def in_set(self, v: int) -> frozenset[int]:
        return self._in_sets[v]

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges sorted by (tail, head)."""
        return [(u, v) for u in range(self.n) for v in self.out_adj[u]]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.out_adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._out_sets[v] | self._in_sets[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self) -> int:
        return hash((self.n, self.out_adj))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={self.edges()})"

    def check_invariants(self) -> None:
        """Full scan of the representation invariants; raises AssertionError."""
        assert len(self.out_adj) == self.n and len(self.in_adj) == self.n
        for v in range(self.n):
            outs = self.out_adj[v]
            assert v not in outs, f"self-loop at {v}"
            assert all(a < b for a, b in zip(outs, outs[1:])), f"out_adj[{v}] not strictly increasing"
            ins = self.in_adj[v]
            assert all(a < b for a, b in zip(ins, ins[1:])), f"in_adj[{v}] not strictly increasing"
            for w in outs:
                assert v in self._in_sets[w], f"mirror broken for {v}->{w}"
            for w in ins:
                assert v in self._out_sets[w], f"mirror broken for {w}->{v}"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph, rejecting self-loops, out-of-range ends and duplicates."""
    if n < 0:
        raise VertexRangeError(f"vertex count must be non-negative, got {n}")
    outs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in outs[u]:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
        outs[u].add(v)
    ins: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        for v in outs[u]:
            ins[v].append(u)
    return Digraph(n, [sorted(o) for o in outs], [sorted(i) for i in ins])


@dataclass(frozen=True)
class DegreeStats:
    max_avg: HalfInt
    max_geom_sq: int
    per_vertex: tuple[tuple[int, int], ...]

    @property
    def max_geom(self) -> float:
        """Floating rendering of the maximum geometric mean, for display only."""
        return math.sqrt(self.max_geom_sq)


def degree_stats(D: Digraph) -> DegreeStats:
    per_vertex = tuple((D.out_degree(v), D.in_degree(v)) for v in range(D.n))
    max_twice = max((a + b for a, b in per_vertex), default=0)
    max_geom_sq = max((a * b for a, b in per_vertex), default=0)
    return DegreeStats(HalfInt(max_twice), max_geom_sq, per_vertex)


def max_avg_degree(D: Digraph) -> HalfInt:
    return HalfInt(max((D.out_degree(v) + D.in_degree(v) for v in range(D.n)), default=0))


def is_oriented(D: Digraph) -> bool:
    return not any(u in D.out_set(v) for u in range(D.n) for v in D.out_adj[u])


def find_digon(D: Digraph) -> tuple[int, int] | None:
    for u in range(D.n):
        for v in D.out_adj[u]:
            if u < v and u in D.out_set(v):
                return (u, v)
    return None


def induced_subgraph(D: Digraph, S: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Subgraph induced on ``S``.

    Returns the subgraph and ``vertices`` with ``vertices[new] == old``; the
    relabeling preserves the order of the original indices.
    """
    vertices = sorted(set(S))
    for v in vertices:
        if not 0 <= v < D.n:
            raise VertexRangeError(f"vertex {v} outside 0..{D.n - 1}")
    index = {old: new for new, old in enumerate(vertices)}
    outs = [[index[w] for w in D.out_adj[v] if w in index] for v in vertices]
    ins = [[index[w] for w in D.in_adj[v] if w in index] for v in vertices]
    return Digraph(len(vertices), outs, ins), vertices


def weak_components(D: Digraph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest member.

    With ``vertices`` given, works on the subgraph they induce (original labels).
    """
    if vertices is None:
        alive = set(range(D.n))
    else:
        alive = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in D.out_adj[v] + D.in_adj[v]:
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def disjoint_union(*graphs: Digraph) -> Digraph:
    """Disjoint union; the vertices of later graphs are shifted past earlier ones."""
    edges = []
    offset = 0
    for G in graphs:
        edges.extend((u + offset, v + offset) for u, v in G.edges())
        offset += G.n
    return from_edge_list(offset, edges)


def relabel(D: Digraph, perm: Sequence[int]) -> Digraph:
    """Apply the vertex bijection ``v -> perm[v]``."""
    return from_edge_list(D.n, [(perm[u], perm[v]) for u, v in D.edges()])
