"""Induced copies of the four forbidden 4-vertex digraphs F1, F2, G1, G2.

Vertex names follow the drawing: ``a`` bottom-left, ``b`` bottom-right,
``c`` top-right, ``d`` top-left, encoded as 0, 1, 2, 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .core import Digraph

A, B, C, D_ = 0, 1, 2, 3

_F1 = ((A, B), (B, C), (A, D_), (D_, C))


@dataclass(frozen=True)
class Pattern:
    id: str
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def orbit(self) -> frozenset[int]:
        """Adjacency masks of every relabeling of the pattern onto 4 slots."""
        masks = set()
        for perm in itertools.permutations(range(4)):
            masks.add(_mask((perm[u], perm[v]) for u, v in self.edges))
        return frozenset(masks)

    @cached_property
    def canonical(self) -> int:
        return min(self.orbit)

    def out_degrees(self) -> list[int]:
        deg = [0] * 4
        for u, _ in self.edges:
            deg[u] += 1
        return deg


def _bit(u: int, v: int) -> int:
    return 1 << (4 * u + v)


def _mask(edges) -> int:
    m = 0
    for u, v in edges:
        m |= _bit(u, v)
    return m


F1 = Pattern("F1", _F1)
F2 = Pattern("F2", _F1 + ((B, D_),))
G1 = Pattern("G1", _F1 + ((C, A),))
G2 = Pattern("G2", _F1 + ((B, D_), (C, A)))

PATTERNS = {p.id: p for p in (F1, F2, G1, G2)}


def subset_mask(D: Digraph, S: tuple[int, int, int, int]) -> int:
    """Adjacency mask of the subgraph induced on the ordered 4-tuple ``S``."""
    m = 0
    for i, u in enumerate(S):
        outs = D.out_set(u)
        for j, v in enumerate(S):
            if i != j and v in outs:
                m |= _bit(i, j)
    return m


def _candidates(D: Digraph):
    # Every pattern has a->b, a->d, b->c, d->c, so any induced copy shows up here.
    for a in range(D.n):
        outs = D.out_adj[a]
        for b, d in itertools.combinations(outs, 2):
            for c in D.out_set(b) & D.out_set(d):
                if c != a:
                    yield tuple(sorted((a, b, c, d)))


def contains_induced(D: Digraph, P: Pattern) -> tuple[int, int, int, int] | None:
    """Lexicographically first 4-subset inducing a copy of ``P``, or None."""
    best = None
    for S in set(_candidates(D)):
        if (best is None or S < best) and subset_mask(D, S) in P.orbit:
            best = S
    return best


def contains_induced_bruteforce(D: Digraph, P: Pattern) -> tuple[int, int, int, int] | None:
    """Scan all C(n, 4) subsets in lexicographic order."""
    for S in itertools.combinations(range(D.n), 4):
        if subset_mask(D, S) in P.orbit:
            return S
    return None


def first_violation(D: Digraph, ids=("F1", "F2", "G1", "G2")) -> tuple[str, tuple[int, ...]] | None:
    for pid in ids:
        w = contains_induced(D, PATTERNS[pid])
        if w is not None:
            return pid, w
    return None


def avoids_F(D: Digraph) -> bool:
    return first_violation(D, ("F1", "F2")) is None


def avoids_G(D: Digraph) -> bool:
    return first_violation(D, ("G1", "G2")) is None
