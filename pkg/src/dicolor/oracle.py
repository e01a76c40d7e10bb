"""Brute-force ground truth for small digraphs.

Nothing here shares code with the peeling-based fast paths except
:func:`verify_coloring`, which is only used to re-check witnesses.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Digraph, from_edge_list, induced_subgraph
from .degeneracy import Coloring, verify_coloring
from .errors import SizeCapError

DEFAULT_MAX_N = 12


def _masks(D: Digraph) -> tuple[list[int], list[int]]:
    out = [sum(1 << w for w in D.out_adj[v]) for v in range(D.n)]
    inn = [sum(1 << w for w in D.in_adj[v]) for v in range(D.n)]
    return out, inn


def _degenerate_mask(S: int, out: Sequence[int], inn: Sequence[int], m: int) -> bool:
    """Definitional check: every nonempty subset of ``S`` has a deficient vertex."""
    T = S
    while T:
        ok = False
        rest = T
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if (out[v] & T).bit_count() < m or (inn[v] & T).bit_count() < m:
                ok = True
                break
            rest ^= low
        if not ok:
            return False
        T = (T - 1) & S
    return True


def weak_degeneracy_bruteforce(D: Digraph, m: int, max_n: int = 20) -> bool:
    """Scan all 2^n - 1 nonempty vertex subsets for one without a deficient vertex."""
    if m < 1:
        raise ValueError("m must be positive")
    if D.n > max_n:
        raise SizeCapError(f"{D.n} vertices exceeds the subset-scan cap of {max_n}")
    out, inn = _masks(D)
    return _degenerate_mask((1 << D.n) - 1, out, inn, m)


@dataclass(frozen=True)
class ExactResult:
    chi: int
    witness: Coloring
    certificate_checked: bool


def _class_is_degenerate(members: int, out: Sequence[int], inn: Sequence[int], m: int) -> bool:
    # peel the bitmask class; independent of degeneracy.peel_vertices
    alive = members
    changed = True
    while changed and alive:
        changed = False
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if (out[v] & alive).bit_count() < m or (inn[v] & alive).bit_count() < m:
                alive &= ~low
                changed = True
            rest ^= low
    return alive == 0


def search_k_coloring(
    D: Digraph, m: int, k: int, order: Sequence[int] | None = None
) -> list[int] | None:
    """Backtracking search for a (k, m)-degenerate coloring.

    Vertices are assigned in ``order`` (default: by index), colors in index
    order, and a fresh color may only be the next unused one. Each partial
    class must stay weakly m-degenerate, which is hereditary, so pruning on
    it is sound.
    """
    n = D.n
    if n == 0:
        return []
    if k < 1:
        return None
    order = list(range(n)) if order is None else list(order)
    out, inn = _masks(D)
    classes = [0] * k
    colors = [-1] * n

    def rec(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        bit = 1 << v
        for c in range(min(k, used + 1)):
            trial = classes[c] | bit
            if _class_is_degenerate(trial, out, inn, m):
                classes[c] = trial
                colors[v] = c
                if rec(idx + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~bit
                colors[v] = -1
        return False

    limit = sys.getrecursionlimit()
    if n + 100 > limit:
        sys.setrecursionlimit(n + 100)
    try:
        return colors if rec(0, 0) else None
    finally:
        sys.setrecursionlimit(limit)


def exact_chi_m(D: Digraph, m: int, max_n: int = DEFAULT_MAX_N) -> ExactResult:
    """Exact m-degenerate chromatic number with a witness coloring.

    The empty digraph gets ``chi = 0``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if D.n > max_n:
        raise SizeCapError(f"{D.n} vertices exceeds the exact-search cap of {max_n}")
    if D.n == 0:
        return ExactResult(0, Coloring(()), True)
    k = 1
    while True:
        found = search_k_coloring(D, m, k)
        if found is not None:
            witness = Coloring(tuple(found))
            checked = bool(verify_coloring(D, witness, m)) and witness.num_colors == k
            return ExactResult(k, witness, checked)
        k += 1


def is_km_critical(D: Digraph, k: int, m: int, max_n: int = DEFAULT_MAX_N) -> bool:
    if exact_chi_m(D, m, max_n).chi != k:
        return False
    for v in range(D.n):
        sub, _ = induced_subgraph(D, [w for w in range(D.n) if w != v])
        if exact_chi_m(sub, m, max_n).chi >= k:
            return False
    return True


# --- vectorized sweep over every digraph on a handful of vertices ----------


@dataclass
class SmallDigraphTable:
    """Exact data for all ``4**C(n,2)`` labelled digraphs on ``n`` vertices.

    Graph ``g`` has, for the p-th pair ``(i, j)`` with ``i < j``, the edge
    ``i->j`` iff bit ``2p`` of ``g`` is set and ``j->i`` iff bit ``2p+1`` is.
    """

    n: int
    m: int
    codes: np.ndarray  # (N,) graph codes, see class docstring
    out: np.ndarray  # (N, n) out-neighbor bitmasks
    inn: np.ndarray  # (N, n) in-neighbor bitmasks
    chi: np.ndarray  # (2**n, N) chi_m of the subgraph induced on each vertex subset

    @property
    def count(self) -> int:
        return self.out.shape[0]

    def chi_full(self) -> np.ndarray:
        return self.chi[(1 << self.n) - 1]

    def chi_minus(self, v: int) -> np.ndarray:
        return self.chi[((1 << self.n) - 1) & ~(1 << v)]

    def digraph(self, row: int) -> Digraph:
        g = int(self.codes[row])
        edges = []
        for p, (i, j) in enumerate(itertools.combinations(range(self.n), 2)):
            state = (g >> (2 * p)) & 3
            if state & 1:
                edges.append((i, j))
            if state & 2:
                edges.append((j, i))
        return from_edge_list(self.n, edges)


def all_digraphs_chi_table(n: int, m: int, oriented_only: bool = False) -> SmallDigraphTable:
    """Subset dynamic program for chi_m over every digraph on ``n <= 5`` vertices."""
    if n > 5:
        raise SizeCapError("the exhaustive table is limited to n <= 5")
    pairs = list(itertools.combinations(range(n), 2))
    g = np.arange(4 ** len(pairs), dtype=np.int64)
    if oriented_only:
        states = (g[:, None] >> (2 * np.arange(len(pairs)))) & 3
        g = g[(states != 3).all(axis=1)] if pairs else g
    N = g.shape[0]
    out = np.zeros((N, n), dtype=np.int64)
    inn = np.zeros((N, n), dtype=np.int64)
    for p, (i, j) in enumerate(pairs):
        state = (g >> (2 * p)) & 3
        fwd = (state & 1).astype(bool)
        bwd = (state & 2).astype(bool)
        out[fwd, i] |= 1 << j
        inn[fwd, j] |= 1 << i
        out[bwd, j] |= 1 << i
        inn[bwd, i] |= 1 << j
    popcount = np.array([bin(x).count("1") for x in range(1 << n)], dtype=np.int64)

    full = 1 << n
    degenerate = np.zeros((full, N), dtype=bool)
    for S in range(full):
        alive = np.full(N, S, dtype=np.int64)
        for _ in range(n):
            for v in range(n):
                if not (S >> v) & 1:
                    continue
                present = ((alive >> v) & 1).astype(bool)
                deficient = (popcount[out[:, v] & alive] < m) | (popcount[inn[:, v] & alive] < m)
                alive = np.where(present & deficient, alive & ~(1 << v), alive)
        degenerate[S] = alive == 0

    big = np.int8(127)
    chi = np.full((full, N), big, dtype=np.int8)
    chi[0] = 0
    for S in range(1, full):
        low = S & -S
        best = np.full(N, big, dtype=np.int8)
        T = S
        while T:
            if T & low:
                cand = np.where(degenerate[T], chi[S ^ T] + 1, big).astype(np.int8)
                best = np.minimum(best, cand)
            T = (T - 1) & S
        chi[S] = best
    return SmallDigraphTable(n, m, g, out, inn, chi)
