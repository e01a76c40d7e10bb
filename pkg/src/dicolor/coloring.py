"""Greedy, Brooks-type and partition-based (k, m)-degenerate colorings.

Every coloring built here is extended one vertex at a time, and a vertex
only ever takes a color shared by fewer than ``m`` of its already-colored
out-neighbors (or in-neighbors). In any subset of a color class, the vertex
colored last is then deficient, so the class is weakly m-degenerate.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter, deque
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import Digraph, HalfInt, find_digon, induced_subgraph, max_avg_degree, weak_components
from .decomposition import PartitionTargets, check_modlov_input, lovasz_partition, modlov_partition
from .degeneracy import Coloring, peel_vertices, verify_coloring
from .errors import PreconditionError
from .oracle import search_k_coloring

log = logging.getLogger(__name__)

ONE = HalfInt(2)


# --- plans -----------------------------------------------------------------


@dataclass(frozen=True)
class FracDeltaPlan:
    m: int
    delta_bar: HalfInt
    s: int
    r: HalfInt
    targets: tuple[HalfInt, ...]
    bound: int


def fracdelta_plan(delta_bar: HalfInt | int | str, m: int) -> FracDeltaPlan:
    """Split parameters and color bound for the m-degenerate partition pipeline.

    ``s = floor((D + 1/2) / (2m + 1/2))`` parts with cap ``2m``, a remainder
    cap ``r - 1/2`` when ``r >= 1/2``, and bound ``floor((D - s/2) / m) + 1``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    d = HalfInt.of(delta_bar)
    # all in doubled units: (2D + 1) / (4m + 1)
    s = (d.twice + 1) // (4 * m + 1)
    r = HalfInt(d.twice + 1 - s * (4 * m + 1))
    targets = (HalfInt(4 * m),) * s
    if r.twice >= 1:
        targets += (r - HalfInt(1),)
    bound = (d.twice - s) // (2 * m) + 1
    return FracDeltaPlan(m, d, s, r, targets, bound)


@dataclass(frozen=True)
class ImprovedPlan:
    delta_bar: HalfInt
    s: int
    r: HalfInt
    targets: tuple[HalfInt, ...]
    bound: int


def improved_plan(delta_bar: HalfInt | int | str) -> ImprovedPlan:
    d = HalfInt.of(delta_bar)
    s = (d.twice + 2) // 3
    r = HalfInt(d.twice + 2 - 3 * s)
    targets = (ONE,) * s
    if r.twice >= 1:
        targets += (r - HalfInt(1),)
    # floor(2D/3 + 1/2) = floor((4D + 3) / 6) = floor((2 * twice + 3) / 6)
    bound = (2 * d.twice + 3) // 6 + 1
    return ImprovedPlan(d, s, r, targets, bound)


def greedy_bound(delta_bar: HalfInt, m: int) -> int:
    return delta_bar.twice // (2 * m) + 1


# --- vertex-by-vertex extension -------------------------------------------


def _lowest_free(colors: Sequence[int], m: int) -> int:
    counts = Counter(colors)
    c = 0
    while counts[c] >= m:
        c += 1
    return c


def extend_color(
    D: Digraph, colors: Sequence[int], v: int, m: int, limit: int | None = None
) -> int | None:
    """Color for ``v`` given the partial coloring ``colors`` (-1 = uncolored).

    Looks first at whichever side (out or in) has fewer colored neighbors,
    out on ties, and takes the lowest color held by fewer than ``m`` of them.
    With a palette ``limit``, falls back to the other side before giving up.
    """
    outs = [colors[w] for w in D.out_adj[v] if colors[w] >= 0]
    ins = [colors[w] for w in D.in_adj[v] if colors[w] >= 0]
    sides = (outs, ins) if len(outs) <= len(ins) else (ins, outs)
    c = _lowest_free(sides[0], m)
    if limit is None or c < limit:
        return c
    c = _lowest_free(sides[1], m)
    return c if c < limit else None


def greedy_coloring(D: Digraph, m: int, order: Sequence[int] | None = None) -> Coloring:
    """Color vertices in ``order`` (default: by index); uses at most ``floor(D/m) + 1`` colors."""
    if m < 1:
        raise ValueError("m must be positive")
    colors = [-1] * D.n
    for v in range(D.n) if order is None else order:
        colors[v] = extend_color(D, colors, v, m)
    return Coloring(tuple(colors))


# --- bounded coloring --------------------------------------------------------


def _is_weakly_connected(D: Digraph, vertices: set[int]) -> bool:
    if not vertices:
        return True
    return len(weak_components(D, vertices)) == 1


def find_separator(
    D: Digraph, component: Sequence[int], m: int
) -> tuple[int, tuple[int, ...]] | None:
    """A vertex ``u_n`` and ``m+1`` of its out- (or in-) neighbors whose removal keeps the component connected.

    Search order: ``u_n`` by index, out-neighbors before in-neighbors, neighbor
    subsets lexicographically.
    """
    comp = set(component)
    for un in sorted(comp):
        for side in (D.out_adj[un], D.in_adj[un]):
            nbrs = [w for w in side if w in comp]
            for U in itertools.combinations(nbrs, m + 1):
                if _is_weakly_connected(D, comp - set(U)):
                    return un, U
    return None


def _bfs_order(D: Digraph, root: int, vertices: set[int]) -> list[int]:
    seen = {root}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in D.out_adj[v] + D.in_adj[v]:
            if w in vertices and w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


@dataclass
class BoundedReport:
    """Which branch colored each core component (for diagnostics and tests)."""

    peeled: int = 0
    separator: int = 0
    fallback: int = 0


def _color_core_component(
    D: Digraph, comp: list[int], m: int, k: int, colors: list[int], report: BoundedReport
) -> None:
    km = k * m
    comp_set = set(comp)
    regular = all(
        sum(1 for w in D.out_adj[v] if w in comp_set) == km
        and sum(1 for w in D.in_adj[v] if w in comp_set) == km
        for v in comp
    )
    if regular:
        sep = find_separator(D, comp, m)
        if sep is not None:
            un, U = sep
            rest = comp_set - set(U)
            trial = list(colors)
            for u in U:
                trial[u] = 0
            ok = True
            for w in reversed(_bfs_order(D, un, rest)):
                c = extend_color(D, trial, w, m, limit=k)
                if c is None:
                    ok = False
                    break
                trial[w] = c
            if ok:
                for v in comp:
                    colors[v] = trial[v]
                report.separator += 1
                return
            log.warning("separator ordering failed to extend on component of size %d", len(comp))
    sub, verts = induced_subgraph(D, comp)
    order = _bfs_order(sub, 0, set(range(sub.n)))
    found = search_k_coloring(sub, m, k, order)
    if found is None:
        raise RuntimeError(
            f"no ({k},{m})-degenerate coloring of a core component with {sub.n} vertices; "
            "this contradicts the degree bound and indicates a bug"
        )
    for new, old in enumerate(verts):
        colors[old] = found[new]
    report.fallback += 1


def bounded_coloring(
    D: Digraph, m: int, k: int, report: BoundedReport | None = None
) -> Coloring:
    """A (k, m)-degenerate coloring of an oriented ``D`` with ``max_avg(D) <= k*m``.

    Peels at threshold ``k*m``; what survives is ``k*m``-regular. Each weak
    component of that core is colored from a separator (``m+1`` same-colored
    neighbors of a last vertex ``u_n``, the rest in reverse breadth-first
    order from ``u_n``), or by exact search when no separator exists. Peeled
    vertices are then colored in reverse peeling order.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if k < 2:
        raise PreconditionError(f"bounded coloring needs k >= 2, got {k}")
    digon = find_digon(D)
    if digon is not None:
        raise PreconditionError(f"not oriented: digon at {{{digon[0]},{digon[1]}}}", witness=digon)
    delta = max_avg_degree(D)
    if delta > k * m:
        raise PreconditionError(f"max average degree {delta} exceeds k*m = {k * m}")
    report = report if report is not None else BoundedReport()
    colors = [-1] * D.n
    peeled = peel_vertices(D, k * m)
    for comp in weak_components(D, peeled.core):
        _color_core_component(D, comp, m, k, colors, report)
    for v in reversed(peeled.removed):
        c = extend_color(D, colors, v, m, limit=k)
        if c is None:
            raise AssertionError(f"peeled vertex {v} has no free color among {k}")
        colors[v] = c
        report.peeled += 1
    return Coloring(tuple(colors))


# --- pipelines -------------------------------------------------------------


def _merge_parts(D: Digraph, parts: list[tuple[list[int], Coloring]]) -> tuple[Coloring, int]:
    """Stack part colorings on disjoint palettes; returns (compacted coloring, raw palette size)."""
    colors = [-1] * D.n
    offset = 0
    for verts, col in parts:
        for new, old in enumerate(verts):
            colors[old] = offset + col.assignment[new]
        offset += col.num_colors
    return Coloring(tuple(colors)).compacted(), offset


def _require_oriented(D: Digraph) -> None:
    digon = find_digon(D)
    if digon is not None:
        raise PreconditionError(f"not oriented: digon at {{{digon[0]},{digon[1]}}}", witness=digon)


def fracdelta_coloring(D: Digraph, m: int) -> tuple[Coloring, FracDeltaPlan]:
    """Color an oriented ``D`` with ``max_avg(D) >= 2m`` within the plan bound.

    Partitions into ``s`` parts of cap ``2m`` (two colors each, via
    :func:`bounded_coloring`) plus a remainder part colored greedily.
    """
    _require_oriented(D)
    delta = max_avg_degree(D)
    if delta < 2 * m:
        raise PreconditionError(f"max average degree {delta} is below 2m = {2 * m}")
    plan = fracdelta_plan(delta, m)
    P = lovasz_partition(D, PartitionTargets(plan.targets, "lovasz"))
    parts = []
    for i, members in enumerate(P.classes()):
        sub, verts = induced_subgraph(D, members)
        if plan.targets[i] == 2 * m:
            col = bounded_coloring(sub, m, 2)
        else:
            col = greedy_coloring(sub, m)
        parts.append((verts, col))
    coloring, raw = _merge_parts(D, parts)
    if raw > plan.bound:
        raise AssertionError(f"pipeline used {raw} colors, above the bound {plan.bound}")
    return coloring, plan


def improved_acyclic_coloring(D: Digraph) -> tuple[Coloring, ImprovedPlan]:
    """Acyclic coloring of an oriented digraph avoiding F1, F2, G1, G2.

    Uses ``floor(2/3 * D + 1/2) + 1`` colors at most: ``s`` acyclic classes of
    cap 1 plus a greedily colored remainder.
    """
    check_modlov_input(D)
    plan = improved_plan(max_avg_degree(D))
    P = modlov_partition(D, PartitionTargets(plan.targets, "modlov"), check_input=False)
    parts = []
    for i, members in enumerate(P.classes()):
        sub, verts = induced_subgraph(D, members)
        if plan.targets[i] == ONE:
            col = Coloring((0,) * sub.n)
        else:
            col = greedy_coloring(sub, 1)
        parts.append((verts, col))
    coloring, raw = _merge_parts(D, parts)
    if raw > plan.bound:
        raise AssertionError(f"pipeline used {raw} colors, above the bound {plan.bound}")
    return coloring, plan


def componentwise(D: Digraph, color: Callable[[Digraph], Coloring]) -> Coloring:
    """Color each weak component separately on a shared palette."""
    colors = [-1] * D.n
    for comp in weak_components(D):
        sub, verts = induced_subgraph(D, comp)
        col = color(sub)
        for new, old in enumerate(verts):
            colors[old] = col.assignment[new]
    return Coloring(tuple(colors))


def check_coloring(D: Digraph, c: Coloring, m: int) -> None:
    verdict = verify_coloring(D, c, m)
    if not verdict:
        raise AssertionError(verdict.describe())
