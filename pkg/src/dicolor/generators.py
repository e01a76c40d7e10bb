"""Seeded instance families.

All randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with the given integer, consumed in the order documented on each
function. Same parameters and seed give the same edge list on any CPython.
"""

from __future__ import annotations

import random

from .core import Digraph, HalfInt, disjoint_union, from_edge_list

MAX_REGULAR_RETRIES = 200


def _rng(seed: int) -> random.Random:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return random.Random(seed)


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError(f"a directed cycle needs n >= 2, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    if n < 1:
        raise ValueError("n must be positive")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def empty_digraph(n: int) -> Digraph:
    return from_edge_list(n, [])


def rotational_tournament(n: int) -> Digraph:
    """Vertex ``i`` beats ``i+1, ..., i+(n-1)/2`` modulo ``n``."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"rotational tournaments need odd n, got {n}")
    half = (n - 1) // 2
    return from_edge_list(n, [(i, (i + d) % n) for i in range(n) for d in range(1, half + 1)])


def random_oriented(n: int, max_avg: HalfInt | int | str, seed: int) -> Digraph:
    """Random oriented graph with maximum average degree at most ``max_avg``.

    Unordered pairs are shuffled, then each is oriented by a coin flip and
    kept only while both endpoints stay within total degree ``2 * max_avg``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    cap = HalfInt.of(max_avg).twice
    if cap < 0:
        raise ValueError("max_avg must be non-negative")
    rng = _rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        flip = rng.random() < 0.5
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            edges.append((v, u) if flip else (u, v))
    return from_edge_list(n, edges)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair ``u != v`` is an edge independently with probability ``p``."""
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = _rng(seed)
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return from_edge_list(n, edges)


def random_tournament(n: int, seed: int) -> Digraph:
    rng = _rng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return from_edge_list(n, edges)


def random_functional(n: int, seed: int) -> Digraph:
    """Every vertex gets exactly one out-neighbor, with no digons.

    Vertices are processed by index; vertex ``v`` picks uniformly among the
    vertices other than itself that do not already point at ``v``. If that
    leaves nothing (every other vertex points at ``v``), the whole draw is
    repeated from the same generator.
    """
    if n < 3:
        raise ValueError(f"an oriented functional digraph needs n >= 3, got {n}")
    rng = _rng(seed)
    while True:
        target = [-1] * n
        for v in range(n):
            choices = [u for u in range(n) if u != v and target[u] != v]
            if not choices:
                break
            target[v] = rng.choice(choices)
        else:
            return from_edge_list(n, [(v, target[v]) for v in range(n)])


def cycle_union(lengths: list[int]) -> Digraph:
    return disjoint_union(*(directed_cycle(k) for k in lengths))


def random_cycle_union(n: int, seed: int, min_len: int = 3, max_len: int = 8) -> Digraph:
    """Disjoint directed cycles whose lengths are drawn until they fill ``n`` vertices."""
    if n < min_len:
        raise ValueError(f"need n >= {min_len}")
    rng = _rng(seed)
    lengths = []
    left = n
    while left >= min_len:
        k = rng.randint(min_len, min(max_len, left))
        if 0 < left - k < min_len:
            k = left
        lengths.append(k)
        left -= k
    return cycle_union(lengths)


def random_regular_digraph(n: int, d: int, seed: int, retries: int = MAX_REGULAR_RETRIES) -> Digraph:
    """Union of ``d`` random permutation digraphs: in- and out-degree ``d`` everywhere.

    Each permutation is drawn with ``shuffle`` and then repaired in passes:
    every vertex whose image would give a self-loop, a repeated edge or a
    digon swaps its image with that of a uniformly drawn vertex. Raises
    RuntimeError if a permutation is still bad after ``retries`` passes.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if d and 2 * d > n - 1:
        raise ValueError(f"an oriented {d}-regular digraph needs n >= 2d+1, got n={n}")
    rng = _rng(seed)
    out: list[set[int]] = [set() for _ in range(n)]

    def bad(perm: list[int], v: int) -> bool:
        w = perm[v]
        return w == v or w in out[v] or v in out[w] or perm[w] == v

    for layer in range(d):
        perm = list(range(n))
        rng.shuffle(perm)
        for _ in range(retries):
            conflicts = [v for v in range(n) if bad(perm, v)]
            if not conflicts:
                break
            for v in conflicts:
                j = rng.randrange(n)
                perm[v], perm[j] = perm[j], perm[v]
        else:
            raise RuntimeError(
                f"permutation {layer} of a {d}-regular digraph on {n} vertices "
                f"still conflicting after {retries} repair passes"
            )
        for v in range(n):
            out[v].add(perm[v])
    return from_edge_list(n, [(v, w) for v in range(n) for w in out[v]])


FAMILIES = {
    "cycle": "cycle N",
    "path": "path N",
    "empty": "empty N",
    "tournament": "tournament N (odd)",
    "oriented": "oriented N MAXAVG",
    "functional": "functional N",
    "cycles": "cycles N",
    "regular": "regular N D",
    "random": "random N P",
}


def generate(family: str, params: list[str], seed: int = 0) -> Digraph:
    """Dispatch used by the command line ``gen`` subcommand."""
    try:
        if family == "cycle":
            (n,) = params
            return directed_cycle(int(n))
        if family == "path":
            (n,) = params
            return directed_path(int(n))
        if family == "empty":
            (n,) = params
            return empty_digraph(int(n))
        if family == "tournament":
            (n,) = params
            return rotational_tournament(int(n))
        if family == "oriented":
            n, avg = params
            return random_oriented(int(n), HalfInt.of(avg), seed)
        if family == "functional":
            (n,) = params
            return random_functional(int(n), seed)
        if family == "cycles":
            (n,) = params
            return random_cycle_union(int(n), seed)
        if family == "regular":
            n, d = params
            return random_regular_digraph(int(n), int(d), seed)
        if family == "random":
            n, p = params
            return random_digraph(int(n), float(p), seed)
    except ValueError as exc:
        if "unpack" in str(exc):
            raise ValueError(f"usage: gen {FAMILIES[family]}") from None
        raise
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
