"""Constructors for the named graph families used as fixtures and seeds."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InputError
from .graph import Graph, from_edge_list


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 joined to all others."""
    if n < 1:
        raise InputError("star needs n >= 1")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to the cycle 1..n-1; n counts all vertices."""
    if n < 5:
        raise InputError("wheel needs n >= 5")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    hub = [(0, i) for i in range(1, n)]
    return from_edge_list(n, rim + hub)


def complete_split(n: int, k: int) -> Graph:
    """k universal clique vertices 0..k-1 plus an independent set of n-k."""
    if not 1 <= k <= n - 1:
        raise InputError(f"complete split graph needs 1 <= k <= n-1, got k={k}, n={n}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, n)]
    return from_edge_list(n, edges)


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    if len(part_sizes) < 2:
        raise InputError("complete multipartite graph needs at least two parts")
    if any(s < 1 for s in part_sizes):
        raise InputError("part sizes must be positive")
    bounds = [0]
    for s in part_sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for p in range(len(part_sizes)):
        for q in range(p + 1, len(part_sizes)):
            edges.extend(
                (u, v)
                for u in range(bounds[p], bounds[p + 1])
                for v in range(bounds[q], bounds[q + 1])
            )
    return from_edge_list(n, edges)


_DIAMOND_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]

_PRISM_EDGES = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]

# Mycielski construction over the 5-cycle: cycle vertices 0..4, shadow
# vertices 5..9 (5+i adjacent to the cycle neighbours of i), apex 10.
_GROTZSCH_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i + 4) % 5) for i in range(5)]
    + [(10, 5 + i) for i in range(5)]
)

_NAMED = {
    "diamond": (4, _DIAMOND_EDGES),
    "trigonal_prism": (6, _PRISM_EDGES),
    "grotzsch": (11, _GROTZSCH_EDGES),
}


def named(name: str) -> Graph:
    try:
        n, edges = _NAMED[name]
    except KeyError:
        raise InputError(
            f"unknown named graph {name!r}; choose from {sorted(_NAMED)}"
        ) from None
    return from_edge_list(n, edges)


def subdivide_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Replace each listed edge uv by u-w-v with a fresh degree-2 vertex w."""
    chosen = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise InputError(f"edge ({u},{v}) not present")
        chosen.append((min(u, v), max(u, v)))
    if len(set(chosen)) != len(chosen):
        raise InputError("duplicate edges in subdivision list")
    drop = set(chosen)
    out = [(u, v) for u, v in g.edges() if (u, v) not in drop]
    w = g.n
    for u, v in chosen:
        out.extend([(u, w), (w, v)])
        w += 1
    return from_edge_list(g.n + len(chosen), out)


def degree2_inflate(h: Graph, count: int) -> Graph:
    """Insert ``count`` degree-2 vertices one at a time by edge subdivision.

    Each step subdivides the lexicographically smallest edge, which makes the
    result deterministic.
    """
    from .graph import is_connected

    if count < 0:
        raise InputError("count must be non-negative")
    if not is_connected(h):
        raise InputError("inflation needs a connected graph")
    g = h
    for _ in range(count):
        g = subdivide_edges(g, [min(g.edges())])
    return g


def recognize(g: Graph) -> str | None:
    """Name the graph when it belongs to a small standard family."""
    from .graph import classify, degree_stats

    st = degree_stats(g)
    n, m = g.n, st.edge_count
    degs = sorted(st.degrees)
    if m == n * (n - 1) // 2:
        return f"K_{n}"
    if m == 0:
        return f"empty({n})"
    cls = classify(g, st)
    if cls.is_connected:
        if m == n - 1 and st.max_degree <= 2:
            return f"P_{n}"
        if m == n and st.max_degree == 2:
            return f"C_{n}"
        if m == n - 1 and st.max_degree == n - 1:
            return f"K_{{1,{n - 1}}}"
        k = cls.complete_split_k
        if k is not None and k < n - 1:
            return f"CS({n},{k})"
        if (
            n >= 5
            and m == 2 * (n - 1)
            and degs == [3] * (n - 1) + [n - 1]
        ):
            hub = max(range(n), key=g.degree)
            rim_mask = ((1 << n) - 1) ^ (1 << hub)
            # the rim must induce one cycle: 2-regular and connected
            seen = rim_mask & -rim_mask
            frontier = seen
            while frontier:
                reach = 0
                mask = frontier
                while mask:
                    low = mask & -mask
                    reach |= g.rows[low.bit_length() - 1] & rim_mask
                    mask ^= low
                frontier = reach & ~seen
                seen |= frontier
            if seen == rim_mask:
                return f"W_{n}"
    return None
