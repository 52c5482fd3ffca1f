"""Canonical labelling for small graphs.

Two graphs receive the same canonical form exactly when they are isomorphic.
The approach is classic: refine an initial degree colouring until stable
(each colour key is an isomorphism invariant, so colour classes are unions
of automorphism orbits), then search over colour-respecting vertex orders
for the one that maximises the adjacency bit string, pruning orders whose
prefix already compares worse.  This is exact for any graph; the size cap
only bounds the worst-case search.
"""

from __future__ import annotations

from .errors import CapabilityError
from .graph import Graph

CANONICAL_CAP = 12

Rows = tuple[int, ...]


def _stable_colors(rows: Rows, n: int) -> list[int]:
    """Iteratively refine colours by multisets of neighbour colours."""
    nbrs = []
    for v in range(n):
        mask = rows[v]
        a = []
        while mask:
            low = mask & -mask
            a.append(low.bit_length() - 1)
            mask ^= low
        nbrs.append(a)
    colors = [len(a) for a in nbrs]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
            for v in range(n)
        ]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _search_order(rows: Rows, n: int, colors: list[int]) -> list[int]:
    """Branch-and-bound for the colour-respecting order with maximal code.

    ``cur[i]`` holds vertex i's adjacency bits towards the already placed
    vertices, packed into an int (earlier position = higher bit).  Orders are
    compared lexicographically on that sequence; only orders assigning each
    position a vertex of the position's colour are considered, which is sound
    because no isomorphism maps vertices of different stable colours onto
    each other.  High colours (denser vertices) are placed first so edge bits
    appear early and prefixes diverge quickly.

    Tie cutting: when two tied candidates are twins (their neighbourhoods
    differ at most in each other), swapping them is an automorphism fixing
    everything else, so only one branch is explored.
    """
    template = sorted(range(n), key=colors.__getitem__, reverse=True)
    pos_color = [colors[v] for v in template]
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    used = [False] * n
    placed: list[int] = []
    cur = [0] * n
    best: list[int] | None = None
    best_order: list[int] | None = None
    gen = 0

    def extend(i: int, tight: bool) -> None:
        nonlocal best, best_order, gen
        if i == n:
            if not tight:
                best = cur[:]
                best_order = placed[:]
                gen += 1
            return
        scored = []
        for v in by_color[pos_color[i]]:
            if used[v]:
                continue
            bits = 0
            rv = rows[v]
            for u in placed:
                bits = bits << 1 | (rv >> u & 1)
            scored.append((bits, v))
        scored.sort(reverse=True)
        tried: list[tuple[int, int]] = []
        for bits, v in scored:
            if tight and best is not None:
                if bits < best[i]:
                    break  # descending order: the rest are worse too
                child_tight = bits == best[i]
            else:
                child_tight = False
            rv = rows[v]
            vbit = 1 << v
            if any(
                b == bits and not (rows[u] ^ rv) & ~(1 << u | vbit)
                for b, u in tried
            ):
                continue
            tried.append((bits, v))
            cur[i] = bits
            used[v] = True
            placed.append(v)
            before = gen
            extend(i + 1, child_tight)
            placed.pop()
            used[v] = False
            if gen != before:
                # new best came through this prefix, so it now ties it
                tight = True

    extend(0, best is not None)
    assert best_order is not None
    return best_order


def canonical_order(rows: Rows, n: int) -> list[int]:
    """Vertex order realising the canonical form (old label at position i)."""
    colors = _stable_colors(rows, n)
    if len(set(colors)) == n:
        return sorted(range(n), key=colors.__getitem__, reverse=True)
    m2 = sum(r.bit_count() for r in rows)
    if m2 == 0 or m2 == n * (n - 1):
        # empty or complete: every order yields the same matrix
        return list(range(n))
    return _search_order(rows, n, colors)


def relabel_rows(rows: Rows, order: list[int]) -> Rows:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for v in range(n):
        mask = rows[v]
        acc = 0
        while mask:
            low = mask & -mask
            acc |= 1 << pos[low.bit_length() - 1]
            mask ^= low
        out[pos[v]] = acc
    return tuple(out)


def canonical_rows(rows: Rows, n: int) -> Rows:
    if n > CANONICAL_CAP:
        raise CapabilityError(
            f"canonical form supported up to n={CANONICAL_CAP}, got n={n}"
        )
    return relabel_rows(rows, canonical_order(rows, n))


def canonical_relabel(g: Graph) -> Graph:
    """Canonically relabelled copy; equal for isomorphic inputs."""
    return Graph(g.n, canonical_rows(g.rows, g.n))


def canonical_code(g: Graph) -> str:
    """Deterministic isomorphism-class identifier (graph6 of the canonical form)."""
    from .io import to_graph6

    return to_graph6(canonical_relabel(g))
