"""Exact test for linear arboricity at most two."""

from __future__ import annotations

from collections import deque

from ..multigraph import MultiGraph


def _edge_order(g: MultiGraph) -> list[int]:
    # BFS positions; an edge is placed once both ends are reached, so each
    # vertex's edges get coloured close together and degree limits bite early
    pos = [-1] * g.n
    k = 0
    for s in range(g.n):
        if pos[s] != -1:
            continue
        pos[s] = k
        k += 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if pos[w] == -1:
                    pos[w] = k
                    k += 1
                    queue.append(w)
    return sorted(range(g.m), key=lambda e: (max(pos[x] for x in g.edges[e]), min(pos[x] for x in g.edges[e]), e))


def linear_arboricity_two(g: MultiGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Split the edges into two linear forests, or return ``None`` if impossible.

    Backtracking 2-colouring of the edges; each colour class is kept a
    disjoint union of paths by tracking, for every path endpoint, the far
    endpoint of its path. The first edge is fixed to colour 0.
    """
    if any(u == v for u, v in g.edges) or any(d > 4 for d in g.degrees):
        return None
    if g.m == 0:
        return frozenset(), frozenset()
    order = _edge_order(g)
    deg = [[0] * g.n, [0] * g.n]
    far = [list(range(g.n)), list(range(g.n))]
    color = [-1] * g.m

    def place(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        u, v = g.edges[e]
        for c in ((0,) if i == 0 else (0, 1)):
            d, f = deg[c], far[c]
            if d[u] == 2 or d[v] == 2 or f[u] == v:
                continue
            a, b = f[u], f[v]
            f[a], f[b] = b, a
            d[u] += 1
            d[v] += 1
            color[e] = c
            if place(i + 1):
                return True
            d[u] -= 1
            d[v] -= 1
            f[a], f[b] = u, v
            color[e] = -1
        return False

    if not place(0):
        return None
    return (
        frozenset(e for e in range(g.m) if color[e] == 0),
        frozenset(e for e in range(g.m) if color[e] == 1),
    )
