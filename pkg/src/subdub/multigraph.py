"""Immutable undirected multigraph with loops and parallel edges.

Vertices are ``0..n-1`` and edges are ``0..m-1``. Every cycle, tour and forest
elsewhere in the package is expressed in edge ids, never in endpoint pairs,
because parallel edges must stay distinguishable.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable, Sequence
from functools import cached_property
from itertools import combinations

from .errors import UnsupportedInputError, UsageError

__all__ = [
    "MultiGraph",
    "degree",
    "is_k_regular",
    "is_connected",
    "bipartition",
    "line_graph",
    "are_isomorphic",
    "delete_vertex",
    "edge_components",
]


class MultiGraph:
    """An undirected multigraph.

    ``edges[e]`` is the endpoint pair of edge ``e``, stored as given (so the
    two *ends* of an edge are ``0`` and ``1``). A loop ``(v, v)`` is listed
    once in the edge table but contributes both of its ends to ``v``'s
    incidence list, hence two to the degree.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise UsageError(f"vertex count must be non-negative, got {n}")
        table = []
        for e, pair in enumerate(edges):
            if len(pair) != 2:
                raise UsageError(f"edge {e} is not a pair: {pair!r}")
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise UsageError(f"edge {e} = ({u}, {v}) has an endpoint outside [0, {n})")
            table.append((u, v))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(table)
        inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append((e, 0))
            inc[v].append((e, 1))
        self._incidence = tuple(tuple(x) for x in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise UsageError(f"vertex {v} out of range [0, {self.n})")

    def incidences(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(edge, end)`` pairs at ``v``; a loop shows up once per end."""
        self._check_vertex(v)
        return self._incidence[v]

    def endpoint(self, e: int, end: int) -> int:
        return self.edges[e][end]

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if u == v:
            return w
        if w == v:
            return u
        raise UsageError(f"vertex {v} is not an endpoint of edge {e}")

    def end_at(self, e: int, v: int) -> int:
        """Which end of ``e`` sits at ``v`` (``0`` for a loop)."""
        u, w = self.edges[e]
        if u == v:
            return 0
        if w == v:
            return 1
        raise UsageError(f"vertex {v} is not an endpoint of edge {e}")

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(inc) for inc in self._incidence)

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        """Edge count per unordered vertex pair ``(min, max)``."""
        return dict(Counter((min(u, v), max(u, v)) for u, v in self.edges))

    def mult(self, u: int, v: int) -> int:
        return self.multiplicity.get((min(u, v), max(u, v)), 0)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted distinct neighbours of each vertex (a vertex with a loop lists itself)."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(tuple(sorted(s)) for s in nbrs)

    def neighbor_multiset(self, v: int) -> tuple[int, ...]:
        """Neighbours of ``v`` with multiplicity, sorted (a loop contributes ``v`` twice)."""
        self._check_vertex(v)
        return tuple(sorted(self.other(e, v) for e, _ in self._incidence[v]))

    def is_simple(self) -> bool:
        return all(u != v for u, v in self.edges) and all(k == 1 for k in self.multiplicity.values())

    def edge_subgraph(self, edge_ids: Iterable[int]) -> MultiGraph:
        """Spanning subgraph on the given edges, renumbered in ascending edge-id order."""
        return MultiGraph(self.n, [self.edges[e] for e in sorted(edge_ids)])


def degree(g: MultiGraph, v: int) -> int:
    g._check_vertex(v)
    return g.degrees[v]


def is_k_regular(g: MultiGraph, k: int) -> bool:
    return all(d == k for d in g.degrees)


def _reach(g: MultiGraph, start: int, allowed_edges: set[int] | None = None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for e, _ in g.incidences(u):
            if allowed_edges is not None and e not in allowed_edges:
                continue
            w = g.other(e, u)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(g: MultiGraph) -> bool:
    if g.n <= 1:
        return True
    return len(_reach(g, 0)) == g.n


def edge_components(g: MultiGraph, edge_ids: Iterable[int]) -> list[frozenset[int]]:
    """Vertex sets of the components of the subgraph spanned by ``edge_ids``.

    Vertices touched by none of the edges are left out.
    """
    allowed = set(edge_ids)
    touched = sorted({x for e in allowed for x in g.edges[e]})
    comps: list[frozenset[int]] = []
    seen: set[int] = set()
    for v in touched:
        if v in seen:
            continue
        comp = _reach(g, v, allowed)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def bipartition(g: MultiGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Proper 2-colouring as ``(side_a, side_b)``, or ``None`` if there is an odd cycle.

    Each component is coloured by BFS from its smallest vertex, which goes to
    side A; so vertex 0 is always on side A.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e, _ in g.incidences(u):
                w = g.other(e, u)
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return side_a, side_b


def line_graph(g: MultiGraph) -> MultiGraph:
    """Line graph of a simple graph; vertex ``e`` of the result is edge ``e`` of ``g``.

    Result edges are listed in lexicographic order of their endpoint pairs.
    """
    if not g.is_simple():
        raise UnsupportedInputError("line_graph is only defined here for simple graphs")
    pairs = set()
    for v in range(g.n):
        for (e1, _), (e2, _) in combinations(g.incidences(v), 2):
            pairs.add((min(e1, e2), max(e1, e2)))
    return MultiGraph(g.m, sorted(pairs))


def delete_vertex(g: MultiGraph, v: int) -> tuple[MultiGraph, dict[int, int]]:
    """Remove ``v`` and its incident edges.

    Returns the new graph and the relabelling ``old vertex -> new vertex``.
    Surviving edges keep their relative order.
    """
    g._check_vertex(v)
    relabel = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    edges = [(relabel[a], relabel[b]) for a, b in g.edges if a != v and b != v]
    return MultiGraph(g.n - 1, edges), relabel


# -- isomorphism -------------------------------------------------------------


def _refine(graphs: Sequence[MultiGraph]) -> list[list[int]]:
    """Colour refinement run jointly on several graphs so colours are comparable."""
    colors = [[hash((g.degrees[v], g.mult(v, v))) for v in range(g.n)] for g in graphs]
    n_classes = -1
    while True:
        palette: dict[tuple, int] = {}
        new = []
        for g, col in zip(graphs, colors):
            row = []
            for v in range(g.n):
                sig = (col[v], tuple(sorted(Counter(col[g.other(e, v)] for e, _ in g.incidences(v)).items())))
                row.append(palette.setdefault(sig, len(palette)))
            new.append(row)
        colors = new
        if len(palette) == n_classes:
            return colors
        n_classes = len(palette)


def _search_order(g: MultiGraph, colors: list[int], class_size: Counter) -> list[int]:
    order: list[int] = []
    placed = [False] * g.n
    while len(order) < g.n:
        root = min((v for v in range(g.n) if not placed[v]), key=lambda v: (class_size[colors[v]], v))
        placed[root] = True
        order.append(root)
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adjacency[u]:
                    if not placed[w]:
                        placed[w] = True
                        order.append(w)
                        nxt.append(w)
            frontier = nxt
    return order


def are_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    """Exact isomorphism test respecting edge and loop multiplicities.

    Colour refinement prunes candidates, then a backtracking search builds
    the vertex map in BFS order. Exponential in the worst case; intended for
    graphs of a few dozen vertices.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees) != sorted(g2.degrees):
        return False
    if sorted(g1.multiplicity.values()) != sorted(g2.multiplicity.values()):
        return False
    c1, c2 = _refine([g1, g2])
    if Counter(c1) != Counter(c2):
        return False
    sizes = Counter(c1)
    order = _search_order(g1, c1, sizes)
    by_color: dict[int, list[int]] = {}
    for w in range(g2.n):
        by_color.setdefault(c2[w], []).append(w)

    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        mapped = [u for u in g1.adjacency[v] if mapping[u] != -1 and u != v]
        for w in by_color[c1[v]]:
            if used[w] or g1.mult(v, v) != g2.mult(w, w):
                continue
            if any(g1.mult(v, u) != g2.mult(w, mapping[u]) for u in mapped):
                continue
            # non-neighbours of v must map to non-neighbours of w
            if sum(1 for x in g2.adjacency[w] if used[x] and x != w) != len(mapped):
                continue
            mapping[v] = w
            used[w] = True
            if extend(depth + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return extend(0)
