"""Shared corpus and independent brute-force oracles.

The oracles here deliberately avoid the package's own search code: they work
from permutations, bitmask dynamic programming or networkx.
"""

from __future__ import annotations

import itertools
import sys
from collections import deque

import networkx as nx
import pytest
from hypothesis import assume
from hypothesis import strategies as st

from subdub import MultiGraph, is_connected, line_graph, subdivided_double
from subdub import generators as G


def brute_ham_cycles(g: MultiGraph) -> set[frozenset[int]]:
    """Hamiltonian cycles as edge-id sets, by trying every vertex permutation."""
    n = g.n
    if n < 3:
        return set()
    between: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        if u != v:
            between.setdefault((min(u, v), max(u, v)), []).append(e)
    out = set()
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        seq = (0,) + perm
        choices = []
        for i in range(n):
            u, v = seq[i], seq[(i + 1) % n]
            es = between.get((min(u, v), max(u, v)))
            if not es:
                break
            choices.append(es)
        else:
            out.update(frozenset(c) for c in itertools.product(*choices))
    return out


def dp_count_ham_cycles(g: MultiGraph) -> int:
    """Count Hamiltonian cycles by bitmask DP over paths from vertex 0, weighted by multiplicity."""
    n = g.n
    if n < 3:
        return 0
    mult = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        if u != v:
            mult[u][v] += 1
            mult[v][u] += 1
    full = (1 << n) - 1
    paths = [dict() for _ in range(1 << n)]
    paths[1][0] = 1
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        for v, cnt in paths[mask].items():
            for w in range(1, n):
                if mult[v][w] and not mask >> w & 1:
                    nm = mask | 1 << w
                    paths[nm][w] = paths[nm].get(w, 0) + cnt * mult[v][w]
    closing = sum(cnt * mult[v][0] for v, cnt in paths[full].items())
    assert closing % 2 == 0
    return closing // 2


def brute_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = g2.multiplicity
    for perm in itertools.permutations(range(g1.n)):
        mapped = {}
        for (u, v), k in g1.multiplicity.items():
            a, b = perm[u], perm[v]
            mapped[(min(a, b), max(a, b))] = k
        if mapped == target:
            return True
    return False


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    return nx.is_isomorphic(to_nx(g1), to_nx(g2))


def odd_closed_walk(g: MultiGraph) -> list[int] | None:
    """Vertex sequence of an odd closed walk found from BFS layers, or None."""
    dist = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if dist[s] != -1:
            continue
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if dist[w] == -1:
                    dist[w], parent[w] = dist[u] + 1, u
                    queue.append(w)
                elif dist[w] == dist[u]:

                    def up(x):
                        path = [x]
                        while parent[path[-1]] != -1:
                            path.append(parent[path[-1]])
                        return path

                    return up(u)[::-1] + up(w)
    return None


def relabel(g: MultiGraph, perm) -> MultiGraph:
    return MultiGraph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def sd(g):
    return subdivided_double(g).graph


# 4-regular sources whose subdivided doubles are checked exhaustively (SD has <= 20 vertices)
SD_SOURCES = {
    "bouquet2": G.bouquet(2),
    "dipole4": G.dipole(4),
    "doubled_cycle3": G.doubled_cycle(3),
    "doubled_cycle4": G.doubled_cycle(4),
    "K5": G.complete(5),
}

# 4-regular graphs, subdivided doubles or not
FOUR_REGULAR = {
    "bouquet2": G.bouquet(2),
    "dipole4": G.dipole(4),
    "doubled_cycle2": G.doubled_cycle(2),
    "K5": G.complete(5),
    "octahedron": G.octahedron(),
    "doubled_cycle3": G.doubled_cycle(3),
    "doubled_cycle4": G.doubled_cycle(4),
    "circulant9_1_2": G.circulant(9, [1, 2]),
    "circulant16_1_7": G.circulant(16, [1, 7]),
    "circulant18_1_8": G.circulant(18, [1, 8]),
    "line_K4": line_graph(G.complete(4)),
    "line_prism": line_graph(G.prism()),
    "line_petersen": line_graph(G.petersen()),
    "SD_bouquet2": sd(G.bouquet(2)),
    "SD_dipole4": sd(G.dipole(4)),
    "SD_doubled_cycle3": sd(G.doubled_cycle(3)),
    "SD_K5": sd(G.complete(5)),
}


@pytest.fixture(params=sorted(SD_SOURCES), scope="module")
def sd_source(request):
    return request.param, SD_SOURCES[request.param]


@st.composite
def multigraphs(draw, max_n=7, max_m=12):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    return MultiGraph(n, edges)


@st.composite
def four_regular_multigraphs(draw, min_n=1, max_n=4):
    """Connected 4-regular multigraphs via random stub matching (loops and parallels allowed)."""
    n = draw(st.integers(min_n, max_n))
    stubs = draw(st.permutations([v for v in range(n) for _ in range(4)]))
    g = MultiGraph(n, [(stubs[i], stubs[i + 1]) for i in range(0, 4 * n, 2)])
    assume(is_connected(g))
    return g


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.format_results():
        terminalreporter.write_line(line)
