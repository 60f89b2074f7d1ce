"""Subdivided doubles: construction, recognition and condensation.

Vertex layout of ``SD(G)`` for ``G`` with ``n`` vertices and ``m`` edges:

* ``2*v + c`` is twin copy ``c`` of original vertex ``v``;
* ``2*n + e`` is the subdivision vertex of original edge ``e``.

Edge ``4*e + 2*end + c`` joins the subdivision vertex of ``e`` to copy ``c``
of the endpoint at ``end`` of ``e``. A loop therefore produces two parallel
edges from its subdivision vertex to each twin.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import PreconditionError, UsageError
from .multigraph import MultiGraph, bipartition, is_k_regular, _reach

__all__ = [
    "Twin",
    "Subdivision",
    "SdGraph",
    "SdCertificate",
    "subdivided_double",
    "recognize",
    "condense",
    "NOT_4_REGULAR",
    "NOT_BIPARTITE",
    "NO_TWIN_PAIRING",
]

NOT_4_REGULAR = "not-4-regular"
NOT_BIPARTITE = "not-bipartite"
NO_TWIN_PAIRING = "no-twin-pairing"


class Twin(NamedTuple):
    vertex: int
    copy: int


class Subdivision(NamedTuple):
    edge: int


SdLabel = Twin | Subdivision


@dataclass(frozen=True, eq=False)
class SdGraph:
    graph: MultiGraph
    labels: tuple[SdLabel, ...]
    source: MultiGraph

    def twin(self, v: int, copy: int) -> int:
        return 2 * v + copy

    def subdivision(self, e: int) -> int:
        return 2 * self.source.n + e

    def sd_edge(self, e: int, end: int, copy: int) -> int:
        return 4 * e + 2 * end + copy

    def is_twin(self, x: int) -> bool:
        return x < 2 * self.source.n

    def origin(self, x: int) -> int:
        """Original vertex of a twin, original edge of a subdivision vertex."""
        lab = self.labels[x]
        return lab.vertex if isinstance(lab, Twin) else lab.edge

    def twin_of(self, x: int) -> int:
        return x ^ 1


def subdivided_double(g: MultiGraph) -> SdGraph:
    """Subdivide every edge of a 4-regular multigraph, then double every original vertex."""
    for v, d in enumerate(g.degrees):
        if d != 4:
            raise PreconditionError(f"vertex {v} has degree {d}; subdivided double needs a 4-regular graph")
    n = g.n
    labels: list[SdLabel] = [Twin(v, c) for v in range(n) for c in (0, 1)]
    labels += [Subdivision(e) for e in range(g.m)]
    edges = []
    for e, (u, w) in enumerate(g.edges):
        s = 2 * n + e
        for x in (u, w):
            edges += [(2 * x, s), (2 * x + 1, s)]
    return SdGraph(MultiGraph(2 * n + g.m, edges), tuple(labels), g)


@dataclass(frozen=True)
class SdCertificate:
    """Witness that a graph is a subdivided double.

    ``pairing[i]`` is the twin pair that condenses to underlying vertex ``i``;
    ``subdivision_map`` sends each vertex of the other side to the underlying
    edge it stands for.
    """

    twin_side: frozenset[int]
    pairing: tuple[tuple[int, int], ...]
    subdivision_map: dict[int, int] = field(hash=False)
    underlying: MultiGraph

    def to_json(self) -> dict:
        return {
            "twin_side": sorted(self.twin_side),
            "pairing": [list(p) for p in self.pairing],
            "subdivision_map": [[x, e] for x, e in sorted(self.subdivision_map.items())],
            "underlying": {"n": self.underlying.n, "edges": [list(p) for p in self.underlying.edges]},
        }


def _twin_classes(g: MultiGraph, side) -> list[list[int]] | None:
    classes: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for v in sorted(side):
        classes[g.neighbor_multiset(v)].append(v)
    groups = sorted(classes.values())
    if any(len(c) % 2 for c in groups):
        return None
    return groups


def _certificate(g: MultiGraph, twin_side: frozenset[int], groups: list[list[int]]) -> SdCertificate:
    pairs = sorted((c[i], c[i + 1]) for c in groups for i in range(0, len(c), 2))
    pair_index = {}
    for i, (a, b) in enumerate(pairs):
        pair_index[a] = pair_index[b] = i
    subdivision_map = {}
    edges = []
    for x in sorted(set(range(g.n)) - twin_side):
        seen = sorted({pair_index[w] for w in g.neighbor_multiset(x)})
        # one pair seen -> loop, two pairs -> ordinary edge
        ends = (seen[0], seen[-1])
        subdivision_map[x] = len(edges)
        edges.append(ends)
    return SdCertificate(twin_side, tuple(pairs), subdivision_map, MultiGraph(len(pairs), edges))


def _components(g: MultiGraph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for v in range(g.n):
        if v not in seen:
            comp = _reach(g, v)
            seen |= comp
            out.append(sorted(comp))
    return out


def recognize(g: MultiGraph) -> tuple[SdCertificate | None, str | None]:
    """Decide whether ``g`` is a subdivided double.

    Returns ``(certificate, None)`` on success or ``(None, reason)`` with
    reason one of ``not-4-regular``, ``not-bipartite``, ``no-twin-pairing``,
    checked in that order. Components are handled independently; in each the
    twin side is the one whose condensation is smaller, ties going to the
    side holding the component's smallest vertex. Within a class of vertices
    sharing one neighbourhood, twins are paired in ascending id order.
    """
    if not is_k_regular(g, 4):
        return None, NOT_4_REGULAR
    sides = bipartition(g)
    if sides is None:
        return None, NOT_BIPARTITE
    side_a, _ = sides
    twin_side: set[int] = set()
    for comp in _components(g):
        a = frozenset(v for v in comp if v in side_a)
        b = frozenset(comp) - a
        options = []
        for rank, side in enumerate((a, b)):
            groups = _twin_classes(g, side)
            if groups is not None:
                other = len(comp) - len(side)
                options.append(((len(side) // 2, other, rank), side))
        if not options:
            return None, NO_TWIN_PAIRING
        twin_side |= min(options, key=lambda o: o[0])[1]
    side = frozenset(twin_side)
    return _certificate(g, side, _twin_classes(g, side)), None


def condense(g: MultiGraph, cert: SdCertificate) -> MultiGraph:
    """Merge each twin pair to a vertex and contract each subdivision vertex to an edge.

    Re-derives the underlying graph from ``g`` and the certificate's pairing,
    checking consistency on the way.
    """
    index = {}
    for i, (a, b) in enumerate(cert.pairing):
        if a in index or b in index:
            raise UsageError(f"vertex paired twice in certificate: {(a, b)}")
        if a not in cert.twin_side or b not in cert.twin_side:
            raise UsageError(f"pair {(a, b)} not on the certificate's twin side")
        if g.neighbor_multiset(a) != g.neighbor_multiset(b) or g.mult(a, b):
            raise UsageError(f"pair {(a, b)} are not twins in this graph")
        index[a] = index[b] = i
    if set(index) != set(cert.twin_side):
        raise UsageError("certificate pairing does not cover the twin side")
    others = sorted(set(range(g.n)) - cert.twin_side)
    if sorted(cert.subdivision_map) != others:
        raise UsageError("certificate subdivision map does not cover the other side")
    edges: list[tuple[int, int] | None] = [None] * len(others)
    for x in others:
        nbrs = g.neighbor_multiset(x)
        if len(nbrs) != 4 or any(w not in index for w in nbrs):
            raise UsageError(f"vertex {x} is not a subdivision vertex of the certified pairing")
        seen = sorted({index[w] for w in nbrs})
        e = cert.subdivision_map[x]
        if not 0 <= e < len(others) or edges[e] is not None:
            raise UsageError(f"subdivision map sends {x} to a bad or repeated edge id {e}")
        edges[e] = (seen[0], seen[-1])
    return MultiGraph(len(cert.pairing), edges)
