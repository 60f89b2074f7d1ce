"""Exhaustive Hamiltonian-cycle enumeration and complement analysis.

Cycles are identified by their edge-id sets, so two traversals of the same
cycle (any rotation, either direction) compare equal while cycles that differ
only in which parallel edge they use do not.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..errors import PreconditionError, UsageError
from ..multigraph import MultiGraph, edge_components

__all__ = [
    "HamCycle",
    "validate_ham_cycle",
    "cycle_from_edges",
    "enumerate_ham_cycles",
    "complement_cycle",
    "is_hamiltonian_paired",
    "count_ham_decompositions",
    "ham_decompositions",
    "PairingReport",
    "pairing_report",
    "complement_components",
]


@dataclass(frozen=True)
class HamCycle:
    """A Hamiltonian cycle; ``edge_seq[i]`` joins ``order[i]`` to ``order[i + 1]`` (cyclically)."""

    order: tuple[int, ...] = field(compare=False)
    edge_seq: tuple[int, ...] = field(compare=False)
    edges: frozenset[int] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edge_seq))

    @classmethod
    def canonical(cls, order, edge_seq) -> HamCycle:
        """Rotate to start at the smallest vertex and orient so the first edge id is below the last."""
        order, edge_seq = list(order), list(edge_seq)
        if len(order) != len(edge_seq):
            raise UsageError("cycle needs as many edges as vertices")
        i = order.index(min(order))
        order = order[i:] + order[:i]
        edge_seq = edge_seq[i:] + edge_seq[:i]
        if len(edge_seq) > 1 and edge_seq[0] > edge_seq[-1]:
            order = order[:1] + order[:0:-1]
            edge_seq = edge_seq[::-1]
        return cls(tuple(order), tuple(edge_seq))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.edges))

    def to_json(self) -> dict:
        return {"order": list(self.order), "edges": list(self.edge_seq)}

    @classmethod
    def from_json(cls, data: dict) -> HamCycle:
        try:
            return cls.canonical([int(v) for v in data["order"]], [int(e) for e in data["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed cycle JSON: {exc}") from None


def validate_ham_cycle(g: MultiGraph, h: HamCycle) -> None:
    if sorted(h.order) != list(range(g.n)):
        raise UsageError("cycle does not visit every vertex exactly once")
    if len(h.edges) != len(h.edge_seq):
        raise UsageError("cycle repeats an edge")
    k = len(h.order)
    for i, e in enumerate(h.edge_seq):
        if not 0 <= e < g.m:
            raise UsageError(f"edge {e} not in graph")
        u, v = h.order[i], h.order[(i + 1) % k]
        if sorted(g.edges[e]) != sorted((u, v)):
            raise UsageError(f"edge {e} does not join {u} and {v}")


def cycle_from_edges(g: MultiGraph, edge_ids) -> HamCycle | None:
    """The Hamiltonian cycle formed by ``edge_ids``, or ``None`` if they form anything else."""
    edge_ids = set(edge_ids)
    if g.n < 3 or len(edge_ids) != g.n:
        return None
    deg = [0] * g.n
    at: list[list[int]] = [[] for _ in range(g.n)]
    for e in edge_ids:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
        at[u].append(e)
        if u != v:
            at[v].append(e)
    if any(d != 2 for d in deg):
        return None
    order, seq = [0], []
    prev_edge = -1
    v = 0
    while True:
        e = next(x for x in sorted(at[v]) if x != prev_edge)
        seq.append(e)
        v = g.other(e, v)
        prev_edge = e
        if v == 0:
            break
        order.append(v)
    if len(order) != g.n:
        return None
    return HamCycle.canonical(order, seq)


def _branches(g: MultiGraph) -> list[tuple[int, int]]:
    return sorted((e, g.other(e, 0)) for e, _ in g.incidences(0) if not g.is_loop(e))


def _search_branch(g: MultiGraph, first_edge: int, second: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All cycles starting ``0 -first_edge-> second`` and closing with an edge id above ``first_edge``."""
    n = g.n
    nbr_edges = [[(g.other(e, v), e) for e, _ in g.incidences(v) if not g.is_loop(e)] for v in range(n)]
    nbrs = [sorted({w for w, _ in ne}) for ne in nbr_edges]
    visited = [False] * n
    visited[0] = visited[second] = True
    order = [0, second]
    seq = [first_edge]
    found = []

    def viable(y: int, head: int) -> bool:
        # an unvisited vertex needs two distinct neighbours it can still be joined through
        free = 0
        for w in nbrs[y]:
            if not visited[w] or w == head or w == 0:
                free += 1
                if free == 2:
                    return True
        return False

    def extend(head: int) -> None:
        if len(order) == n:
            for w, e in nbr_edges[head]:
                if w == 0 and e > first_edge:
                    found.append((tuple(order), tuple(seq) + (e,)))
            return
        for x, e in nbr_edges[head]:
            if visited[x]:
                continue
            visited[x] = True
            order.append(x)
            seq.append(e)
            # head becomes interior: its unvisited neighbours lose it as a link
            if all(visited[y] or viable(y, x) for y in nbrs[head]):
                if any(not visited[y] or y == x for y in nbrs[0]):
                    extend(x)
            seq.pop()
            order.pop()
            visited[x] = False

    if all(visited[y] or viable(y, second) for y in nbrs[0]):
        extend(second)
    return found


def _search_job(args):
    return _search_branch(*args)


def enumerate_ham_cycles(g: MultiGraph, workers: int = 1) -> list[HamCycle]:
    """All Hamiltonian cycles of ``g`` sorted by their sorted edge-id tuples.

    Depth-first extension from vertex 0 with degree-based pruning; parallel
    edges are separate branches. A Hamiltonian cycle needs at least three
    vertices, so loops never take part and graphs with fewer than three
    vertices have none. With
    ``workers > 1`` the branches leaving vertex 0 are searched in separate
    processes; the result does not depend on ``workers``.
    """
    if g.n < 3:
        return []
    jobs = [(g, e, w) for e, w in _branches(g)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            chunks = list(pool.map(_search_job, jobs))
    else:
        chunks = [_search_job(j) for j in jobs]
    cycles = [HamCycle.canonical(o, s) for chunk in chunks for o, s in chunk]
    cycles.sort(key=HamCycle.sort_key)
    return cycles


def _require_4_regular(g: MultiGraph) -> None:
    for v, d in enumerate(g.degrees):
        if d != 4:
            raise PreconditionError(f"vertex {v} has degree {d}; a 4-regular graph is required")


def complement_cycle(g: MultiGraph, h: HamCycle) -> frozenset[int]:
    """Edge ids of ``g`` not on ``h``: a 2-regular spanning subgraph when ``g`` is 4-regular."""
    _require_4_regular(g)
    validate_ham_cycle(g, h)
    return frozenset(range(g.m)) - h.edges


@dataclass
class PairingReport:
    """Outcome of checking every Hamiltonian cycle's complement."""

    cycles: list[HamCycle]
    complements: list[HamCycle | None]
    counterexample: HamCycle | None = None

    @property
    def hamiltonian(self) -> bool:
        return bool(self.cycles)

    @property
    def paired(self) -> bool:
        return self.hamiltonian and self.counterexample is None

    @property
    def paired_cycle_count(self) -> int:
        return sum(c is not None for c in self.complements)

    @property
    def decompositions(self) -> int:
        k = self.paired_cycle_count
        assert k % 2 == 0, "complement pairing is an involution; paired cycles come in pairs"
        return k // 2

    def decomposition_pairs(self) -> list[tuple[HamCycle, HamCycle]]:
        pairs = []
        for h, c in zip(self.cycles, self.complements):
            if c is not None and h.sort_key() < c.sort_key():
                pairs.append((h, c))
        return pairs


def pairing_report(g: MultiGraph, workers: int = 1, cycles: list[HamCycle] | None = None) -> PairingReport:
    _require_4_regular(g)
    if cycles is None:
        cycles = enumerate_ham_cycles(g, workers)
    everything = frozenset(range(g.m))
    complements = [cycle_from_edges(g, everything - h.edges) for h in cycles]
    bad = next((h for h, c in zip(cycles, complements) if c is None), None)
    return PairingReport(cycles, complements, bad)


def is_hamiltonian_paired(g: MultiGraph, workers: int = 1) -> tuple[bool, HamCycle | None]:
    """``(True, None)`` if every Hamiltonian cycle's complement is Hamiltonian.

    Otherwise ``(False, h)`` with ``h`` the first offending cycle in
    enumeration order, or ``(False, None)`` when ``g`` has no Hamiltonian
    cycle at all.
    """
    rep = pairing_report(g, workers)
    return rep.paired, rep.counterexample


def count_ham_decompositions(g: MultiGraph, workers: int = 1) -> int:
    return pairing_report(g, workers).decompositions


def ham_decompositions(g: MultiGraph, workers: int = 1) -> list[tuple[HamCycle, HamCycle]]:
    return pairing_report(g, workers).decomposition_pairs()


def complement_components(g: MultiGraph, h: HamCycle) -> list[frozenset[int]]:
    return edge_components(g, complement_cycle(g, h))
