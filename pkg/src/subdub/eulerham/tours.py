"""Euler tours, and how they lift to Hamiltonian cycles of a subdivided double.

A tour is stored as ``steps[i] = (vertex, edge_out)``; ``edge_out`` joins the
step's vertex to the next step's vertex, cyclically. A loop step leaves its
vertex through end 0 of the loop and comes back through end 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..errors import NoTourError, ReconstructionError, UnsupportedInputError, UsageError
from ..multigraph import MultiGraph, is_connected
from ..subdouble import SdGraph
from .cycles import HamCycle, validate_ham_cycle

__all__ = [
    "EulerTour",
    "Hairpin",
    "euler_tour",
    "all_euler_tours",
    "validate_tour",
    "lift_tour",
    "unlift",
    "hairpins_of",
    "project_to_tour",
    "all_bit_vectors",
]


@dataclass(frozen=True)
class EulerTour:
    steps: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.steps)

    @property
    def edge_sequence(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def rotated(self, k: int) -> EulerTour:
        k %= len(self.steps)
        return EulerTour(self.steps[k:] + self.steps[:k])

    def to_json(self) -> dict:
        return {"steps": [list(s) for s in self.steps]}

    @classmethod
    def from_json(cls, data: dict) -> EulerTour:
        try:
            return cls(tuple((int(v), int(e)) for v, e in data["steps"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed tour JSON: {exc}") from None


class Hairpin(NamedTuple):
    vertex: int  # original vertex whose two twins are the hairpin's ends
    subdivision: int  # SD vertex in the middle


def validate_tour(g: MultiGraph, t: EulerTour) -> None:
    """Raise :class:`UsageError` unless ``t`` is an Euler tour of ``g``."""
    if len(t) != g.m:
        raise UsageError(f"tour has {len(t)} steps but the graph has {g.m} edges")
    if sorted(t.edge_sequence) != list(range(g.m)):
        raise UsageError("tour does not use every edge exactly once")
    for i, (v, e) in enumerate(t.steps):
        if not 0 <= v < g.n:
            raise UsageError(f"step {i}: vertex {v} out of range")
        nxt = t.steps[(i + 1) % len(t)][0]
        if v not in g.edges[e] or g.other(e, v) != nxt:
            raise UsageError(f"step {i}: edge {e} does not join {v} to {nxt}")


def _check_eulerian(g: MultiGraph) -> None:
    if g.m == 0:
        raise NoTourError("graph has no edges")
    odd = [v for v, d in enumerate(g.degrees) if d % 2]
    if odd:
        raise NoTourError(f"vertex {odd[0]} has odd degree {g.degrees[odd[0]]}")
    if not is_connected(g):
        raise NoTourError("graph is disconnected")


def euler_tour(g: MultiGraph) -> EulerTour:
    """Deterministic Hierholzer tour from vertex 0, always taking the lowest unused edge id."""
    _check_eulerian(g)
    used = [False] * g.m
    ptr = [0] * g.n
    stack: list[tuple[int, int]] = [(0, -1)]  # (vertex, edge used to arrive)
    circuit: list[tuple[int, int]] = []
    inc = [sorted(e for e, _ in g.incidences(v)) for v in range(g.n)]
    while stack:
        v, _ = stack[-1]
        while ptr[v] < len(inc[v]) and used[inc[v][ptr[v]]]:
            ptr[v] += 1
        if ptr[v] == len(inc[v]):
            circuit.append(stack.pop())
            continue
        e = inc[v][ptr[v]]
        used[e] = True
        stack.append((g.other(e, v), e))
    # circuit is the closed walk backwards: reverse it and pair vertices with outgoing edges
    circuit.reverse()
    steps = tuple((circuit[i][0], circuit[i + 1][1]) for i in range(len(circuit) - 1))
    return EulerTour(steps)


def all_euler_tours(g: MultiGraph, limit: int | None = None) -> list[EulerTour]:
    """Every Euler tour that starts at vertex 0 along its lowest-numbered edge.

    Fixing the first edge (and, for a non-loop, its direction) removes
    rotations. Tours come out in lexicographic order of their edge sequences,
    truncated to ``limit`` if given.
    """
    _check_eulerian(g)
    inc = [sorted({e for e, _ in g.incidences(v)}) for v in range(g.n)]
    first = inc[0][0]
    used = [False] * g.m
    used[first] = True
    steps = [(0, first)]
    out: list[EulerTour] = []

    def extend(v: int) -> bool:
        if len(steps) == g.m:
            if v == 0:
                out.append(EulerTour(tuple(steps)))
            return limit is not None and len(out) >= limit
        for e in inc[v]:
            if used[e]:
                continue
            used[e] = True
            steps.append((v, e))
            stop = extend(g.other(e, v))
            steps.pop()
            used[e] = False
            if stop:
                return True
        return False

    extend(g.other(first, 0))
    return out


def all_bit_vectors(n: int) -> list[tuple[int, ...]]:
    """All ``2**n`` vectors, ordered as binary numbers with bit 0 most significant."""
    return [tuple((k >> (n - 1 - i)) & 1 for i in range(n)) for k in range(2**n)]


def _ends(g: MultiGraph, v: int, e: int) -> tuple[int, int]:
    if g.is_loop(e):
        return 0, 1
    out_end = g.end_at(e, v)
    return out_end, 1 - out_end


def lift_tour(sd: SdGraph, t: EulerTour, bits) -> HamCycle:
    """Hamiltonian cycle of ``sd.graph`` obtained from tour ``t`` of the source graph.

    The first visit of ``v`` (scanning from step 0) becomes twin copy
    ``bits[v]``, the second becomes the other copy, and each tour edge is
    replaced by the two-edge path through its subdivision vertex.
    """
    g = sd.source
    bits = tuple(int(b) for b in bits)
    if len(bits) != g.n:
        raise UsageError(f"bit vector has length {len(bits)}, source graph has {g.n} vertices")
    if any(b not in (0, 1) for b in bits):
        raise UsageError("bit vector entries must be 0 or 1")
    validate_tour(g, t)
    seen = [0] * g.n
    copies = []
    for v, _ in t.steps:
        copies.append(bits[v] if seen[v] == 0 else 1 - bits[v])
        seen[v] += 1
    if any(k != 2 for k in seen):
        raise UsageError("tour must visit every vertex exactly twice")
    order: list[int] = []
    edge_seq: list[int] = []
    for i, (v, e) in enumerate(t.steps):
        out_end, in_end = _ends(g, v, e)
        order += [sd.twin(v, copies[i]), sd.subdivision(e)]
        edge_seq += [sd.sd_edge(e, out_end, copies[i]), sd.sd_edge(e, in_end, copies[(i + 1) % len(t)])]
    return HamCycle.canonical(order, edge_seq)


def unlift(sd: SdGraph, t: EulerTour, h: HamCycle) -> tuple[int, ...]:
    """Recover the bit vector ``b`` with ``lift_tour(sd, t, b) == h``."""
    g = sd.source
    validate_tour(g, t)
    bits = [-1] * g.n
    for v, e in t.steps:
        if bits[v] != -1:
            continue
        out_end, _ = _ends(g, v, e)
        hits = [c for c in (0, 1) if sd.sd_edge(e, out_end, c) in h.edges]
        if len(hits) != 1:
            raise ReconstructionError(f"cycle does not leave a twin of {v} along edge {e} as the tour does")
        bits[v] = hits[0]
    if -1 in bits:
        raise ReconstructionError("tour misses a vertex")
    b = tuple(bits)
    if lift_tour(sd, t, b) != h:
        raise ReconstructionError("cycle is not a lift of this tour")
    return b


def hairpins_of(sd: SdGraph, h: HamCycle) -> list[Hairpin]:
    """Two-edge stretches of ``h`` whose ends are twins of each other, sorted."""
    validate_ham_cycle(sd.graph, h)
    k = len(h.order)
    found = []
    for i, x in enumerate(h.order):
        if sd.is_twin(x):
            continue
        before, after = h.order[i - 1], h.order[(i + 1) % k]
        if sd.twin_of(before) == after:
            found.append(Hairpin(sd.origin(before), x))
    return sorted(found)


def project_to_tour(sd: SdGraph, h: HamCycle) -> EulerTour | None:
    """The Euler tour of the source read off a hairpin-free cycle, else ``None``.

    The tour follows ``h``'s stored direction and starts at its smallest edge id.
    """
    if any(sd.source.is_loop(e) for e in range(sd.source.m)):
        raise UnsupportedInputError("projection needs a source graph without loops")
    if hairpins_of(sd, h):
        return None
    k = len(h.order)
    steps = []
    for i, x in enumerate(h.order):
        if not sd.is_twin(x):
            steps.append((sd.origin(h.order[i - 1]), sd.origin(x)))
    start = min(range(len(steps)), key=lambda j: steps[j][1])
    tour = EulerTour(tuple(steps)).rotated(start)
    validate_tour(sd.source, tour)
    assert len(steps) * 2 == k
    return tour
