"""Named graph families used as fixtures and as CLI inputs.

Every constructor numbers vertices canonically so that fixtures and printed
outputs are reproducible: circulants and cycles follow the cyclic order,
Petersen has the outer 5-cycle on 0-4 and the inner pentagram on 5-9.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UsageError
from .multigraph import MultiGraph

__all__ = [
    "complete",
    "complete_bipartite",
    "octahedron",
    "dipole",
    "doubled_cycle",
    "bouquet",
    "circulant",
    "cycle",
    "petersen",
    "prism",
    "FamilySpec",
    "parse_family",
    "build",
    "FAMILIES",
]


def complete(n: int) -> MultiGraph:
    if n < 1:
        raise UsageError("complete graph needs n >= 1")
    return MultiGraph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    """K_{a,b} with sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 0 or b < 0:
        raise UsageError("complete bipartite sides must be non-negative")
    return MultiGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def octahedron() -> MultiGraph:
    """K_{2,2,2}; antipodal pairs are (0, 1), (2, 3), (4, 5)."""
    return MultiGraph(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def dipole(n: int) -> MultiGraph:
    if n < 1:
        raise UsageError("dipole needs at least one edge")
    return MultiGraph(2, [(0, 1)] * n)


def doubled_cycle(n: int) -> MultiGraph:
    """Cycle on ``n`` vertices with every edge present twice.

    Edges ``2i`` and ``2i + 1`` are the two copies of ``(i, i + 1 mod n)``.
    ``n = 2`` degenerates to four parallel edges, the same graph as ``dipole(4)``.
    """
    if n < 2:
        raise UsageError("doubled cycle needs n >= 2")
    edges = []
    for i in range(n):
        pair = (i, (i + 1) % n)
        edges += [pair, pair]
    return MultiGraph(n, edges)


def bouquet(k: int) -> MultiGraph:
    if k < 0:
        raise UsageError("bouquet needs k >= 0")
    return MultiGraph(1, [(0, 0)] * k)


def circulant(m: int, steps) -> MultiGraph:
    """Vertex ``i`` joined to ``i +- s mod m`` for each step ``s``.

    Edges are grouped by step in the order given, and within a step listed as
    ``(i, i + s)`` for ascending ``i``. A step of ``m / 2`` yields each
    diameter once.
    """
    steps = [int(s) for s in steps]
    if m < 3:
        raise UsageError("circulant needs m >= 3")
    if not steps:
        raise UsageError("circulant needs at least one step")
    if len(set(steps)) != len(steps):
        raise UsageError(f"circulant steps must be distinct, got {steps}")
    edges = []
    for s in steps:
        if not 1 <= s <= m // 2:
            raise UsageError(f"circulant step {s} outside [1, {m // 2}]")
        count = m // 2 if 2 * s == m else m
        edges += [(i, (i + s) % m) for i in range(count)]
    return MultiGraph(m, edges)


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise UsageError("simple cycle needs n >= 3")
    return circulant(n, [1])


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, outer + spokes + inner)


def prism(n: int = 3) -> MultiGraph:
    """Circular ladder C_n x K_2 (the triangular prism for ``n = 3``)."""
    if n < 3:
        raise UsageError("prism needs n >= 3")
    top = [(i, (i + 1) % n) for i in range(n)]
    bottom = [(n + i, n + (i + 1) % n) for i in range(n)]
    rungs = [(i, n + i) for i in range(n)]
    return MultiGraph(2 * n, top + bottom + rungs)


# name -> (constructor, allowed parameter counts); None means "one or more"
FAMILIES = {
    "complete": (complete, {1}),
    "complete_bipartite": (complete_bipartite, {2}),
    "octahedron": (octahedron, {0}),
    "dipole": (dipole, {1}),
    "doubled_cycle": (doubled_cycle, {1}),
    "bouquet": (bouquet, {1}),
    "circulant": (None, None),
    "cycle": (cycle, {1}),
    "petersen": (petersen, {0}),
    "prism": (prism, {0, 1}),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(map(str, self.params))}"


def parse_family(text: str) -> FamilySpec:
    """Parse ``<family>[:<p1>,<p2>,...]``, e.g. ``circulant:18,1,8``."""
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower().replace("-", "_")
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}")
    try:
        params = tuple(int(p) for p in rest.split(",") if p.strip()) if rest else ()
    except ValueError:
        raise UsageError(f"family parameters must be integers: {rest!r}") from None
    _, arity = FAMILIES[name]
    if arity is None:
        if len(params) < 2:
            raise UsageError("circulant needs a vertex count and at least one step")
    elif len(params) not in arity:
        raise UsageError(f"{name} takes {sorted(arity)} parameter(s), got {len(params)}")
    return FamilySpec(name, params)


def build(spec: FamilySpec | str) -> MultiGraph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    if spec.family == "circulant":
        return circulant(spec.params[0], spec.params[1:])
    ctor, _ = FAMILIES[spec.family]
    return ctor(*spec.params)
