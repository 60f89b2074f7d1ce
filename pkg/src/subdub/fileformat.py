"""JSON graph files and DOT export.

A graph file is ``{"n": <int>, "edges": [[u, v], ...]}``; the position of an
edge in the list is its id. Files written by ``sd`` also carry ``labels``
(one ``["twin", v, copy]`` or ``["subdivision", e]`` per vertex) and the
``source`` graph, which is enough to rebuild the :class:`SdGraph`.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .errors import UsageError
from .multigraph import MultiGraph, edge_components
from .subdouble import SdGraph, Subdivision, Twin, subdivided_double

__all__ = [
    "dumps",
    "graph_to_json",
    "graph_from_json",
    "sd_to_json",
    "load_graph",
    "read_json",
    "write_text",
    "to_dot",
]


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"


def graph_to_json(g: MultiGraph) -> dict:
    return {"n": g.n, "edges": [list(p) for p in g.edges]}


def graph_from_json(data) -> MultiGraph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise UsageError("graph JSON needs 'n' and 'edges'")
    n, edges = data["n"], data["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(edges, list):
        raise UsageError("'n' must be an integer and 'edges' a list")
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise UsageError(f"bad edge entry {e!r}")
    return MultiGraph(n, edges)


def _label_json(lab) -> list:
    if isinstance(lab, Twin):
        return ["twin", lab.vertex, lab.copy]
    return ["subdivision", lab.edge]


def sd_to_json(sd: SdGraph) -> dict:
    doc = graph_to_json(sd.graph)
    doc["labels"] = [_label_json(lab) for lab in sd.labels]
    doc["source"] = graph_to_json(sd.source)
    return doc


def read_json(path: str | Path):
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text(encoding="utf-8")
        return json.loads(text)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def load_graph(path: str | Path) -> tuple[MultiGraph, SdGraph | None]:
    """Read a graph file; the second item is set when the file carries SD labels."""
    data = read_json(path)
    g = graph_from_json(data)
    if "labels" not in data:
        return g, None
    if "source" not in data:
        raise UsageError("labelled graph file lacks its 'source' graph")
    sd = subdivided_double(graph_from_json(data["source"]))
    expected = sd_to_json(sd)
    if data["labels"] != expected["labels"] or graph_to_json(g) != graph_to_json(sd.graph):
        raise UsageError("labels do not match the subdivided double of the stated source")
    return g, sd


def write_text(path: str | Path | None, text: str) -> None:
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text, encoding="utf-8")


_COMPONENT_COLORS = ("blue", "red", "darkgreen", "orange", "purple", "brown")


def to_dot(g: MultiGraph, cycle=None, sd: SdGraph | None = None, name: str = "G") -> str:
    """Graphviz text. With ``cycle``, its edges are thick black and the rest thin;
    each complement component gets its own colour (blue first)."""
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(g.n):
        attrs = []
        if sd is not None:
            lab = sd.labels[v]
            if isinstance(lab, Twin):
                attrs += [f'label="{lab.vertex}{"ab"[lab.copy]}"', "fillcolor=lightblue"]
            elif isinstance(lab, Subdivision):
                attrs += [f'label="e{lab.edge}"', "fillcolor=salmon"]
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    color_of: dict[int, str] = {}
    if cycle is not None:
        rest = set(range(g.m)) - set(cycle.edges)
        for i, comp in enumerate(edge_components(g, rest)):
            for e in rest:
                if g.edges[e][0] in comp:
                    color_of[e] = _COMPONENT_COLORS[i % len(_COMPONENT_COLORS)]
    for e, (u, v) in enumerate(g.edges):
        attrs = [f'label="{e}"']
        if cycle is not None:
            if e in cycle.edges:
                attrs += ["penwidth=3", "color=black"]
            else:
                attrs += ["penwidth=1", f"color={color_of[e]}"]
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
