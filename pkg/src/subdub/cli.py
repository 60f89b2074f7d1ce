"""Command-line front end.

Exit codes are shared by every subcommand: 0 success / property holds,
1 property fails, 2 usage error (bad arguments or files), 3 the input graph
violates a precondition (e.g. not 4-regular).
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import generators
from .errors import PreconditionError, UsageError
from .eulerham import (
    EulerTour,
    HamCycle,
    all_bit_vectors,
    all_euler_tours,
    complement_components,
    enumerate_ham_cycles,
    euler_tour,
    hairpins_of,
    lift_tour,
    linear_arboricity_two,
    pairing_report,
    validate_ham_cycle,
)
from .fileformat import dumps, graph_to_json, load_graph, read_json, sd_to_json, to_dot, write_text
from .multigraph import delete_vertex
from .subdouble import condense, recognize, subdivided_double

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

log = logging.getLogger("subdub")


def _emit(args, doc: dict, text_lines) -> None:
    """JSON under ``--json``, otherwise tab-delimited ``key<TAB>value`` lines."""
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        for line in text_lines:
            print(line if isinstance(line, str) else "\t".join(str(x) for x in line))


def _bits_str(bits) -> str:
    return "".join(str(b) for b in bits)


def cmd_gen(args) -> int:
    g = generators.build(args.family)
    write_text(args.out, dumps(graph_to_json(g)))
    return EXIT_OK


def cmd_sd(args) -> int:
    g, _ = load_graph(args.input)
    sd = subdivided_double(g)
    write_text(args.out, dumps(sd_to_json(sd)))
    return EXIT_OK


def cmd_recognize(args) -> int:
    g, _ = load_graph(args.input)
    cert, reason = recognize(g)
    if cert is None:
        _emit(args, {"subdivided_double": False, "reason": reason}, [("subdivided_double", "no"), ("reason", reason)])
        return EXIT_FALSE
    underlying = condense(g, cert)
    if args.emit_cert:
        write_text(args.emit_cert, dumps(cert.to_json()))
    if args.out:
        write_text(args.out, dumps(graph_to_json(underlying)))
    _emit(
        args,
        {"subdivided_double": True, "certificate": cert.to_json()},
        [
            ("subdivided_double", "yes"),
            ("underlying_vertices", underlying.n),
            ("underlying_edges", underlying.m),
            ("pairing", " ".join(f"{a}~{b}" for a, b in cert.pairing)),
        ],
    )
    return EXIT_OK


def cmd_euler(args) -> int:
    g, _ = load_graph(args.input)
    if args.all:
        tours = all_euler_tours(g, args.limit)
        _emit(
            args,
            {"count": len(tours), "tours": [t.to_json() for t in tours]},
            [("count", len(tours))] + [(i, " ".join(f"{v}:{e}" for v, e in t.steps)) for i, t in enumerate(tours)],
        )
    else:
        t = euler_tour(g)
        _emit(args, t.to_json(), [" ".join(f"{v}:{e}" for v, e in t.steps)])
    return EXIT_OK


def _need_sd(path):
    g, sd = load_graph(path)
    if sd is None:
        raise UsageError(f"{path} has no subdivided-double labels; produce it with the 'sd' subcommand")
    return g, sd


def cmd_lift(args) -> int:
    _, sd = _need_sd(args.input)
    tour = EulerTour.from_json(read_json(args.tour)) if args.tour else euler_tour(sd.source)
    if args.all:
        vectors = all_bit_vectors(sd.source.n)
    else:
        if args.bits is None:
            raise UsageError("give --bits or --all")
        if set(args.bits) - {"0", "1"}:
            raise UsageError("--bits must be a string of 0s and 1s")
        vectors = [tuple(int(c) for c in args.bits)]
    lifted = [(b, lift_tour(sd, tour, b)) for b in vectors]
    distinct = len({h for _, h in lifted})
    if not args.all:
        (_, h), = lifted
        _emit(args, h.to_json(), [("order", " ".join(map(str, h.order))), ("edges", " ".join(map(str, h.edge_seq)))])
        return EXIT_OK
    doc = {
        "tour": tour.to_json(),
        "cycles": [{"bits": _bits_str(b), "cycle": h.to_json()} for b, h in lifted],
        "distinct": distinct,
    }
    _emit(args, doc, [("distinct", distinct)] + [(_bits_str(b), " ".join(map(str, h.order))) for b, h in lifted])
    return EXIT_OK


def cmd_enum(args) -> int:
    g, sd = load_graph(args.input)
    cycles = enumerate_ham_cycles(g, args.workers)
    entries = []
    for h in cycles:
        item = h.to_json()
        if sd is not None:
            item["hairpins"] = [list(p) for p in hairpins_of(sd, h)]
        entries.append(item)
    lines = [("count", len(cycles))]
    lines += [(i, " ".join(map(str, h.order))) for i, h in enumerate(cycles[: args.show])]
    _emit(args, {"count": len(cycles), "cycles": entries}, lines)
    if args.figure and cycles:
        from .plotting import save_figure

        save_figure(args.figure, g, cycles[0], sd, title="first Hamiltonian cycle")
    return EXIT_OK


def cmd_verify_paired(args) -> int:
    g, sd = load_graph(args.input)
    rep = pairing_report(g, args.workers)
    decomps = rep.decompositions
    doc = {
        "paired": rep.paired,
        "hamiltonian_cycles": len(rep.cycles),
        "decompositions": decomps,
        "decompositions_even": decomps % 2 == 0,
        "counterexample": None,
    }
    lines = [
        ("verdict", "PAIRED" if rep.paired else "NOT-PAIRED"),
        ("hamiltonian_cycles", len(rep.cycles)),
        ("decompositions", decomps),
        ("decompositions_even", "yes" if decomps % 2 == 0 else "no"),
    ]
    if rep.counterexample is not None:
        comps = complement_components(g, rep.counterexample)
        doc["counterexample"] = rep.counterexample.to_json()
        doc["complement_components"] = [sorted(c) for c in comps]
        lines += [("complement_components", len(comps)), ("counterexample", dumps(rep.counterexample.to_json()).strip())]
    _emit(args, doc, lines)
    if args.figure:
        from .plotting import save_figure

        shown = rep.counterexample or (rep.cycles[0] if rep.cycles else None)
        title = "counterexample" if rep.counterexample else "Hamiltonian decomposition"
        save_figure(args.figure, g, shown, sd, title=title if shown else None)
    return EXIT_OK if rep.paired else EXIT_FALSE


def cmd_decomp(args) -> int:
    g, sd = load_graph(args.input)
    rep = pairing_report(g, args.workers)
    pairs = rep.decomposition_pairs()
    doc = {
        "decompositions": rep.decompositions,
        "even": rep.decompositions % 2 == 0,
        "pairs": [[a.to_json(), b.to_json()] for a, b in pairs[: args.show]],
    }
    lines = [("decompositions", rep.decompositions), ("even", "yes" if rep.decompositions % 2 == 0 else "no")]
    _emit(args, doc, lines)
    if args.figure:
        from .plotting import save_decomposition_panels

        save_decomposition_panels(args.figure, g, pairs, sd)
    return EXIT_OK


def cmd_linarb2(args) -> int:
    g, _ = load_graph(args.input)
    relabel = None
    if args.delete_vertex is not None:
        g, relabel = delete_vertex(g, args.delete_vertex)
    split = linear_arboricity_two(g)
    doc = {"linear_arboricity_at_most_2": split is not None, "forests": None}
    if relabel is not None:
        doc["relabel"] = [[old, new] for old, new in sorted(relabel.items())]
    if split is None:
        _emit(args, doc, [("linear_arboricity_at_most_2", "no")])
        return EXIT_FALSE
    doc["forests"] = [sorted(split[0]), sorted(split[1])]
    _emit(
        args,
        doc,
        [
            ("linear_arboricity_at_most_2", "yes"),
            ("forest_0", " ".join(map(str, sorted(split[0])))),
            ("forest_1", " ".join(map(str, sorted(split[1])))),
        ],
    )
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g, sd = load_graph(args.input)
    cycle = None
    if args.cycle:
        cycle = HamCycle.from_json(read_json(args.cycle))
        try:
            validate_ham_cycle(g, cycle)
        except UsageError as exc:
            raise UsageError(f"cycle does not belong to this graph: {exc}") from None
    write_text(args.out, to_dot(g, cycle, sd))
    if args.figure:
        from .plotting import save_figure

        save_figure(args.figure, g, cycle, sd)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subdub", description="Subdivided doubles of 4-regular graphs and their Hamiltonian cycles.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, graph_input=True, json_flag=True, workers=False):
        p = sub.add_parser(name, help=help_)
        if graph_input:
            p.add_argument("input", help="graph JSON file ('-' for stdin)")
        if json_flag:
            p.add_argument("--json", action="store_true", help="machine-readable output")
        if workers:
            p.add_argument("--workers", type=int, default=1, help="processes for the cycle search")
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "write a named graph, e.g. circulant:18,1,8", graph_input=False, json_flag=False)
    p.add_argument("family", help="<family>[:<p1>,<p2>,...]; families: " + ", ".join(sorted(generators.FAMILIES)))
    p.add_argument("-o", "--out")

    p = add("sd", cmd_sd, "subdivided double of a 4-regular graph", json_flag=False)
    p.add_argument("-o", "--out")

    p = add("recognize", cmd_recognize, "test whether a graph is a subdivided double")
    p.add_argument("--emit-cert", metavar="PATH", help="write the certificate JSON here")
    p.add_argument("-o", "--out", help="write the condensed underlying graph here")

    p = add("euler", cmd_euler, "Euler tour (or all tours with a fixed first edge)")
    p.add_argument("--all", action="store_true")
    p.add_argument("--limit", type=int)

    p = add("lift", cmd_lift, "lift an Euler tour of the source to a Hamiltonian cycle")
    p.add_argument("--bits", help="one bit per source vertex, e.g. 01101")
    p.add_argument("--all", action="store_true", help="lift with every bit vector")
    p.add_argument("--tour", help="tour JSON file; default is the deterministic tour")

    p = add("enum", cmd_enum, "enumerate all Hamiltonian cycles", workers=True)
    p.add_argument("--show", type=int, default=20, help="cycles listed in text mode")
    p.add_argument("--figure", metavar="PATH", help="render the first cycle to an image file")

    p = add("verify-paired", cmd_verify_paired, "check that every Hamiltonian cycle has a Hamiltonian complement", workers=True)
    p.add_argument("--figure", metavar="PATH", help="render the counterexample or a decomposition")

    p = add("decomp", cmd_decomp, "count Hamiltonian decompositions", workers=True)
    p.add_argument("--show", type=int, default=10, help="decompositions included in the JSON report")
    p.add_argument("--figure", metavar="PATH", help="render up to four decompositions")

    p = add("linarb2", cmd_linarb2, "split the edges into two linear forests")
    p.add_argument("--delete-vertex", type=int, metavar="V")

    p = add("export-dot", cmd_export_dot, "Graphviz export, optionally highlighting a cycle", json_flag=False)
    p.add_argument("--cycle", help="cycle JSON file")
    p.add_argument("-o", "--out")
    p.add_argument("--figure", metavar="PATH", help="also render with matplotlib")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"subdub: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except UsageError as exc:
        print(f"subdub: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
