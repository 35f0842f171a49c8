"""Command-line front end.

Subcommands map one-to-one onto library operations: ``gen`` (graph
families), ``dist`` (distance matrix), ``helly`` (property checks in all
three modes), ``extend`` (greedy Lipschitz extension), ``holefill``
(boundary decision and construction), ``oracle`` (brute-force
counterparts) and ``harness`` (the Helly/Kirszbraun agreement sweep).

Exit codes: 0 when the queried property holds or the construction
succeeds, 1 when it verifiably fails (certificate on standard output),
2 for usage or validation errors (message on standard error).  Standard
output is the sole results channel.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import graphs
from .errors import InputError, ParameterError
from .extension import greedy_extend, map_from_text
from .helly import (
    bipartite_helly_check,
    helly_check,
    t_helly_check,
    violation_to_text,
)
from .holefill import boundary_from_text, hole_fill_construct, hole_fill_decide
from .lattice import Box, box_vertices, point_from_text, point_to_text
from .oracle import (
    brute_force_extend,
    brute_force_helly,
    kirszbraun_equivalence_harness,
)

_FAMILIES = ("path", "cycle", "complete", "hyperoctahedron", "star", "strong", "tensor")


def _build_parser():
    top = argparse.ArgumentParser(
        prog="hellyext",
        description="Helly properties and Lipschitz extension over lattices",
    )
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a graph family member to a file")
    gen.add_argument("--family", required=True, choices=_FAMILIES)
    gen.add_argument("params", nargs="*", help="family parameters")
    gen.add_argument("-o", "--out", required=True)

    dist = sub.add_parser("dist", help="print the distance matrix and diameter")
    dist.add_argument("graphfile")

    hel = sub.add_parser("helly", help="check a Helly property")
    hel.add_argument("graphfile")
    hel.add_argument("--n", type=int)
    hel.add_argument("--m", type=int)
    hel.add_argument("--bipartite", action="store_true")
    hel.add_argument("--d", type=int)
    hel.add_argument("--t", type=int)

    ex = sub.add_parser("extend", help="greedy Lipschitz extension of a map file")
    ex.add_argument("--map", required=True, dest="mapfile")
    group = ex.add_mutually_exclusive_group(required=True)
    group.add_argument("--targets", help="points file listing where to extend")
    group.add_argument("--box", type=int, help="extend over the box {0..n}^d")
    ex.add_argument("--t", type=int, help="override the map's Lipschitz scale")

    hole = sub.add_parser("holefill", help="decide and construct a boundary filling")
    hole.add_argument("--boundary", required=True)
    hole.add_argument("--construct", action="store_true")

    orc = sub.add_parser("oracle", help="brute-force counterparts")
    orc_sub = orc.add_subparsers(dest="oracle_command", required=True)
    oex = orc_sub.add_parser("extend", help="backtracking extendability")
    oex.add_argument("--map", required=True, dest="mapfile")
    ogroup = oex.add_mutually_exclusive_group(required=True)
    ogroup.add_argument("--targets")
    ogroup.add_argument("--box", type=int)
    oex.add_argument("--t", type=int)
    ohel = orc_sub.add_parser("helly", help="exhaustive Helly check")
    ohel.add_argument("graphfile")
    ohel.add_argument("--n", type=int, required=True)
    ohel.add_argument("--m", type=int, required=True)

    har = sub.add_parser("harness", help="Helly vs Kirszbraun agreement sweep")
    har.add_argument("--d", type=int, required=True)
    har.add_argument("--max-vertices", type=int, required=True)
    har.add_argument("--seed", type=int, default=0)
    har.add_argument("--jobs", type=int, default=1)

    return top


def _load_graph(path):
    with open(path) as fh:
        return graphs.graph_from_text(fh.read())


def _int_params(params, count, what):
    if len(params) != count:
        raise ParameterError(f"{what} takes {count} parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise ParameterError(f"{what} parameters must be integers") from None


def _cmd_gen(args):
    fam = args.family
    if fam == "path":
        g = graphs.path_graph(_int_params(args.params, 1, fam)[0])
    elif fam == "cycle":
        g = graphs.cycle_graph(_int_params(args.params, 1, fam)[0])
    elif fam == "complete":
        g = graphs.complete_graph(_int_params(args.params, 1, fam)[0])
    elif fam == "hyperoctahedron":
        g = graphs.hyperoctahedron(_int_params(args.params, 1, fam)[0])
    elif fam == "star":
        if not args.params:
            raise ParameterError("star needs at least one ray length")
        try:
            rays = tuple(int(p) for p in args.params)
        except ValueError:
            raise ParameterError("star ray lengths must be integers") from None
        g = graphs.star_tree(rays)
    else:
        if len(args.params) != 2:
            raise ParameterError(f"{fam} takes two graph files")
        g1, g2 = _load_graph(args.params[0]), _load_graph(args.params[1])
        if fam == "strong":
            g = graphs.strong_product(g1, g2)
        else:
            stem, ext = os.path.splitext(args.out)
            for i, comp in enumerate(graphs.tensor_product(g1, g2)):
                path = f"{stem}_c{i}{ext}"
                with open(path, "w") as fh:
                    fh.write(graphs.graph_to_text(comp))
                print(path)
            return 0
    with open(args.out, "w") as fh:
        fh.write(graphs.graph_to_text(g))
    print(args.out)
    return 0


def _cmd_dist(args):
    g = _load_graph(args.graphfile)
    dm = g.distances()
    for row in dm.dist:
        print(" ".join(str(int(x)) for x in row))
    print(f"diameter {dm.diameter}")
    return 0


def _cmd_helly(args):
    g = _load_graph(args.graphfile)
    scaled = args.d is not None or args.t is not None
    plain = args.n is not None or args.m is not None
    if scaled == plain:
        raise ParameterError("give either --n/--m or --d/--t")
    if scaled:
        if args.d is None or args.t is None:
            raise ParameterError("--d and --t go together")
        if args.bipartite:
            raise ParameterError("--bipartite does not combine with --d/--t")
        result = t_helly_check(g, args.d, args.t)
    else:
        if args.n is None or args.m is None:
            raise ParameterError("--n and --m go together")
        if args.bipartite:
            result = bipartite_helly_check(g, args.n, args.m)
        else:
            result = helly_check(g, args.n, args.m)
    if result is True:
        print("holds")
        return 0
    sys.stdout.write(violation_to_text(result))
    return 1


def _extension_inputs(args):
    base = os.path.dirname(os.path.abspath(args.mapfile))
    with open(args.mapfile) as fh:
        f = map_from_text(fh.read(), base)
    if args.t is not None:
        from .extension import PartialMap

        f = PartialMap(
            f.target, f.entries, d=f.d, domain_graph=f.domain_graph, lipschitz_t=args.t
        )
    if args.box is not None:
        if f.d is None:
            raise ParameterError("--box needs a lattice-domain map")
        points = list(box_vertices(Box(f.d, args.box)))
    else:
        points = []
        with open(args.targets) as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    points.append(point_from_text(line))
        if f.d is None:
            raise ParameterError("points files need a lattice-domain map")
    s = sorted(set(points) | set(f.entries))
    return f, s


def _print_entries(entries):
    for p in sorted(entries):
        print(f"{point_to_text(p)} -> {entries[p]}")


def _cmd_extend(args):
    f, s = _extension_inputs(args)
    out = greedy_extend(f, s)
    if out.ok:
        _print_entries(out.map.entries)
        return 0
    print(f"stuck {point_to_text(out.stuck_point)}")
    for center, radius in out.constraints:
        print(f"ball {center} {radius}")
    return 1


def _cmd_holefill(args):
    base = os.path.dirname(os.path.abspath(args.boundary))
    with open(args.boundary) as fh:
        bc = boundary_from_text(fh.read(), base)
    decision = hole_fill_decide(bc)
    if decision is not True:
        print("no")
        print(
            f"pair {point_to_text(decision.p)} {point_to_text(decision.q)} "
            f"l1 {decision.d_domain} target {decision.d_target}"
        )
        return 1
    print("yes")
    if args.construct:
        out = hole_fill_construct(bc)
        if not out.ok:
            print(f"stuck {point_to_text(out.stuck_point)}")
            for center, radius in out.constraints:
                print(f"ball {center} {radius}")
            return 1
        _print_entries(out.map.entries)
    return 0


def _cmd_oracle(args):
    if args.oracle_command == "extend":
        f, s = _extension_inputs(args)
        ok = brute_force_extend(f, s)
        print("extendable" if ok else "not extendable")
        return 0 if ok else 1
    g = _load_graph(args.graphfile)
    result = brute_force_helly(g, args.n, args.m)
    if result is True:
        print("holds")
        return 0
    sys.stdout.write(violation_to_text(result))
    return 1


def _cmd_harness(args):
    report = kirszbraun_equivalence_harness(
        args.d, args.max_vertices, seed=args.seed, jobs=args.jobs
    )
    sys.stdout.write(report.to_text())
    return 0 if report.all_agree else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "dist": _cmd_dist,
        "helly": _cmd_helly,
        "extend": _cmd_extend,
        "holefill": _cmd_holefill,
        "oracle": _cmd_oracle,
        "harness": _cmd_harness,
    }
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
