"""Command-line entry point: ``dycross <subcommand> ...``."""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import drawing as drawing_mod
from . import graph as graph_mod
from .family import move_closure, petersen_family
from .graph import Graph, Triangle, delta_y, named_graph, y_delta
from .iso import canonical_form
from .render import to_svg
from .solver import Budget, crossing_number, registry, upper_bound
from .verify import (CONFIRMED, CONSISTENT, REFUTED, verify_move_chain, verify_petersen, verify_second_move,
                     verify_single_move)

EXIT = {CONFIRMED: 0, CONSISTENT: 0, REFUTED: 1}


class UsageError(Exception):
    pass


def parse_duration(text: str) -> float:
    m = re.fullmatch(r"\s*([0-9]*\.?[0-9]+)\s*(ms|s|m|h)?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"bad duration {text!r} (try 60s, 2m, 500ms)")
    scale = {"ms": 1e-3, "s": 1, "m": 60, "h": 3600, None: 1}[m[2]]
    value = float(m[1]) * scale
    if value <= 0:
        raise argparse.ArgumentTypeError("duration must be positive")
    return value


def _budget(args) -> Budget:
    return Budget(time_limit=args.budget, node_limit=args.nodes, seed=args.seed, workers=args.workers,
                  restarts=args.restarts)


def _load_graph(args) -> Graph:
    if getattr(args, "name", None):
        return named_graph(args.name)
    if getattr(args, "inp", None):
        text = Path(args.inp).read_text()
        if text.startswith("drawing v1"):
            return drawing_mod.loads(text).base
        return graph_mod.loads(text)
    raise UsageError("give --name or --in")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    _emit(graph_mod.dumps(_load_graph(args)), args.out)
    return 0


def cmd_moves(args) -> int:
    g = _load_graph(args)
    for move in args.move or []:
        kind, _, site = move.partition(":")
        try:
            ids = [int(x) for x in site.split(",")]
        except ValueError:
            raise UsageError(f"bad move site {site!r}") from None
        if kind.lower() == "dy" and len(ids) == 3:
            g, step = delta_y(g, Triangle(*ids))
        elif kind.lower() == "yd" and len(ids) == 1:
            g, step = y_delta(g, ids[0])
        else:
            raise UsageError(f"bad move {move!r}; use dy:a,b,c or yd:v")
        print(f"# {step.kind} at {site}: vertex {step.new_vertex}"
              + (f", merged {step.simplified_edges} edges" if step.simplified_edges else ""), file=sys.stderr)
    _emit(graph_mod.dumps(g), args.out)
    return 0


def cmd_family(args) -> int:
    g = _load_graph(args) if (args.name or args.inp) else named_graph("K6")
    closure = move_closure(g, args.max_members)
    names = {canonical_form(h): name for name, h in petersen_family().items()}
    members = closure.graphs()
    index = {canonical_form(h): i for i, h in enumerate(members)}
    lines = [f"{len(members)} members"]
    for i, h in enumerate(members):
        lines.append(f"[{i}] n={h.n} m={h.m} {names.get(canonical_form(h), '')}".rstrip())
    edges = sorted({(index[a], s.kind, index[b]) for a, s, b in closure.moves if a != b})
    lines += [f"  {a} --{k}--> {b}" for a, k, b in edges]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_cr(args) -> int:
    g = _load_graph(args)
    b = crossing_number(g, _budget(args), args.max_k)
    lines = [f"graph: n={g.n} m={g.m}",
             f"lb: {b.lb} ({b.lb_certificate})", f"ub: {b.ub}", f"status: {b.status}",
             f"nodes: {b.nodes}", f"elapsed: {b.elapsed:.2f}s"]
    if args.name:
        try:
            r = registry(args.name)
            lines.append(f"published: {r.value} [external: {r.source}]")
        except KeyError:
            pass
    lines += [f"  {line}" for line in b.log]
    print("\n".join(lines))
    if args.out:
        text = to_svg(b.witness) if args.format == "svg" else drawing_mod.dumps(b.witness)
        Path(args.out).write_text(text)
    return 0


def cmd_draw(args) -> int:
    if args.inp and Path(args.inp).read_text().startswith("drawing v1"):
        d = drawing_mod.loads(Path(args.inp).read_text())
    else:
        d = upper_bound(_load_graph(args), _budget(args))
    _emit(to_svg(d) if args.format == "svg" else drawing_mod.dumps(d), args.out)
    return 0


def cmd_verify(args) -> int:
    budget = _budget(args)
    if args.which == "thm1":
        rep = verify_single_move(args.n or 7, budget, args.max_k)
    elif args.which == "thm2":
        rep = verify_second_move(args.n or 7, budget, args.max_k)
    elif args.which == "thm3":
        rep = verify_move_chain(args.n or 7, 2 if args.k is None else args.k, budget, args.max_k)
    else:
        rep = verify_petersen(budget, args.max_k)
    _emit(rep.render() + "\n", args.out)
    return EXIT.get(rep.verdict, 3)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dycross", description="Delta-Y moves and crossing numbers")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("--name", help="named graph, e.g. K7, K3,3, Heawood, Q8, Gnk(9,2)")
            p.add_argument("--in", dest="inp", help="edge-list or drawing file")
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--budget", type=parse_duration, default=60.0, help="wall clock per decision (60s)")
        p.add_argument("--nodes", type=int, default=None, help="search node limit")
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--restarts", type=int, default=50, help="heuristic restarts")
        p.add_argument("--max-k", dest="max_k", type=int, default=None, help="deepest k to decide")
        p.add_argument("--format", choices=("text", "svg"), default="text")

    common(sub.add_parser("gen", help="write a named graph as an edge list"))
    p = sub.add_parser("moves", help="apply Delta-Y / Y-Delta moves by site")
    common(p)
    p.add_argument("--move", action="append", help="dy:a,b,c or yd:v; repeat, applied in order")
    p = sub.add_parser("family", help="closure under Delta-Y and Y-Delta moves")
    common(p)
    p.add_argument("--max-members", type=int, default=1000)
    common(sub.add_parser("cr", help="crossing number bounds"))
    common(sub.add_parser("draw", help="render a drawing (or a heuristic drawing of a graph)"))
    p = sub.add_parser("verify", help="check one of the statements")
    p.add_argument("which", choices=("thm1", "thm2", "thm3", "petersen"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    common(p, graph=False)
    return ap


COMMANDS = {"gen": cmd_gen, "moves": cmd_moves, "family": cmd_family, "cr": cmd_cr,
            "draw": cmd_draw, "verify": cmd_verify}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"dycross: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
