"""Command-line front end.

Exit status: 0 on success, 1 when a check fails (or the input is not
chordal for ``solve``), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from fractions import Fraction

from . import battery
from .auxgraph import build_aux_direct
from .chordal import is_chordal, maximal_cliques_chordal, maximal_cliques_general, peo
from .colgen import ColgenConfig, NotChordalError, solve_co3plex
from .graph import CapExceeded, Graph, default_cap, generate_random_chordal, \
    read_graph, write_graph
from .lp import write_lp_format
from .pricing import DUAL, PAPER
from .structures import ComponentCatalog
from .verify import integrality_stress

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def vset(vs) -> str:
    return ",".join(map(str, vs))


def emit_kv(pairs) -> None:
    for k, v in pairs:
        print(f"{k}={v}")


def parse_gen(spec: str) -> tuple[int, Fraction, int]:
    try:
        n, density, seed = spec.split(",")
        return int(n), Fraction(density), int(seed)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,density,seed; got {spec!r}") from None


def parse_range(spec: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in spec.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo,hi; got {spec!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {spec!r}")
    return lo, hi


def load_graph(args, required: bool = True) -> Graph | None:
    if args.input and args.gen:
        raise UsageError("give either --input or --gen, not both")
    if args.input:
        try:
            g = read_graph(args.input)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    elif args.gen:
        n, density, seed = args.gen
        g = generate_random_chordal(n, density, seed)
    elif required:
        raise UsageError("an input graph is required (--input PATH or --gen n,density,seed)")
    else:
        return None
    if getattr(args, "weights", None):
        rng = random.Random(args.seed)
        g = g.with_weights([rng.randint(*args.weights) for _ in g.vertices])
    return g


def cmd_solve(args) -> int:
    g = load_graph(args)
    config = ColgenConfig(pricing=args.pricing, columns_per_iteration=args.columns,
                          certify=args.certify, cap=args.cap)
    try:
        rep = solve_co3plex(g, config)
    except NotChordalError:
        if args.format == "kv":
            emit_kv([("status", "not-chordal")])
        else:
            print("not chordal")
        return EXIT_FAIL
    if args.lp:
        with open(args.lp, "w", encoding="utf-8") as fh:
            fh.write(write_lp_format(rep.model))
    if args.format == "kv":
        pairs = [("status", "optimal"), ("n", g.n), ("m", g.m),
                 ("objective", frac(rep.objective)), ("vertices", vset(rep.solution.s)),
                 ("components", ";".join(vset(c) for c in rep.solution.components)),
                 ("iterations", rep.iterations), ("columns_added", rep.columns_added),
                 ("certificate", rep.certificate)]
        for i, rec in enumerate(rep.log, start=1):
            pairs.append((f"iter.{i}.objective", frac(rec.objective)))
            rc = "none" if rec.best_reduced_cost is None else frac(rec.best_reduced_cost)
            pairs.append((f"iter.{i}.best_reduced_cost", rc))
        emit_kv(pairs)
    else:
        print(f"optimum {rep.objective}; S = {{{vset(rep.solution.s)}}}")
        print("components: " + " ".join("{" + vset(c) + "}" for c in rep.solution.components))
        print(f"iterations {rep.iterations}, columns added {rep.columns_added}, "
              f"{rep.certificate}")
        if args.verbose:
            for i, rec in enumerate(rep.log, start=1):
                rc = "-" if rec.best_reduced_cost is None else str(rec.best_reduced_cost)
                print(f"  {i:4d}  objective {rec.objective}  best reduced cost {rc}")
    return EXIT_OK


def cmd_check(args) -> int:
    g = load_graph(args)
    order = peo(g)
    if args.format == "kv":
        emit_kv([("chordal", str(order is not None).lower()),
                 ("peo", vset(order) if order else "")])
    elif order is None:
        print("not chordal")
    else:
        print(f"chordal; perfect elimination ordering {vset(order)}")
    return EXIT_OK


def cmd_cliques(args) -> int:
    g = load_graph(args)
    chordal = is_chordal(g)
    cliques = maximal_cliques_chordal(g) if chordal else maximal_cliques_general(g)
    if args.format == "kv":
        pairs = [("chordal", str(chordal).lower()), ("count", len(cliques))]
        pairs += [(f"clique.{i}", vset(k)) for i, k in enumerate(cliques, start=1)]
        emit_kv(pairs)
    else:
        print(f"{len(cliques)} maximal cliques ({'chordal' if chordal else 'general'} enumeration)")
        for k in cliques:
            print("{" + vset(k) + "}")
    return EXIT_OK


def cmd_aux(args) -> int:
    g = load_graph(args)
    a = build_aux_direct(g, ComponentCatalog.of(g, args.cap), args.cap)
    comments = [f"auxiliary graph of a {g.n}-vertex graph"]
    comments += [f"label {i} {kind} {vset(sorted(node))}"
                 for i, (node, kind) in enumerate(zip(a.nodes, a.kinds), start=1)]
    sys.stdout.write(write_graph(Graph(len(a.nodes), a.to_graph().edges), comments))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = battery.run_battery(trials=args.trials, seed=args.seed, quick=args.quick)
    g = load_graph(args, required=False)
    if g is not None:
        # A fractional optimum is only a failure on chordal input; otherwise it is reported.
        chordal = is_chordal(g)
        integral = integrality_stress(g, args.trials, args.seed, components=True, cap=args.cap)
        results.append(battery.CheckResult(
            "integrality on input", integral or not chordal,
            f"{'chordal' if chordal else 'non-chordal'} input, "
            f"fractional optimum {'not ' if integral else ''}found"))
    if args.format == "kv":
        emit_kv([(f"check.{r.name.replace(' ', '_')}", "pass" if r.passed else "fail")
                 for r in results])
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_gen(args) -> int:
    if not args.gen:
        raise UsageError("gen needs --gen n,density,seed")
    g = load_graph(args)
    n, density, seed = args.gen
    sys.stdout.write(write_graph(g, [f"random chordal graph n={n} density={density} seed={seed}"]))
    return EXIT_OK


def cmd_bench(args) -> int:
    g0 = load_graph(args)
    rows = []
    for trial in range(args.trials):
        rng = random.Random(args.seed + trial)
        g = g0.with_weights([rng.randint(1, 10) for _ in g0.vertices])
        start = time.perf_counter()
        rep = solve_co3plex(g, ColgenConfig(pricing=args.pricing, cap=args.cap))
        elapsed = time.perf_counter() - start
        rows.append((trial, g.n, g.m, len(rep.model.cliques), rep.iterations,
                     rep.columns_added, rep.objective, elapsed))
    if args.format == "kv":
        pairs = []
        for trial, n, m, k, it, cols, obj, _ in rows:
            pairs += [(f"run.{trial}.n", n), (f"run.{trial}.m", m), (f"run.{trial}.cliques", k),
                      (f"run.{trial}.iterations", it), (f"run.{trial}.columns_added", cols),
                      (f"run.{trial}.objective", frac(obj))]
        emit_kv(pairs)
    else:
        print(f"{'run':>4} {'n':>5} {'m':>6} {'cliques':>8} {'iters':>6} {'cols':>6} "
              f"{'objective':>10} {'seconds':>9}")
        for trial, n, m, k, it, cols, obj, secs in rows:
            print(f"{trial:>4} {n:>5} {m:>6} {k:>8} {it:>6} {cols:>6} {str(obj):>10} {secs:>9.3f}")
    return EXIT_OK


COMMANDS = {
    "solve": (cmd_solve, "maximum-weight co-3-plex by column generation"),
    "check": (cmd_check, "chordality test with elimination ordering"),
    "cliques": (cmd_cliques, "list maximal cliques"),
    "aux": (cmd_aux, "emit the auxiliary graph in DIMACS form"),
    "verify": (cmd_verify, "run the verification battery"),
    "gen": (cmd_gen, "emit a random chordal graph"),
    "bench": (cmd_bench, "time the solver on a graph"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="DIMACS graph file")
    common.add_argument("--gen", metavar="N,DENSITY,SEED", type=parse_gen,
                        help="generate a random chordal graph instead of reading one")
    common.add_argument("--weights", metavar="LO,HI", type=parse_range,
                        help="replace vertex weights by random integers in [LO, HI]")
    common.add_argument("--pricing", choices=(DUAL, PAPER), default=DUAL)
    common.add_argument("--cap", type=int, default=None,
                        help=f"enumeration cap (default {default_cap()}, env COPLEX_CAP)")
    common.add_argument("--format", choices=("text", "kv"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="coplex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "solve":
            p.add_argument("--columns", type=int, default=1,
                           help="path columns admitted per iteration")
            p.add_argument("--certify", action="store_true",
                           help="also check every induced path against the final duals")
            p.add_argument("--lp", metavar="PATH", help="write the final master in LP format")
        if name == "verify":
            p.add_argument("--quick", action="store_true", help="reduced battery sizes")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.trials is None:
        args.trials = 100 if args.command == "verify" else 1
    if args.trials < 1 or (args.cap is not None and args.cap < 1):
        parser.error("--trials and --cap must be positive")
    if getattr(args, "columns", 1) < 1:
        parser.error("--columns must be positive")
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command][0](args)
    except (UsageError, ValueError) as exc:
        print(f"coplex: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"coplex: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
