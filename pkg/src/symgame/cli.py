"""Command line front end: ``symgame {solve,play,ef,bounds,verify}``.

Every command is deterministic given its flags and seed.  ``bounds`` reads
one flat JSON config; any flag given on the command line overrides the
matching field.
"""

from __future__ import annotations

import argparse
import json
import sys

from .engine import interactive_play, play_sym
from .errors import CapabilityError, InvariantViolation, ParameterError
from .experiments import ExperimentConfig, parse_range, run_experiment, write_rows
from .graphs import parse_graph_spec
from .solver import solve_ef, solve_sym
from .strategies import STRATEGIES, make_strategy


def cmd_solve(args) -> int:
    g = parse_graph_spec(args.graph)
    minmax = solve_sym(g, args.variant, order="minmax", reduction=args.reduction)
    maxmin = solve_sym(g, args.variant, order="maxmin", reduction=args.reduction, fresh=True)
    if args.json:
        out = minmax.to_json()
        out.update({"minmax": minmax.value, "maxmin": maxmin.value, "agree": minmax.value == maxmin.value})
        del out["elapsed"]
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"{g.name} {args.variant}: L = {minmax.value} (minmax {minmax.value}, maxmin {maxmin.value}, "
              f"{minmax.states_expanded} states)")
    return 0 if minmax.value == maxmin.value else 1


def cmd_play(args) -> int:
    g = parse_graph_spec(args.graph)
    if args.human:
        machine_side = "B" if args.human == "A" else "A"
        machine = make_strategy(args.b if machine_side == "B" else args.a, g, machine_side)
        outcome, transcript = interactive_play(g, args.human, machine, args.variant, args.seed)
    else:
        a = make_strategy(args.a, g, "A")
        b = make_strategy(args.b, g, "B")
        outcome, transcript = play_sym(g, a, b, args.variant, args.round_limit, args.seed)
        if args.json:
            print(json.dumps(transcript, sort_keys=True))
        else:
            for i, r in enumerate(transcript["rounds"], 1):
                print(f"{i:4d}  A {r['a_edge']}  B {r['b_edge']}  {'ok' if r['iso_ok'] else 'broken'}")
            print(f"winner {outcome.winner}, survived {outcome.survived_rounds} rounds ({outcome.reason})")
    if args.transcript:
        with open(args.transcript, "w") as fh:
            json.dump(transcript, fh, sort_keys=True, indent=1)
    return 0


def cmd_ef(args) -> int:
    g0, g1 = parse_graph_spec(args.g0), parse_graph_spec(args.g1)
    rep = solve_ef(g0, g1, vertex_budget=args.vertex_budget)
    if args.json:
        out = rep.to_json()
        del out["elapsed"]
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"D({g0.name}, {g1.name}) = {rep.value}")
    return 0


def cmd_bounds(args) -> int:
    config = ExperimentConfig.from_json(args.config) if args.config else ExperimentConfig()
    config = config.override(family=args.family, ns=parse_range(args.ns) if args.ns else None,
                             variant=args.variant, a_strategy=args.a, b_strategy=args.b,
                             seeds=parse_range(args.seeds) if args.seeds else None, workers=args.workers,
                             round_limit=args.round_limit, out=args.out, timing=True if args.timing else None)
    rows = run_experiment(config)
    text = write_rows(rows, config.out)
    if not config.out:
        sys.stdout.write(text)
    failed = [r for r in rows if not r.passed]
    print(f"{len(rows)} rows, {len(failed)} outside their bounds", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    from .acceptance import run_acceptance

    only = set(parse_range(args.only)) if args.only else None
    results = run_acceptance(only)
    failed = [r for r in results if not r.passed]
    if failed:
        first = failed[0]
        print(f"first failing criterion: {first.number} ({first.name})", file=sys.stderr)
        return 1
    print(f"all {len(results)} criteria pass")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symgame", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    names = ", ".join(STRATEGIES)

    s = sub.add_parser("solve", help="exact length of Sym(G) / Sym+(G)")
    s.add_argument("--graph", required=True, help="P5, C7, K6, K3,3 or a JSON graph")
    s.add_argument("--variant", default="sym", choices=["sym", "sym_plus"])
    s.add_argument("--reduction", default="automorphism", choices=["automorphism", "none"])
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_solve)

    s = sub.add_parser("play", help="play one game between two strategies")
    s.add_argument("--graph", required=True)
    s.add_argument("--a", default="optimal", help=f"A strategy ({names})")
    s.add_argument("--b", default="optimal", help="B strategy")
    s.add_argument("--variant", default="sym", choices=["sym", "sym_plus"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--round-limit", type=int)
    s.add_argument("--human", choices=["A", "B"], help="play this side from the terminal")
    s.add_argument("--json", action="store_true")
    s.add_argument("--transcript", help="write the transcript JSON here")
    s.set_defaults(fn=cmd_play)

    s = sub.add_parser("ef", help="exact length of EF(G0, G1)")
    s.add_argument("--g0", required=True)
    s.add_argument("--g1", required=True)
    s.add_argument("--vertex-budget", type=int, default=20)
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_ef)

    s = sub.add_parser("bounds", help="bounds table as CSV")
    s.add_argument("--config", help="flat JSON config file")
    s.add_argument("--family", choices=["path", "cycle"])
    s.add_argument("--ns", help="e.g. 9..201 or 9,17,33")
    s.add_argument("--variant", choices=["sym", "sym_plus"])
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--seeds", help="e.g. 0..4")
    s.add_argument("--workers", type=int)
    s.add_argument("--round-limit", type=int)
    s.add_argument("--timing", action="store_true", help="fill the elapsed_ms column")
    s.add_argument("--out")
    s.set_defaults(fn=cmd_bounds)

    s = sub.add_parser("verify", help="run the acceptance criteria")
    s.add_argument("--only", help="criterion numbers, e.g. 1..3,7")
    s.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParameterError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
