"""Exhaustive check of the K_n breaker, with and without isomorphism reduction.

    python scripts/verify_complete.py [--full-k7]

Prints, for K_6 and K_7, the explored B nodes, the latest A-move that wins,
which star positions occurred after round 3 and where each A move came
from (star, template, search).
"""

import argparse
import time

from symgame.graphs import make_graph
from symgame.solver import solve_sym
from symgame.strategies import verify_breaker_complete


def report(n, reduce):
    t0 = time.perf_counter()
    s = verify_breaker_complete(n, reduce=reduce)
    print(f"K{n} reduce={reduce}: nodes={s['nodes']} latest_win={s['latest_win']} all_win={s['all_win']} "
          f"positions={dict(sorted(s['positions'].items(), key=str))} sources={dict(s['sources'])} "
          f"({time.perf_counter() - t0:.1f}s)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full-k7", action="store_true", help="unreduced K_7 (about 40 s)")
    args = ap.parse_args()
    report(6, True)
    report(6, False)
    report(7, True)
    if args.full_k7:
        report(7, False)
    print(f"exact L(Sym(K6)) = {solve_sym(make_graph('complete', 6)).value}")


if __name__ == "__main__":
    main()
