"""Run every config in scripts/configs and write one CSV per config to results/.

    python scripts/bounds_table.py [--only paths_translated] [--workers 8]

Each CSV is the output of ``symgame bounds`` for that config, so reruns are
byte-identical.  A one-line summary per config reports the rows outside
their bounds and the largest C with rounds = 3.5 log^2 n + C log n.
"""

import argparse
import math
import pathlib

from symgame.experiments import ExperimentConfig, run_experiment, write_rows

HERE = pathlib.Path(__file__).resolve().parent


def summarize(name, rows):
    fails = [r for r in rows if not r.passed]
    c = max((r.rounds - 3.5 * math.log2(r.n) ** 2) / math.log2(r.n) for r in rows)
    return f"{name}: {len(rows)} rows, {len(fails)} outside bounds, max C = {c:.4f}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", nargs="*")
    ap.add_argument("--workers", type=int)
    ap.add_argument("--out-dir", default=str(HERE.parent / "results"))
    args = ap.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for path in sorted((HERE / "configs").glob("*.json")):
        if args.only and path.stem not in args.only:
            continue
        config = ExperimentConfig.from_json(str(path)).override(workers=args.workers)
        rows = run_experiment(config)
        write_rows(rows, str(out / f"{path.stem}.csv"))
        print(summarize(path.stem, rows))


if __name__ == "__main__":
    main()
