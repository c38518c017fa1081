"""Run every verification workflow and save the reports.

Usage: python3 scripts/run_experiments.py [--nodes N] [--budget SECONDS] [--out DIR]

With a node limit the results are reproducible across machines; without one
each decision call is capped by wall-clock time only.
"""

import argparse
import time
from pathlib import Path

from dycross.solver import Budget
from dycross.verify import verify_move_chain, verify_petersen, verify_second_move, verify_single_move


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=2000, help="search node limit per decision")
    ap.add_argument("--budget", type=float, default=60.0, help="wall-clock seconds per decision")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    budget = Budget(time_limit=args.budget, node_limit=args.nodes, seed=args.seed)
    runs = {
        "petersen": lambda: verify_petersen(budget),
        "single_move_n6": lambda: verify_single_move(6, budget),
        "single_move_n7": lambda: verify_single_move(7, budget),
        "second_move_n7": lambda: verify_second_move(7, budget),
        "chain_n7_k2": lambda: verify_move_chain(7, 2, budget),
        "chain_n9_k2": lambda: verify_move_chain(9, 2, budget),
    }
    args.out.mkdir(parents=True, exist_ok=True)
    for name, run in runs.items():
        t0 = time.monotonic()
        text = run().render()
        (args.out / f"{name}.txt").write_text(text + "\n")
        print(f"== {name} ({time.monotonic() - t0:.1f}s)\n{text}\n", flush=True)


if __name__ == "__main__":
    main()
