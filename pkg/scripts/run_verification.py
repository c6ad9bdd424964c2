#!/usr/bin/env python3
"""Run the full verification sweep and write JSONL reports.

Produces out/guaranteed.jsonl (asserted over discrete spaces, exits
nonzero on any failure) and out/explore.jsonl (recorded verdicts over all
canonical topologies up to 4 points), printing the summary tables.
"""

import argparse
import sys
from pathlib import Path

from annigraph import veritas


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="out")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--hom-trials", type=int, default=1000)
    args = ap.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    guaranteed, ok = veritas.run_suite(
        "guaranteed", hom_trials=args.hom_trials, seed=args.seed
    )
    (out_dir / "guaranteed.jsonl").write_text(
        "".join(r.to_json_line() + "\n" for r in guaranteed)
    )
    print(veritas.summarize(guaranteed))
    print()

    explore, _ = veritas.run_suite(
        "explore", n_lo=2, n_hi=4, hom_trials=args.hom_trials, seed=args.seed
    )
    (out_dir / "explore.jsonl").write_text(
        "".join(r.to_json_line() + "\n" for r in explore)
    )
    print(veritas.summarize(explore))

    print(f"\nreports written to {out_dir}/")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
