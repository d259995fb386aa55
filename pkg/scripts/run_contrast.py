#!/usr/bin/env python3
"""Contrast family table: inversion extensions keep bounded sinks while the
nilpotent residual grows as p^r and no bounded-order normal subgroup has a
nilpotent quotient.

Usage: python3 scripts/run_contrast.py [-p P] [--max-rank R] [--out CSV]
"""

import argparse
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from sinklab.report import scan_csv  # noqa: E402
from sinklab.verify import CSV_COLUMNS, contrast_report  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-p", type=int, default=3)
    parser.add_argument("--max-rank", type=int, default=4)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    rows = contrast_report(args.p, args.max_rank)
    print(CSV_COLUMNS.replace(",", "  "))
    for row in rows:
        print("  ".join(row.csv_values()))
    print("\nmFull stays constant while residualOrder grows as p^r.")
    if args.out:
        Path(args.out).write_text(scan_csv(rows), encoding="utf-8", newline="\n")
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
