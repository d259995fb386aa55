#!/usr/bin/env python3
"""Scan the bundled corpus and print the sink/Fitting table.

Usage: python3 scripts/run_corpus_scan.py [-k K] [--corpus DIR] [--out CSV]
"""

import argparse
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from sinklab.cli import load_corpus  # noqa: E402
from sinklab.report import scan_csv  # noqa: E402
from sinklab.specfile import build_spec, parse_spec_file  # noqa: E402
from sinklab.verify import CSV_COLUMNS, theorem_scan  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-k", type=int, default=2)
    parser.add_argument("--corpus", default=str(REPO / "corpus"))
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    corpus = []
    for group_id, path in load_corpus(args.corpus):
        spec = parse_spec_file(path)
        corpus.append((spec.display_name(group_id), build_spec(spec)))
    rows, errors = theorem_scan(corpus, args.k)

    header = CSV_COLUMNS.split(",")
    widths = [max(len(h), max((len(v) for v in col), default=0))
              for h, col in zip(header, zip(*(r.csv_values() for r in rows)))]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(v.ljust(w) for v, w in zip(row.csv_values(), widths)))
    for group_id, message in errors:
        print(f"error: {group_id}: {message}", file=sys.stderr)
    if args.out:
        Path(args.out).write_text(scan_csv(rows), encoding="utf-8", newline="\n")
        print(f"\nwrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
