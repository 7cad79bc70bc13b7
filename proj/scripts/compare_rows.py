#!/usr/bin/env python3
"""Run `gossipnet analyze` on user-supplied networks and compare sigma, beta
and CC with reference values.

The reference file is a CSV with columns name,path,sigma,beta,CC. Paths are
relative to the reference file. Rows whose file is missing are skipped.

    scripts/compare_rows.py --gossipnet build/tools/gossipnet --reference refs.csv
"""

import argparse
import csv
import pathlib
import subprocess
import sys


def analyze(gossipnet, path, workers):
    out = subprocess.run(
        [gossipnet, "analyze", "--input", str(path), "--out", "-", "--workers", str(workers)],
        check=True, capture_output=True, text=True,
    ).stdout
    return next(csv.DictReader(out.splitlines()))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gossipnet", default="build/tools/gossipnet")
    ap.add_argument("--reference", required=True)
    ap.add_argument("--tolerance", type=float, default=0.05)
    ap.add_argument("--workers", type=int, default=4)
    args = ap.parse_args()

    ref_path = pathlib.Path(args.reference)
    failed = compared = 0
    with ref_path.open(newline="") as f:
        for row in csv.DictReader(f):
            path = ref_path.parent / row["path"]
            if not path.exists():
                print(f"SKIP {row['name']}: {path} not found")
                continue
            got = analyze(args.gossipnet, path, args.workers)
            for field in ("sigma", "beta", "CC"):
                if not row.get(field):
                    continue
                want, have = float(row[field]), float(got[field]) if got[field] else float("nan")
                ok = abs(have - want) <= args.tolerance
                failed += not ok
                compared += 1
                print(f"{'PASS' if ok else 'FAIL'} {row['name']} {field}={have:.4f} reference {want:.4f}")
    print(f"{compared} comparisons, {failed} outside +/- {args.tolerance}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
