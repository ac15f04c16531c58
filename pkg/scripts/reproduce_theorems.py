"""Run every theorem verification over a range of dimensions and print the reports.

    python scripts/reproduce_theorems.py --max-n 9
    python scripts/reproduce_theorems.py --json > reports.json
"""

import argparse
import json
import sys

from knotproj import catalog as cat


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    reports = [cat.verify_theorem2()]
    for n in range(5, args.max_n + 1):
        reports.append(cat.verify_theorem1(n))
        reports.append(cat.verify_theorem3(n))

    if args.json:
        json.dump([r.to_dict() for r in reports], sys.stdout, indent=2)
        print()
    else:
        for r in reports:
            print(r.to_text())
            print()
    failed = [r.theorem for r in reports if not r.overall]
    print(f"{len(reports)} reports, {len(failed)} failed", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
