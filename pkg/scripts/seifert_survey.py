"""Survey Alexander classes of random valid Seifert matrices.

Draws matrices with the symmetric-plus-symplectic recipe and tabulates how
often the class is a unit (no certificate) versus nontrivial, along with the
most common classes and a |Delta(1)| sanity count.

    python scripts/seifert_survey.py --samples 2000 --sizes 2 4 6 --seed 1
"""

import argparse
import random
from collections import Counter

from knotproj.laurent import lp_eval
from knotproj.seifert import alexander_class, alexander_polynomial, random_valid_seifert


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 4, 6])
    ap.add_argument("--bound", type=int, default=3, help="entry bound for the symmetric part")
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--top", type=int, default=8)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for size in args.sizes:
        classes = Counter()
        units = bad_eval = 0
        for _ in range(args.samples):
            S = random_valid_seifert(rng, size, args.q, args.bound)
            c = alexander_class(S)
            classes[str(c)] += 1
            units += c.is_unit()
            bad_eval += abs(lp_eval(alexander_polynomial(S), 1)) != 1
        print(f"size {size}: {args.samples} samples, {units} unit classes, "
              f"{len(classes)} distinct, |Delta(1)| != 1 in {bad_eval}")
        for text, count in classes.most_common(args.top):
            print(f"    {count:6d}  {text}")


if __name__ == "__main__":
    main()
