"""Self-perimeters of random centrally symmetric polygons.

Samples symmetric polygons with rational vertices and reports the range of
the perimeter measured in their own norm, which must stay within [6, 8].

    python scripts/self_perimeter_range.py --count 500 --max-vertices 20
"""

import argparse
import random
from fractions import Fraction

from kisslab.convex import DegenerateHullError, convex_hull, minkowski_perimeter
from kisslab.geom import Point


def random_symmetric(rng, max_vertices, bound):
    while True:
        pts = []
        for _ in range(rng.randint(2, max_vertices // 2)):
            p = Point(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)),
                      Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
            pts += [p, -p]
        try:
            return convex_hull(pts)
        except DegenerateHullError:
            pass


def main():
    ap = argparse.ArgumentParser(description="self-perimeter range of symmetric polygons")
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-vertices", type=int, default=20)
    ap.add_argument("--bound", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    lo = hi = None
    by_n = {}
    for _ in range(args.count):
        B = random_symmetric(rng, args.max_vertices, args.bound)
        p = minkowski_perimeter(B, B)
        lo = p if lo is None or p < lo else lo
        hi = p if hi is None or p > hi else hi
        by_n.setdefault(len(B.vertices), []).append(p)
    print(f"samples={args.count} min={float(lo):.6f} max={float(hi):.6f} "
          f"in_range={6 <= lo and hi <= 8}")
    for n in sorted(by_n):
        ps = by_n[n]
        print(f"  {n:2d} vertices: {len(ps):4d} samples, min {float(min(ps)):.4f}, max {float(max(ps)):.4f}")


if __name__ == "__main__":
    main()
