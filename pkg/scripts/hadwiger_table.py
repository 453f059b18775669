"""Classifier bounds next to search results for every bundled fixture.

    python scripts/hadwiger_table.py [--samples 16] [--json]
"""

import argparse
import json
import time

from kisslab.family import SearchParams, search_max_family
from kisslab.fixtures import POLYGONS, STARS
from kisslab.shape import hadwiger_bounds, pockets


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="one JSON object per line instead of a table")
    args = ap.parse_args()

    params = SearchParams(samples_per_family=args.samples, seed=args.seed)
    rows = []
    for name, shape in {**POLYGONS, **STARS}.items():
        b = hadwiger_bounds(shape)
        t0 = time.perf_counter()
        res = search_max_family(shape, params)
        rows.append({
            "shape": name,
            "pockets": pockets(shape).count if name in POLYGONS else None,
            "lower": b.lower,
            "upper": b.upper,
            "found": len(res.family),
            "candidates": res.candidates,
            "exhaustive": res.exhaustive,
            "seconds": round(time.perf_counter() - t0, 2),
            "tags": [t.value for t in b.rationale],
        })
    if args.json:
        for r in rows:
            print(json.dumps(r))
        return
    print(f"{'shape':16} {'pockets':>7} {'bounds':>9} {'found':>5} {'cands':>6} {'time':>6}  tags")
    for r in rows:
        up = "inf" if r["upper"] is None else r["upper"]
        pk = "-" if r["pockets"] is None else r["pockets"]
        print(f"{r['shape']:16} {pk:>7} {str(r['lower']) + '..' + str(up):>9} {r['found']:>5} "
              f"{r['candidates']:>6} {r['seconds']:>5}s  {','.join(r['tags'])}")


if __name__ == "__main__":
    main()
