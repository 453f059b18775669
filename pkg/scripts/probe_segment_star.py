"""Search for large touching families of segment-star translates.

Stars can beat the eight translates a convex disk allows; this script
tries a few stars at increasing sample densities and prints the largest
valid family found for each. Results are lower bounds only.

    python scripts/probe_segment_star.py --samples 2 4 8
"""

import argparse
import json

from kisslab.family import SearchParams, search_max_family, validate
from kisslab.fixtures import STARS
from kisslab.io import fmt_point
from kisslab.star import SegmentStar

EXTRA = {
    "asymmetric_tripod": SegmentStar((0, 0), [(2, 0), (0, 1), (-1, -1)]),
    "five_arms": SegmentStar((0, 0), [(1, 0), (1, 1), (-1, 2), (-2, -1), (1, -2)]),
}


def main():
    ap = argparse.ArgumentParser(description="probe segment stars")
    ap.add_argument("--samples", type=int, nargs="+", default=[2, 4, 8])
    ap.add_argument("--nodes", type=int, default=50_000)
    args = ap.parse_args()

    for name, star in {**STARS, **EXTRA}.items():
        for s in args.samples:
            res = search_max_family(star, SearchParams(samples_per_family=s, max_backtrack_nodes=args.nodes))
            ok = validate(res.family).valid
            print(json.dumps({"star": name, "samples": s, "candidates": res.candidates, "size": len(res.family),
                              "exhaustive": res.exhaustive, "valid": ok,
                              "vectors": [fmt_point(v) for v in res.family.vectors]}))


if __name__ == "__main__":
    main()
