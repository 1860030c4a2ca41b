"""Decomposition families and extremal profiles for the worked bases.

Prints one line per base: member count, size of the division family, and
the profile (q, k, small-cover family as graph6).  ``--json`` dumps the full
family reports instead.
"""

import argparse
import json
import time

from oddballoon.ballooning import BallooningSpec, decomposition_family, division_family, family_report, profile
from oddballoon.formats import encode_graph6
from oddballoon.graph import complete_bipartite, cycle, path, star

BASES = {
    "S2": star(2), "S3": star(3), "S4": star(4),
    "P3": path(3), "P4": path(4), "P5": path(5), "P6": path(6),
    "C4": cycle(4), "C6": cycle(6), "K23": complete_bipartite(2, 3),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--t", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--bases", default="S2,S3,S4,P3,P4,P5,P6,C4")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    reports = {}
    for name in args.bases.split(","):
        g = BASES[name]
        start = time.perf_counter()
        fam = decomposition_family(BallooningSpec(g, args.t), args.jobs)
        prof = profile(fam)
        reports[name] = family_report(fam, prof)
        if not args.json:
            small = ",".join(encode_graph6(h) for h in prof.small_cover_graphs)
            print(
                f"{name:4s} members={len(fam.members):3d} divisions={len(division_family(g)):3d} "
                f"q={prof.q} k={prof.k} small_cover={small} fallback={prof.fallback} "
                f"({time.perf_counter() - start:.1f}s)"
            )
    if args.json:
        print(json.dumps(reports, sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
