"""Wall time of the all-sources BFS engine against the O(1) Wiener formula.

    python scripts/bench_scaling.py --ks 50 100 200 400 800
"""

import argparse
import json
import time

from sunwiener.distances import distance_summary
from sunwiener.graph import sun
from sunwiener.indices import wiener_pairwise
from sunwiener.sun_forms import wiener_sun


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return time.perf_counter() - t0, value


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--ks", type=int, nargs="+", default=[50, 100, 200, 400, 800])
    args = ap.parse_args()
    for k in args.ks:
        build_s, g = timed(lambda: sun(k))
        distance_summary.cache_clear()
        engine_s, w = timed(lambda: wiener_pairwise(g))
        closed_s, wc = timed(lambda: wiener_sun(k))
        assert w == wc, (k, w, wc)
        row = {"k": k, "n": g.n, "m": g.m, "build_s": build_s, "engine_s": engine_s,
               "closed_s": closed_s, "wiener": w}
        print(json.dumps(row, sort_keys=True))


if __name__ == "__main__":
    main()
