#!/usr/bin/env python3
"""Compare the numba and numpy backends of the map-enumeration kernel.

Workloads:
  homs      homomorphisms between random graphs and P8 -> K6 (edges only)
  perf      Perf morphisms between matched graphs (edges + involution)
  psts      PSTS morphisms into Fano x Fano (triple constraints)

Each workload is run once to warm up (numba compiles on first call), then
timed over --repeat runs; the best time is reported together with the
number of maps found, which must agree between backends.
"""

from __future__ import annotations

import argparse
import time

from graphmonads import _kernels
from graphmonads.category import hom_array
from graphmonads.families import complete_graph, cycle_graph, fano, matched, path_graph, random_graphs
from graphmonads.matching import perf_morphism_array
from graphmonads.steiner import make_psts, product_psts, psts_morphism_array


def workloads(seed):
    gs = random_graphs(6, 6, 8, seed=seed, p=0.6)
    pairs = [(gs[i], gs[i + 1]) for i in range(0, len(gs), 2)]
    k6 = matched(complete_graph(6), [("a", "b"), ("c", "d"), ("e", "f")])
    c8 = matched(cycle_graph(8), [("a", "b"), ("c", "d"), ("e", "f"), ("g", "h")])
    fano2 = product_psts(fano(), fano())
    two = make_psts("abcde", ["abc", "cde"])
    return {
        "homs": lambda be: (sum(len(hom_array(a, b, backend=be)) for a, b in pairs)
                            + len(hom_array(path_graph(8), complete_graph(6), backend=be))),
        "perf": lambda be: len(perf_morphism_array(c8, k6, backend=be)) + len(perf_morphism_array(k6, c8, backend=be)),
        "psts": lambda be: len(psts_morphism_array(two, fano2, cap=10**9, backend=be)),
    }


def best_time(fn, backend, repeat):
    count = fn(backend)  # warm-up / compile
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - t0)
    return min(times), count


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--only", choices=("homs", "perf", "psts"))
    args = parser.parse_args(argv)

    backends = ["numpy"] + (["numba"] if _kernels.USE_NUMBA else [])
    print(f"{'workload':<10}{'backend':<8}{'maps':>10}{'best (ms)':>12}{'speedup':>10}")
    for name, fn in workloads(args.seed).items():
        if args.only and name != args.only:
            continue
        results = {be: best_time(fn, be, args.repeat) for be in backends}
        counts = {c for _, c in results.values()}
        if len(counts) != 1:
            raise SystemExit(f"{name}: backends disagree on the map count {results}")
        base = results["numpy"][0]
        for be, (t, count) in results.items():
            print(f"{name:<10}{be:<8}{count:>10}{t * 1e3:>12.2f}{base / t:>9.1f}x")
    if not _kernels.USE_NUMBA:
        print("numba backend disabled (GRAPHMONADS_DISABLE_NUMBA is set)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
