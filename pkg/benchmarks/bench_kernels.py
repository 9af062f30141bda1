#!/usr/bin/env python3
"""Benchmark the compiled bitmask kernels against the pure-Python fallback.

Two workloads dominated by the kernel inner loops:

  * matching enumeration on m pairwise-disjoint edges (every edge subset
    is a matching, so the backtracker visits all 2^m of them), and
  * connected-subset growth on a star (every subset is connected, again
    2^m - 1 visits).

Usage: python benchmarks/bench_kernels.py [--match-edges 22] [--star-edges 18]
"""

from __future__ import annotations

import argparse
import time

from htspec import _kernels_py
from htspec.core import build, star
from htspec.matching import _conflict_masks
from htspec.subtrees import _adjacency_masks

try:
    from htspec import _kernels as compiled
except ImportError:
    compiled = None


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def report(label: str, py_seconds: float, c_seconds: float | None, agree: bool):
    py = f"{py_seconds * 1000:10.1f} ms"
    if c_seconds is None:
        print(f"{label:<34} python {py}   compiled (not built)")
        return
    print(
        f"{label:<34} python {py}   compiled {c_seconds * 1000:8.1f} ms   "
        f"speedup {py_seconds / c_seconds:6.1f}x   results equal: {agree}"
    )


def bench_matchings(m: int):
    # m pairwise-disjoint 3-edges: 2^m matchings to visit
    edges = [[3 * i + 1, 3 * i + 2, 3 * i + 3] for i in range(m)]
    H = build(3, 3 * m, edges)
    conf = _conflict_masks(H)
    py_counts, py_t = timed(_kernels_py.count_matchings, conf)
    if compiled is None:
        report(f"count_matchings (m={m}, 2^{m})", py_t, None, True)
        return
    c_counts, c_t = timed(compiled.count_matchings, conf)
    report(f"count_matchings (m={m}, 2^{m})", py_t, c_t, py_counts == c_counts)


def bench_subsets(m: int):
    H = star(m, 3)  # every edge subset is connected through the center
    adj = _adjacency_masks(H)
    cap = 2**m + 1
    py_masks, py_t = timed(_kernels_py.connected_subset_masks, adj, cap)
    if compiled is None:
        report(f"connected_subsets (star m={m})", py_t, None, True)
        return
    c_masks, c_t = timed(compiled.connected_subset_masks, adj, cap)
    report(
        f"connected_subsets (star m={m})",
        py_t,
        c_t,
        sorted(py_masks) == sorted(c_masks),
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--match-edges", type=int, default=22)
    parser.add_argument("--star-edges", type=int, default=18)
    args = parser.parse_args()
    if compiled is None:
        print("note: compiled kernels unavailable; timing fallback only\n")
    bench_matchings(args.match_edges)
    bench_subsets(args.star_edges)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
