"""Benchmark the enumeration kernel backends against each other.

The table-fill search dominates enumeration time, so this times the raw
kernels (no isomorphism dedup) on a range of orders and reports the
speedup of the compiled extension over the pure-Python fallback.

Usage: python benchmarks/bench_backends.py [--orders 8,12,16] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from cayley.enumeration import available_backends, enumerate_tables


def time_backend(backend: str, n: int, repeat: int) -> tuple[float, int]:
    best = float("inf")
    tables = []
    for _ in range(repeat):
        start = time.perf_counter()
        tables, _nodes = enumerate_tables(n, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, len(tables)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", default="8,10,12,14,16,20,24")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    orders = [int(tok) for tok in args.orders.split(",")]

    backends = sorted(available_backends())
    print(f"backends: {', '.join(backends)}")
    header = f"{'order':>5}  {'tables':>7}"
    for name in backends:
        header += f"  {name + ' (s)':>14}"
    if "compiled" in backends and "pure" in backends:
        header += f"  {'speedup':>8}"
    print(header)

    for n in orders:
        times = {}
        tables = 0
        for name in backends:
            times[name], tables = time_backend(name, n, args.repeat)
        line = f"{n:>5}  {tables:>7}"
        for name in backends:
            line += f"  {times[name]:>14.4f}"
        if "compiled" in times and "pure" in times:
            line += f"  {times['pure'] / times['compiled']:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
