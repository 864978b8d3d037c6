"""Counts and wall time of the 3-connected graph generator per order."""

import sys
import time

from contracta.generation import iter_leaves

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 9
for n in range(4, n_max + 1):
    start = time.perf_counter()
    count = sum(1 for _ in iter_leaves(n, n))
    print(f"n={n:>2} graphs={count:>9} {time.perf_counter() - start:8.2f}s", flush=True)
