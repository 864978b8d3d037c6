"""Order-n graphs with no contractible non-edge, by the pruned search.

    python scripts/covered_search.py 11
"""

import sys
import time

from contracta import campaign
from contracta.covering import fully_covered_graphs

n = int(sys.argv[1]) if len(sys.argv) > 1 else 10
threads = int(sys.argv[2]) if len(sys.argv) > 2 else campaign.default_threads()
start = time.perf_counter()
found, stats = fully_covered_graphs(n, threads)
print(f"n={n} parents={stats['parents']} survivors={stats['survivors']} {time.perf_counter() - start:.0f}s")
for leaf in found:
    print(campaign.canonical_g6(leaf.graph()), campaign.family_of(leaf) or "exception")
