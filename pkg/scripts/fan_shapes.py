"""Tally the shapes of spanning minimum fans over every 3-cut, per order.

For each 3-connected graph, each 3-cut S and each component C of G - S, the
minimum 3-fan into S either spans C + S (and then reduces to a semi-wheel or a
semi-prism) or leaves vertices out.  Prints the distribution.
"""

import sys
from collections import Counter

from contracta.generation import iter_leaves
from contracta.graph import bits, components, mask_of
from contracta.structure import minimum_fan, reduced_structure

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 8
for n in range(5, n_max + 1):
    shapes = Counter()
    for leaf in iter_leaves(n, n):
        g = leaf.graph()
        for t in leaf.cuts:
            s = tuple(bits(t))
            for comp in components(g.adj, g.vertex_mask & ~t):
                fan, _ = minimum_fan(g, s, list(bits(comp)))
                if mask_of(fan.vertices) != comp | t:
                    shapes["non-spanning"] += 1
                    continue
                r = reduced_structure(g, fan, s)
                shapes["SPr" if r.kind == "semi-prism" else f"SW{r.order}"] += 1
    print(f"n={n}: " + ", ".join(f"{k}={v}" for k, v in sorted(shapes.items())), flush=True)
