"""Targeted search for 3-connected graphs with every non-edge inside a 3-cut.

These are the graphs with no contractible non-edge. The property is not
hereditary, but it survives vertex deletion in a weak form: if every
non-edge of G lies in a 3-cut and v is any vertex, then every non-edge of
G - v lies in a separator of G - v of size at most 3, unless both ends are
neighbours of v and v has degree 3. So a parent whose uncovered non-edges
touch more than three vertices has no such child, and otherwise the new
vertex must be cubic and adjacent to all of them. This prunes the last
level of the generation tree hard enough to reach one order past the full
enumeration.
"""

from __future__ import annotations

from multiprocessing import Pool
from typing import Iterator

from . import generation as gen
from .contraction import contractible_pair_mask
from .graph import is_connected_mask


def uncovered_vertices(adj: tuple[int, ...]) -> int | None:
    """Ends of non-edges lying in no separator of size <= 3, or None past three vertices."""
    k = len(adj)
    full = (1 << k) - 1
    out = 0
    for b in range(k):
        rest = full & ~adj[b] & ((1 << b) - 1)
        while rest:
            low = rest & -rest
            rest ^= low
            pair = low | 1 << b
            if out & pair == pair:
                continue
            left = full & ~pair
            covered = not is_connected_mask(adj, left)
            w_bits = left
            while not covered and w_bits:
                w = w_bits & -w_bits
                w_bits ^= w
                covered = not is_connected_mask(adj, left & ~w)
            if not covered:
                out |= pair
                if out.bit_count() > 3:
                    return None
    return out


def _walk(adj: tuple[int, ...], n: int, stats: list[int]) -> Iterator[gen.Leaf]:
    k = len(adj)
    if k + 1 <= n - 2:
        for child in gen._connected_children(adj):
            yield from _walk(tuple(child), n, stats)
    elif k + 1 == n - 1:
        for child in gen._biconnected_children(adj):
            stats[0] += 1
            parent = tuple(child)
            need = uncovered_vertices(parent)
            if need is None:
                continue
            stats[1] += 1
            yield from gen._triconnected_children(parent, require=need)


def _search_unit(args) -> tuple[list[gen.Leaf], list[int]]:
    root, n = args
    stats = [0, 0]
    keep = [leaf for leaf in _walk(root, n, stats) if _all_covered(leaf)]
    return keep, stats


def _all_covered(leaf: gen.Leaf) -> bool:
    return contractible_pair_mask(leaf.adj, leaf.n, list(leaf.cuts)) == 0


def fully_covered_graphs(n: int, threads: int = 1) -> tuple[list[gen.Leaf], dict[str, int]]:
    """Every 3-connected order-n graph with no contractible non-edge (complete graph included).

    Also returns how many last-level parents were seen and how many survived the filter.
    """
    if n < 6:
        raise gen.GenerationError("search needs n >= 6")
    gen._check_order(n)
    split = max(1, min(6, n - 3))
    roots = gen.connected_graphs_at(split)
    units = [(r, n) for r in roots]
    if threads > 1:
        with Pool(threads) as pool:
            results = pool.map(_search_unit, units, chunksize=1)
    else:
        results = [_search_unit(u) for u in units]
    found: list[gen.Leaf] = []
    parents = survivors = 0
    for keep, (p, s) in results:
        found.extend(keep)
        parents += p
        survivors += s
    return found, {"parents": parents, "survivors": survivors, "found": len(found)}
