"""Isomorph-free generation of 3-connected graphs by canonical augmentation.

A graph on k+1 vertices is built from a graph on k vertices by adding a new
vertex ``v = k`` adjacent to a vertex set X.  The child is accepted iff

1. ``v`` lies in the automorphism orbit picked by the canonical deletion
   rule: among the non-cut vertices of minimum degree (among non-cut
   vertices), take those maximising a cheap vertex invariant, then the one
   that comes first in the canonical labeling;
2. X is the smallest set in its orbit under Aut(parent).

Every vertex of a 3-connected graph is a non-cut vertex and deleting any one
leaves a 2-connected graph, so the canonical parents of 3-connected graphs
on n vertices are 2-connected graphs on n-1 vertices, whose parents are
connected.  The tree therefore holds all connected graphs up to n-2, the
2-connected ones at n-1, and the 3-connected ones at n.

Children of a 2-connected parent P are tested for 3-connectivity against
the precomputed 2-cuts of P, and their 3-cuts come out of the precomputed
3-separators of P, so classification of the leaves costs no extra search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import networkx as nx
import numpy as np

from .canon import canonical_form, group_elements, neighbor_lists, refine
from .connectivity import is_k_connected
from .graph import Graph, _trusted, bits, components, is_connected_mask

MIN_ORDER = 4
MAX_ORDER = 12
GROUP_CAP = 5000


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class Leaf:
    """A generated 3-connected graph with its 3-vertex separators as bitmasks."""

    n: int
    adj: tuple[int, ...]
    cuts: tuple[int, ...]

    def graph(self) -> Graph:
        return _trusted(self.n, self.adj)


# -- canonical deletion ------------------------------------------------------


def _vertex_key(adj: list[int], deg: list[int], u: int) -> tuple[int, int]:
    nb = adj[u]
    degsum = 0
    tri = 0
    m = nb
    while m:
        low = m & -m
        w = low.bit_length() - 1
        degsum += deg[w]
        tri += (adj[w] & nb).bit_count()
        m ^= low
    return degsum, tri


def _in_deletion_orbit(adj: list[int], deg: list[int], v: int, cls: int) -> bool:
    """Whether ``v`` is in the canonical deletion orbit, given the class mask."""
    if cls == 1 << v:
        return True
    best = None
    best_mask = 0
    for u in bits(cls):
        key = _vertex_key(adj, deg, u)
        if best is None or key > best:
            best, best_mask = key, 1 << u
        elif key == best:
            best_mask |= 1 << u
    if not best_mask >> v & 1:
        return False
    if best_mask == 1 << v:
        return True
    # split the tie by refinement seeded with the tied vertices, then by labeling
    colors = refine(neighbor_lists(adj), [best_mask >> u & 1 for u in range(len(adj))])
    top = max(colors[u] for u in bits(best_mask))
    if colors[v] != top:
        return False
    cell = [u for u in bits(best_mask) if colors[u] == top]
    if len(cell) == 1:
        return True
    lab = canonical_form(_trusted(len(adj), adj), colors)
    w = min(cell, key=lambda u: lab.labeling[u])
    orbit = lab.orbit_index()
    return orbit[v] == orbit[w]


class _ParentOrbits:
    """Decides whether X is the least member of its Aut(P)-orbit."""

    def __init__(self, adj: tuple[int, ...] | list[int]) -> None:
        n = len(adj)
        gens = canonical_form(_trusted(n, adj)).generators
        self.trivial = not gens
        self.elements = None if self.trivial else group_elements(n, gens, GROUP_CAP)
        self.seen: set[bytes] = set()

    def accept(self, x: int, child_adj: list[int]) -> bool:
        if self.trivial:
            return True
        if self.elements is not None:
            xs = list(bits(x))
            for p in self.elements:
                img = 0
                for u in xs:
                    img |= 1 << p[u]
                if img < x:
                    return False
            return True
        # group too large to list: deduplicate children by certificate instead
        cert = canonical_form(_trusted(len(child_adj), child_adj)).bytes
        if cert in self.seen:
            return False
        self.seen.add(cert)
        return True


def _extend(adj: tuple[int, ...] | list[int], x: int) -> list[int]:
    k = len(adj)
    vbit = 1 << k
    child = [row | vbit if x >> u & 1 else row for u, row in enumerate(adj)]
    child.append(x)
    return child


# -- children by mode --------------------------------------------------------


def _connected_children(adj: tuple[int, ...]) -> Iterator[list[int]]:
    k = len(adj)
    orbits = _ParentOrbits(adj)
    for x in range(1, 1 << k):
        child = _extend(adj, x)
        m = k + 1
        full = (1 << m) - 1
        deg = [row.bit_count() for row in child]
        noncut = 0
        for u in range(m):
            if u == k or m <= 2 or is_connected_mask(child, full & ~(1 << u)):
                noncut |= 1 << u
        dmin = min(deg[u] for u in bits(noncut))
        if deg[k] != dmin:
            continue
        cls = 0
        for u in bits(noncut):
            if deg[u] == dmin:
                cls |= 1 << u
        if _in_deletion_orbit(child, deg, k, cls) and orbits.accept(x, child):
            yield child


def _min_degree_sets(deg: list[int], dlow: int) -> Iterator[tuple[int, int]]:
    """Sets X such that the new vertex, of degree |X|, has minimum degree.

    Every vertex of degree below |X| must be in X, and none may be lower
    than |X| - 1.  Yields (X, |X|).
    """
    k = len(deg)
    dmax = min(min(deg) + 1, k)
    for d in range(dlow, dmax + 1):
        forced = 0
        free = []
        for u in range(k):
            if deg[u] < d:
                forced |= 1 << u
            else:
                free.append(1 << u)
        need = d - forced.bit_count()
        if need < 0:
            continue
        for pick in combinations(free, need):
            x = forced
            for b in pick:
                x |= b
            yield x, d


def _class_of_degree(adj: tuple[int, ...] | list[int], x: int, d: int) -> tuple[list[int], int]:
    deg = [row.bit_count() + (x >> u & 1) for u, row in enumerate(adj)]
    deg.append(d)
    cls = 0
    for u, du in enumerate(deg):
        if du == d:
            cls |= 1 << u
    return deg, cls


def _biconnected_children(adj: tuple[int, ...]) -> Iterator[list[int]]:
    k = len(adj)
    full = (1 << k) - 1
    deg = [row.bit_count() for row in adj]
    cutverts = []
    if k >= 3:
        for a in range(k):
            comps = components(adj, full & ~(1 << a))
            if len(comps) > 1:
                cutverts.append((1 << a, comps))
    orbits = None
    for x, d in _min_degree_sets(deg, 2):
        ok = True
        for a, comps in cutverts:
            # the new vertex must reach every component left by a cut vertex
            r = x & ~a
            for c in comps:
                if not r & c:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        child = _extend(adj, x)
        cdeg, cls = _class_of_degree(adj, x, d)
        if not _in_deletion_orbit(child, cdeg, k, cls):
            continue
        if orbits is None:
            orbits = _ParentOrbits(adj)
        if orbits.accept(x, child):
            yield child


def _triconnected_children(adj: tuple[int, ...], require: int = 0) -> Iterator[Leaf]:
    """3-connected children; with ``require``, only those adding a cubic vertex adjacent to all of it."""
    k = len(adj)
    full = (1 << k) - 1
    deg = [row.bit_count() for row in adj]
    twocuts = []
    threeseps = []
    sepset = set()
    for a in range(k):
        for b in range(a + 1, k):
            ab = (1 << a) | (1 << b)
            comps = components(adj, full & ~ab)
            if len(comps) > 1:
                twocuts.append((ab, comps))
            for c in range(b + 1, k):
                t = ab | (1 << c)
                comps = components(adj, full & ~t)
                if len(comps) > 1:
                    threeseps.append((t, comps))
                    sepset.add(t)
    vbit = 1 << k
    orbits = None
    for x, d in _min_degree_sets(deg, 3):
        if require and (d != 3 or x & require != require):
            continue
        ok = True
        for ab, comps in twocuts:
            r = x & ~ab
            for c in comps:
                if not r & c:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        child = _extend(adj, x)
        cdeg, cls = _class_of_degree(adj, x, d)
        if not _in_deletion_orbit(child, cdeg, k, cls):
            continue
        if orbits is None:
            orbits = _ParentOrbits(adj)
        if not orbits.accept(x, child):
            continue
        cuts = []
        for t, comps in threeseps:
            # still a separator iff some component of P - t stays unreached
            r = x & ~t
            for c in comps:
                if not r & c:
                    cuts.append(t)
                    break
        if d == 3 and x not in sepset and full & ~x:
            cuts.append(x)
        for ab, _ in twocuts:
            cuts.append(ab | vbit)
        yield Leaf(k + 1, tuple(child), tuple(sorted(cuts)))


# -- the tree ---------------------------------------------------------------


def _is_biconnected(adj: list[int] | tuple[int, ...]) -> bool:
    k = len(adj)
    if k < 3:
        return False
    full = (1 << k) - 1
    return all(is_connected_mask(adj, full & ~(1 << a)) for a in range(k))


def _walk_connected(adj: tuple[int, ...], n_max: int, n_min: int) -> Iterator[Leaf]:
    k = len(adj)
    if k >= 3 and k + 1 >= n_min and _is_biconnected(adj):
        yield from _walk_biconnected(adj, n_max)
    if k + 1 <= n_max - 2:
        for child in _connected_children(adj):
            yield from _walk_connected(tuple(child), n_max, n_min)
    elif k + 1 == n_max - 1:
        for child in _biconnected_children(adj):
            yield from _walk_biconnected(tuple(child), n_max)


def _walk_biconnected(adj: tuple[int, ...], n_max: int) -> Iterator[Leaf]:
    if len(adj) + 1 <= n_max:
        yield from _triconnected_children(adj)


def _check_order(n: int) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise GenerationError(f"order must lie in {MIN_ORDER}..{MAX_ORDER}, got {n}")


def connected_graphs_at(level: int) -> list[tuple[int, ...]]:
    """All connected graphs of the given order, as generated by the tree."""
    current = [(0,)]
    for _ in range(1, level):
        current = [tuple(c) for p in current for c in _connected_children(p)]
    return current


def work_units(n_min: int, n_max: int) -> tuple[list[Leaf], list[tuple[int, ...]]]:
    """Split the tree for parallel processing.

    Returns the leaves hanging off levels below the split (generated here)
    and the connected graphs at the split level, each the root of an
    independent subtree.
    """
    _check_order(n_min)
    _check_order(n_max)
    split = max(1, min(6, n_max - 3))
    top: list[Leaf] = []
    current = [(0,)]
    for level in range(1, split):
        for adj in current:
            if level >= 3 and level + 1 >= n_min and _is_biconnected(adj):
                top.extend(_walk_biconnected(adj, n_max))
        current = [tuple(c) for p in current for c in _connected_children(p)]
    return top, current


def walk_unit(root: tuple[int, ...], n_min: int, n_max: int) -> Iterator[Leaf]:
    return _walk_connected(root, n_max, n_min)


def iter_leaves(n_min: int, n_max: int) -> Iterator[Leaf]:
    """Every 3-connected graph with n_min <= n <= n_max, once per class."""
    _check_order(n_min)
    _check_order(n_max)
    yield from (leaf for leaf in _walk_connected((0,), n_max, n_min) if leaf.n >= n_min)


def generate_3connected(n: int, canonical: bool = True) -> Iterator[Graph]:
    """Every 3-connected graph on n vertices exactly once up to isomorphism.

    With ``canonical`` each graph is returned under its canonical labeling.
    """
    _check_order(n)
    for leaf in _walk_connected((0,), n, n):
        g = leaf.graph()
        if canonical:
            g = _trusted(n, _relabel(g.adj, canonical_form(g).labeling))
        yield g


def _relabel(adj, perm) -> list[int]:
    out = [0] * len(adj)
    for v, row in enumerate(adj):
        m = 0
        for u in bits(row):
            m |= 1 << perm[u]
        out[perm[v]] = m
    return out


# -- independent oracle -------------------------------------------------------


def brute_force_3connected(n: int) -> list[Graph]:
    """3-connected graphs on n vertices by exhausting labeled graphs.

    Only labelings with non-increasing degree sequence are kept (every class
    has one), then classes are separated with networkx's isomorphism test.
    Independent of the augmentation tree and of the canonical labeler.
    """
    if not 1 <= n <= 7:
        raise GenerationError("the brute-force oracle is limited to n <= 7")
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    masks = np.arange(1 << m, dtype=np.int64)
    edge_bits = ((masks[:, None] >> np.arange(m)) & 1).astype(np.int8)
    incidence = np.zeros((m, n), dtype=np.int8)
    for i, (a, b) in enumerate(pairs):
        incidence[i, a] = incidence[i, b] = 1
    deg = edge_bits @ incidence
    keep = (deg.min(axis=1) >= 3) & np.all(deg[:, :-1] >= deg[:, 1:], axis=1)
    buckets: dict[tuple, list[nx.Graph]] = {}
    found = []
    for mask in masks[keep]:
        edges = [pairs[i] for i in range(m) if mask >> i & 1]
        g = _from_edge_list(n, edges)
        if not is_k_connected(g, 3):
            continue
        h = nx.Graph(edges)
        key = (len(edges), nx.weisfeiler_lehman_graph_hash(h))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        found.append(g)
    return found


def _from_edge_list(n: int, edges) -> Graph:
    adj = [0] * n
    for a, b in edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return _trusted(n, adj)
