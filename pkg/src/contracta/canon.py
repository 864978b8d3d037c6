"""Canonical labeling by colour refinement and individualization.

The search tree is the usual one: refine the colouring to an equitable
partition, individualize each vertex of the first smallest non-singleton
cell in turn, recurse.  Leaves are discrete colourings, i.e. labelings; the
canonical one is the leaf whose relabeled adjacency matrix, read in graph6
bit order, is largest.  Two leaves with the same matrix differ by an
automorphism, and those automorphisms prune later siblings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, _trusted, bits
from .graph6 import emit_graph6


@dataclass(frozen=True)
class CanonicalLabel:
    bytes: bytes
    orbits: tuple[tuple[int, ...], ...]
    labeling: tuple[int, ...]  # labeling[v] = canonical position of v
    generators: tuple[tuple[int, ...], ...]

    def orbit_index(self) -> list[int]:
        out = [0] * len(self.labeling)
        for i, orb in enumerate(self.orbits):
            for v in orb:
                out[v] = i
        return out


def refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``; colours stay ranks 0..k-1.

    New colours are ranks of (old colour, sorted neighbour colours), so the
    cell order depends only on the coloured isomorphism type.
    """
    n = len(colors)
    ncolors = len(set(colors))
    while ncolors < n:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nb]))) for v, nb in enumerate(nbrs)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ranks) == ncolors:
            break
        colors = [ranks[s] for s in sigs]
        ncolors = len(ranks)
    return colors


def neighbor_lists(adj: tuple[int, ...] | list[int]) -> list[list[int]]:
    return [list(bits(row)) for row in adj]


def _individualize(colors: list[int], w: int) -> list[int]:
    cw = colors[w]
    raw = [2 * c + (c == cw and v != w) for v, c in enumerate(colors)]
    ranks = {c: i for i, c in enumerate(sorted(set(raw)))}
    return [ranks[c] for c in raw]


def _certificate(adj: tuple[int, ...] | list[int], order: list[int]) -> int:
    # order[pos] = vertex; bits in graph6 order (0,1),(0,2),(1,2),(0,3),...
    cert = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            cert = (cert << 1) | (row >> order[i] & 1)
    return cert


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def orbits_from_generators(n: int, generators) -> list[list[int]]:
    uf = _UnionFind(n)
    for gamma in generators:
        for v, w in enumerate(gamma):
            uf.union(v, w)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(groups.values())


class _Search:
    def __init__(self, adj: tuple[int, ...] | list[int], n: int) -> None:
        self.adj = adj
        self.nbrs = neighbor_lists(adj)
        self.n = n
        self.best_cert = -1
        self.best_order: list[int] = []
        self.seen: dict[int, list[int]] = {}
        self.generators: list[tuple[int, ...]] = []

    def leaf(self, colors: list[int]) -> None:
        order = [0] * self.n
        for v, c in enumerate(colors):
            order[c] = v
        cert = _certificate(self.adj, order)
        old = self.seen.get(cert)
        if old is not None:
            gamma = [0] * self.n
            for pos in range(self.n):
                gamma[order[pos]] = old[pos]
            if any(gamma[v] != v for v in range(self.n)):
                self.generators.append(tuple(gamma))
            return
        self.seen[cert] = order
        if cert > self.best_cert:
            self.best_cert = cert
            self.best_order = order

    def run(self, colors: list[int], prefix: tuple[int, ...]) -> None:
        colors = refine(self.nbrs, colors)
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        if len(sizes) == self.n:
            self.leaf(colors)
            return
        target = min((s, c) for c, s in sizes.items() if s > 1)[1]
        cell = [v for v in range(self.n) if colors[v] == target]
        explored: list[int] = []
        uf = None
        used = 0
        for w in cell:
            if explored and len(self.generators) > used:
                # fold in automorphisms found since, if they fix the prefix
                if uf is None:
                    uf = _UnionFind(self.n)
                for g in self.generators[used:]:
                    if all(g[p] == p for p in prefix):
                        for v, x in enumerate(g):
                            if v != x:
                                uf.union(v, x)
                used = len(self.generators)
            if uf is not None:
                rw = uf.find(w)
                if any(uf.find(e) == rw for e in explored):
                    continue
            self.run(_individualize(colors, w), prefix + (w,))
            explored.append(w)


def canonical_form(g: Graph, colors: list[int] | None = None) -> CanonicalLabel:
    """Canonical graph6 certificate, labeling, orbits and automorphism generators.

    An optional initial vertex colouring (ranks) restricts to colour-preserving
    isomorphisms.
    """
    n = g.n
    if n == 0:
        return CanonicalLabel(emit_graph6(g), (), (), ())
    search = _Search(g.adj, n)
    search.run(list(colors) if colors is not None else [0] * n, ())
    labeling = [0] * n
    for pos, v in enumerate(search.best_order):
        labeling[v] = pos
    canon = relabel_trusted(g, labeling)
    orbits = orbits_from_generators(n, search.generators)
    return CanonicalLabel(
        emit_graph6(canon),
        tuple(tuple(o) for o in orbits),
        tuple(labeling),
        tuple(search.generators),
    )


def relabel_trusted(g: Graph, perm) -> Graph:
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        m = 0
        for u in bits(row):
            m |= 1 << perm[u]
        adj[perm[v]] = m
    return _trusted(g.n, adj)


def canonical_graph(g: Graph) -> Graph:
    return relabel_trusted(g, canonical_form(g).labeling)


def _degree_multiset(g: Graph) -> list[int]:
    return sorted(g.degrees())


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if _degree_multiset(g) != _degree_multiset(h):
        return False
    return canonical_form(g).bytes == canonical_form(h).bytes


def group_elements(n: int, generators, cap: int = 5000) -> list[tuple[int, ...]] | None:
    """All elements of the group generated by ``generators``; None past ``cap``."""
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(g[p[v]] for v in range(n))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return sorted(seen)
