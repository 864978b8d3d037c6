"""Vertex connectivity, smallest cuts and fragments."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits, components, is_connected_mask, mask_of


class ConnectivityError(ValueError):
    pass


# -- vertex connectivity -------------------------------------------------------


def local_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t.

    Unit-capacity max flow on the split digraph: every vertex other than s and
    t becomes ``v_in -> v_out`` with capacity one.  Augmenting paths are found
    by breadth-first search, so each augmentation costs O(E).
    """
    if g.has_edge(s, t) or s == t:
        raise ConnectivityError(f"local connectivity needs distinct non-adjacent vertices, got {s}, {t}")
    n = g.n
    # node 2v is v_in, 2v+1 is v_out; residual capacities in a dict of dicts
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    big = n
    for v in range(n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
        cap[2 * v + 1].setdefault(2 * v, 0)
        for u in bits(g.adj[v]):
            cap[2 * v + 1][2 * u] = big
            cap[2 * u].setdefault(2 * v + 1, 0)
    source, sink = 2 * s + 1, 2 * t
    limit = n if cutoff is None else cutoff
    flow = 0
    while flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); the complete graph K_n gives n - 1.

    Any minimum separator T misses one of the first kappa + 1 vertices, and
    that vertex is non-adjacent to everything on the far side of T.  So it is
    enough to let the first endpoint range over vertices 0..k while k, the
    best value so far, only shrinks.
    """
    n = g.n
    if n == 0:
        raise ConnectivityError("vertex connectivity of the empty graph is undefined")
    if not is_connected_mask(g.adj, g.vertex_mask):
        return 0
    best = n - 1
    i = 0
    while i <= best and i < n:
        for w in range(n):
            if w != i and not g.has_edge(i, w):
                best = min(best, local_connectivity(g, i, w, cutoff=best))
        i += 1
    return best


def brute_force_connectivity(g: Graph) -> int:
    """kappa(G) by trying every vertex subset in order of size."""
    n = g.n
    if n == 0:
        raise ConnectivityError("vertex connectivity of the empty graph is undefined")
    full = g.vertex_mask
    for k in range(n - 1):
        for cut in combinations(range(n), k):
            if not is_connected_mask(g.adj, full & ~mask_of(cut)):
                return k
    return n - 1


def separates(adj: tuple[int, ...] | list[int], full: int, cut: int) -> bool:
    rest = full & ~cut
    return bool(rest) and not is_connected_mask(adj, rest)


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether G has more than k vertices and no separator of size < k."""
    if g.n <= k:
        return False
    full = g.vertex_mask
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if separates(g.adj, full, mask_of(cut)):
                return False
    return True


# -- smallest cuts ------------------------------------------------------------


@dataclass(frozen=True)
class CutRecord:
    cut: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def mask(self) -> int:
        return mask_of(self.cut)

    @property
    def component_masks(self) -> list[int]:
        return [mask_of(c) for c in self.components]


def cut_record(g: Graph, cut: tuple[int, ...] | list[int]) -> CutRecord:
    rest = g.vertex_mask & ~mask_of(cut)
    comps = components(g.adj, rest)
    return CutRecord(tuple(sorted(cut)), tuple(tuple(bits(c)) for c in comps))


def smallest_cuts(g: Graph, kappa: int | None = None) -> list[CutRecord]:
    """Every separator of size kappa(G), in ascending lexicographic order."""
    if g.is_complete():
        raise ConnectivityError("no cuts exist in a complete graph")
    if kappa is None:
        kappa = vertex_connectivity(g)
    full = g.vertex_mask
    out = []
    for cut in combinations(range(g.n), kappa):
        rest = full & ~mask_of(cut)
        comps = components(g.adj, rest)
        if len(comps) > 1:
            out.append(CutRecord(cut, tuple(tuple(bits(c)) for c in comps)))
    return out


def three_cut_masks(adj: tuple[int, ...] | list[int], n: int) -> list[int]:
    """Bitmasks of all 3-vertex separators; the bulk path for classification."""
    full = (1 << n) - 1
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            ab = (1 << a) | (1 << b)
            for c in range(b + 1, n):
                t = ab | (1 << c)
                if separates(adj, full, t):
                    out.append(t)
    return out


# -- fragments --------------------------------------------------------------


@dataclass(frozen=True)
class Fragment:
    graph: Graph = field(repr=False)
    cut: tuple[int, ...]
    vertices: frozenset[int]

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(self.graph.n)) - self.vertices - set(self.cut)

    def complement_fragment(self) -> Fragment:
        return Fragment(self.graph, self.cut, self.complement)


def fragments_of(g: Graph, t: CutRecord, exhaustive: bool = False) -> list[Fragment]:
    """T-fragments of G.

    By default one fragment per component; with ``exhaustive`` every union of
    a nonempty proper subset of the components (2^c - 2 of them).
    """
    comps = [frozenset(c) for c in t.components]
    if not exhaustive:
        return [Fragment(g, t.cut, c) for c in comps]
    out = []
    for size in range(1, len(comps)):
        for pick in combinations(comps, size):
            out.append(Fragment(g, t.cut, frozenset().union(*pick)))
    return sorted(out, key=lambda f: sorted(f.vertices))


def fragment_inequality_holds(f: Fragment, fp: Fragment) -> bool:
    """Fragment inequality: F and F' meet only if |F & T'| >= |co(F') & T|."""
    if f.graph != fp.graph:
        raise ConnectivityError("fragments belong to different graphs")
    if not f.vertices & fp.vertices:
        return True
    return len(f.vertices & set(fp.cut)) >= len(fp.complement & set(f.cut))
