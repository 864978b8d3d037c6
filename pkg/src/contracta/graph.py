"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex.  Python integers are
unbounded, so the same representation covers every order this package deals
with; set operations on neighbourhoods become ``&``, ``|`` and ``bit_count``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid vertex, edge or family parameter."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- basic queries ----------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> set[int]:
        return set(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.adj)

    def distance(self, u: int, v: int) -> int | None:
        """Length of a shortest u-v path, or None if they are disconnected."""
        if u == v:
            return 0
        seen = 1 << u
        frontier = 1 << u
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in bits(frontier):
                nxt |= self.adj[w]
            nxt &= ~seen
            if nxt >> v & 1:
                return d
            seen |= nxt
            frontier = nxt
        return None

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            adj[perm[v]] = mask_of(perm[u] for u in bits(row))
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _trusted(n: int, adj: list[int] | tuple[int, ...]) -> Graph:
    # Skips validation; callers guarantee a symmetric loop-free adjacency.
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


# -- named families ---------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return _trusted(n, [full ^ (1 << v) for v in range(n)])


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise GraphError("K_n minus an edge needs n >= 2")
    adj = list(complete(n).adj)
    adj[0] &= ~0b10
    adj[1] &= ~0b01
    return _trusted(n, adj)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..n-1."""
    if n < 4:
        raise GraphError("wheel needs n >= 4")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    return from_edges(n, rim + [(0, i) for i in range(1, n)])


def semi_wheel(n: int) -> Graph:
    """Path 1..n-1 plus centre 0 joined to the interior vertices 2..n-2.

    The centre is not adjacent to the path ends 1 and n-1, and the path is
    not closed; the boundary set is {0, 1, n-1}.
    """
    if n < 4:
        raise GraphError("semi-wheel needs n >= 4")
    path = [(i, i + 1) for i in range(1, n - 1)]
    return from_edges(n, path + [(0, i) for i in range(2, n - 1)])


def semi_prism() -> Graph:
    """Triangle 0,1,2 with pendant vertices 3,4,5 attached to 0,1,2."""
    return from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


SEMI_PRISM_BOUNDARY = (3, 4, 5)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def octahedron() -> Graph:
    """K_{2,2,2}: the non-edges are {0,1}, {2,3}, {4,5}."""
    return from_edges(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


@dataclass(frozen=True)
class NamedFamily:
    tag: str
    n: int = 0

    MINIMUM = {"complete": 1, "complete-minus-edge": 2, "wheel": 4, "semi-wheel": 4, "semi-prism": 0}

    def __post_init__(self) -> None:
        if self.tag not in self.MINIMUM:
            raise GraphError(f"unknown family {self.tag!r}")
        if self.tag != "semi-prism" and self.n < self.MINIMUM[self.tag]:
            raise GraphError(f"{self.tag} needs n >= {self.MINIMUM[self.tag]}, got {self.n}")


def make_named(family: NamedFamily) -> Graph:
    build = {
        "complete": complete,
        "complete-minus-edge": complete_minus_edge,
        "wheel": wheel,
        "semi-wheel": semi_wheel,
    }
    if family.tag == "semi-prism":
        return semi_prism()
    return build[family.tag](family.n)


# -- derived graphs ---------------------------------------------------------


def contract_pair(g: Graph, u: int, v: int) -> Graph:
    """Identify ``u`` and ``v`` into a new last vertex adjacent to N(u) | N(v).

    Works for edges and non-edges alike.  Survivors keep their relative order.
    """
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise GraphError("cannot contract a vertex with itself")
    drop = (1 << u) | (1 << v)
    keep = [w for w in range(g.n) if not drop >> w & 1]
    merged = (g.adj[u] | g.adj[v]) & ~drop
    return _squeeze(g, keep, extra=merged)


def _squeeze(g: Graph, keep: list[int], extra: int | None = None) -> Graph:
    # Induced subgraph on ``keep`` (sorted), optionally with one extra vertex
    # appended whose neighbourhood is ``extra`` in old labels.
    pos = {old: new for new, old in enumerate(keep)}
    keep_mask = mask_of(keep)
    m = len(keep)
    adj = [0] * (m + (extra is not None))
    for old in keep:
        adj[pos[old]] = mask_of(pos[w] for w in bits(g.adj[old] & keep_mask))
    if extra is not None:
        z = m
        for w in bits(extra & keep_mask):
            adj[pos[w]] |= 1 << z
            adj[z] |= 1 << pos[w]
    return _trusted(len(adj), adj)


def subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph G[keep] with an old-to-new relabeling map."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    return _squeeze(g, kept), {old: new for new, old in enumerate(kept)}


def delete(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G - drop, relabeled order-preservingly, with the old-to-new map."""
    gone = mask_of(drop)
    return subgraph(g, [v for v in range(g.n) if not gone >> v & 1])


# -- connectivity primitives on bitmasks --------------------------------------


def component_of(adj: tuple[int, ...] | list[int], start: int, allowed: int) -> int:
    """Bitmask of the component containing ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & allowed & ~seen
        seen |= new
        frontier |= new
    return seen


def components(adj: tuple[int, ...] | list[int], allowed: int) -> list[int]:
    """Component bitmasks of the subgraph induced by ``allowed``, by lowest vertex."""
    out = []
    rest = allowed
    while rest:
        c = component_of(adj, (rest & -rest).bit_length() - 1, allowed)
        out.append(c)
        rest &= ~c
    return out


def is_connected_mask(adj: tuple[int, ...] | list[int], allowed: int) -> bool:
    if not allowed:
        return True
    return component_of(adj, (allowed & -allowed).bit_length() - 1, allowed) == allowed

