"""Non-edges, contractibility and per-graph classification.

A non-edge {u, v} of a 3-connected graph is contractible exactly when no
3-vertex separator contains both u and v: identifying u and v turns such a
separator into a 2-separator, and conversely a 2-separator of the contracted
graph must contain the merged vertex, which expands back to a 3-separator
through u and v.  That cut-containment test is the production path, since
one separator enumeration answers every non-edge of the graph.  The direct
test (contract, then check 3-connectivity) is kept as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .connectivity import is_k_connected, three_cut_masks, vertex_connectivity
from .graph import Graph, contract_pair
from .structure import recognize_family


class ContractionError(ValueError):
    pass


class OracleDisagreement(AssertionError):
    """The two contractibility tests gave different answers."""


def non_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]


def pair_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def pair_mask_table(n: int) -> dict[int, int]:
    """Map each 3-vertex bitmask to the bitmask of its three pair indices."""
    table = {}
    for a, b, c in combinations(range(n), 3):
        table[(1 << a) | (1 << b) | (1 << c)] = (
            (1 << pair_index(a, b)) | (1 << pair_index(a, c)) | (1 << pair_index(b, c))
        )
    return table


_PAIR_TABLES: dict[int, dict[int, int]] = {}


def _pairs_of(n: int) -> dict[int, int]:
    table = _PAIR_TABLES.get(n)
    if table is None:
        table = _PAIR_TABLES[n] = pair_mask_table(n)
    return table


def non_edge_pair_mask(adj: tuple[int, ...] | list[int], n: int) -> int:
    m = 0
    for v in range(1, n):
        row = adj[v]
        base = v * (v - 1) // 2
        for u in range(v):
            if not row >> u & 1:
                m |= 1 << (base + u)
    return m


def contractible_pair_mask(adj: tuple[int, ...] | list[int], n: int, cuts) -> int:
    """Pair-index bitmask of contractible non-edges, given all 3-cuts as bitmasks."""
    table = _pairs_of(n)
    covered = 0
    for t in cuts:
        covered |= table[t]
    return non_edge_pair_mask(adj, n) & ~covered


def pairs_from_mask(mask: int) -> list[tuple[int, int]]:
    out = []
    v = 1
    while mask:
        base = v * (v - 1) // 2
        row = (mask >> base) & ((1 << v) - 1)
        for u in range(v):
            if row >> u & 1:
                out.append((u, v))
        mask &= ~(((1 << v) - 1) << base)
        v += 1
    return sorted(out)


def _require_three_connected(g: Graph) -> None:
    if g.n < 4 or not is_k_connected(g, 3):
        raise ContractionError("graph is not 3-connected")


def contractible_by_contraction(g: Graph, u: int, v: int) -> bool:
    """Direct test: the contracted graph is 3-connected."""
    return is_k_connected(contract_pair(g, u, v), 3)


def contractible_by_cuts(g: Graph, u: int, v: int, cuts: list[int] | None = None) -> bool:
    """No 3-vertex separator of g contains both u and v."""
    if cuts is None:
        cuts = three_cut_masks(g.adj, g.n)
    pair = (1 << u) | (1 << v)
    return not any(t & pair == pair for t in cuts)


def is_contractible(g: Graph, u: int, v: int, check: bool = False) -> bool:
    """Whether contracting the non-edge {u, v} keeps g 3-connected.

    With ``check`` both tests run and any disagreement raises
    ``OracleDisagreement``.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ContractionError(f"invalid vertex pair ({u}, {v})")
    if g.has_edge(u, v):
        raise ContractionError(f"{{{u}, {v}}} is not a non-edge")
    if g.n <= 4:
        raise ContractionError("contracted graph would have fewer than 4 vertices")
    _require_three_connected(g)
    fast = contractible_by_cuts(g, u, v)
    if check:
        slow = contractible_by_contraction(g, u, v)
        if slow != fast:
            raise OracleDisagreement(f"non-edge ({u}, {v}): contraction says {slow}, cuts say {fast}")
    return fast


@dataclass
class Classification:
    n: int
    kappa: int
    non_edge_count: int
    contractible: list[tuple[int, int]]
    tags: list[str] = field(default_factory=list)
    cuts: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def contractible_count(self) -> int:
        return len(self.contractible)


def classify(g: Graph, check: bool = False) -> Classification:
    """Full record for a 3-connected graph.

    ``check`` re-derives every answer through the direct contraction test.
    """
    kappa = vertex_connectivity(g)
    if kappa < 3:
        raise ContractionError(f"kappa={kappa} < 3")
    cuts = three_cut_masks(g.adj, g.n) if kappa == 3 else []
    mask = contractible_pair_mask(g.adj, g.n, cuts)
    pairs = pairs_from_mask(mask)
    if check:
        for u, v in non_edges(g):
            if contractible_by_contraction(g, u, v) != ((u, v) in pairs):
                raise OracleDisagreement(f"non-edge ({u}, {v}) classified inconsistently")
    tags = sorted(recognize_family(g, kappa=kappa)) or ["other"]
    return Classification(
        n=g.n,
        kappa=kappa,
        non_edge_count=g.n * (g.n - 1) // 2 - g.num_edges,
        contractible=pairs,
        tags=tags,
        cuts=[tuple(i for i in range(g.n) if t >> i & 1) for t in cuts],
    )
