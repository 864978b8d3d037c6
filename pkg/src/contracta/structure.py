"""3-fans of minimum order, semi-wheel / semi-prism recognition, families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .connectivity import is_k_connected, vertex_connectivity
from .graph import (
    SEMI_PRISM_BOUNDARY,
    Graph,
    bits,
    component_of,
    is_connected_mask,
    mask_of,
    semi_prism,
    semi_wheel,
    subgraph,
)


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class Fan:
    apex: int
    targets: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]  # paths[i] runs from apex to targets[i]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for p in self.paths for v in p)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        """Number of edges; a fan is a tree, so this is order - 1."""
        return sum(len(p) - 1 for p in self.paths)


@dataclass(frozen=True)
class StructureReport:
    kind: str | None  # "semi-wheel", "semi-prism" or None
    boundary: tuple[int, ...]
    order: int = 0
    center: int | None = None
    path: tuple[int, ...] = ()  # semi-wheel: x_1 .. x_{k-1}
    mapping: tuple[tuple[int, int], ...] = ()  # graph vertex -> template vertex


# -- minimum fans -------------------------------------------------------------


class _Network:
    def __init__(self, size: int) -> None:
        self.head: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def arc(self, a: int, b: int, cap: int, cost: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(cap)
        self.cost.append(cost)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)
        self.cost.append(-cost)

    def augment(self, source: int, sink: int) -> bool:
        """One unit along a cheapest residual path (Bellman-Ford)."""
        size = len(self.head)
        inf = float("inf")
        dist = [inf] * size
        via = [-1] * size
        dist[source] = 0
        for _ in range(size):
            changed = False
            for a in range(size):
                if dist[a] == inf:
                    continue
                for e in self.head[a]:
                    if self.cap[e] > 0 and dist[a] + self.cost[e] < dist[self.to[e]]:
                        dist[self.to[e]] = dist[a] + self.cost[e]
                        via[self.to[e]] = e
                        changed = True
            if not changed:
                break
        if dist[sink] == inf:
            return False
        b = sink
        while b != source:
            e = via[b]
            self.cap[e] -= 1
            self.cap[e ^ 1] += 1
            b = self.to[e ^ 1]
        return True


def _lex_paths(g: Graph, apex: int, targets: tuple[int, ...], allowed: int, boundary: int):
    """Lexicographically first triple of disjoint apex-target paths inside ``allowed``."""
    paths: list[tuple[int, ...]] = []

    def extend(i: int, used: int) -> bool:
        if i == len(targets):
            return True
        goal = targets[i]
        stack = [apex]

        def walk(v: int, used: int) -> bool:
            for w in bits(g.adj[v] & allowed):
                if w == goal:
                    paths.append(tuple(stack) + (w,))
                    if extend(i + 1, used):
                        return True
                    paths.pop()
                elif not (used | boundary) >> w & 1:
                    stack.append(w)
                    if walk(w, used | 1 << w):
                        return True
                    stack.pop()
            return False

        return walk(apex, used)

    if not extend(0, 1 << apex):
        return None
    return tuple(paths)


def min_fan_from(g: Graph, c: int, s, comp) -> Fan:
    """A 3-fan from c to s inside G[comp | s] of minimum order.

    Min-cost flow on the split digraph with every internal vertex costing one
    unit, so the result is a global minimum.  Each internal vertex w also
    earns a bonus 2^(n-1-w) below that unit, which makes the cheapest flow
    use the lexicographically smallest vertex set among the minimum ones;
    within that set the lexicographically smallest path triple is taken.
    """
    targets = tuple(sorted(s))
    comp_mask = mask_of(comp)
    s_mask = mask_of(targets)
    if len(targets) != 3 or comp_mask & s_mask:
        raise StructureError("need a 3-set disjoint from the component")
    if not comp_mask >> c & 1:
        raise StructureError(f"apex {c} is not in the component")
    n = g.n
    big = 1 << n
    net = _Network(2 * n + 1)
    sink = 2 * n
    split = {}
    for w in bits(comp_mask):
        if w != c:
            split[w] = len(net.to)
            net.arc(2 * w, 2 * w + 1, 1, big - (1 << (n - 1 - w)))
        for b in bits(g.adj[w] & (comp_mask | s_mask)):
            if b != c:
                net.arc(2 * w + 1, 2 * b, 1, 0)
    for t in targets:
        net.arc(2 * t, sink, 1, 0)
    for _ in range(3):
        if not net.augment(2 * c + 1, sink):
            raise StructureError(f"no 3-fan from {c} to {targets}")
    used = 1 << c
    for w, e in split.items():
        if net.cap[e] == 0:
            used |= 1 << w
    paths = _lex_paths(g, c, targets, used | s_mask, s_mask)
    if paths is None:
        raise StructureError("flow vertex set carries no fan")  # cannot happen
    return Fan(c, targets, paths)


def minimum_fan(g: Graph, s, comp) -> tuple[Fan, int]:
    """The minimum-order 3-fan over all apexes in ``comp``; smallest apex on ties."""
    best = None
    for c in sorted(comp):
        fan = min_fan_from(g, c, s, comp)
        if best is None or fan.order < best.order:
            best = fan
    if best is None:
        raise StructureError("empty component")
    return best, best.apex


def brute_force_min_fan_order(g: Graph, c: int, s, comp) -> int | None:
    """Smallest 3-fan order found by enumerating every fan; None if none exists."""
    targets = tuple(sorted(s))
    allowed = mask_of(comp) | mask_of(targets)
    boundary = mask_of(targets)
    best = None

    def paths_to(goal: int, used: int):
        out = []

        def walk(v: int, seen: int, trail: int) -> None:
            for w in bits(g.adj[v] & allowed):
                if w == goal:
                    out.append(trail)
                elif not (seen | boundary) >> w & 1:
                    walk(w, seen | 1 << w, trail | 1 << w)

        walk(c, used | 1 << c, 0)
        return out

    for first in paths_to(targets[0], 0):
        for second in paths_to(targets[1], first):
            for third in paths_to(targets[2], first | second):
                order = 4 + (first | second | third).bit_count()
                if best is None or order < best:
                    best = order
    return best


# -- reduced structure ---------------------------------------------------------


def _reduced_graph(g: Graph, vertices: frozenset[int], s: tuple[int, ...]) -> list[int]:
    """Adjacency (original labels) of G[vertices] without edges inside s."""
    vm = mask_of(vertices)
    sm = mask_of(s)
    adj = [0] * g.n
    for v in vertices:
        row = g.adj[v] & vm
        if sm >> v & 1:
            row &= ~sm
        adj[v] = row
    return adj


def _witness(adj: list[int], vertices: list[int], template: Graph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != sorted(vertices) or sorted(mapping.values()) != list(range(template.n)):
        return False
    for v in vertices:
        image = mask_of(mapping[u] for u in bits(adj[v]))
        if image != template.adj[mapping[v]]:
            return False
    return True


def _as_semi_wheel(adj: list[int], vertices: list[int], s: tuple[int, ...]) -> StructureReport | None:
    k = len(vertices)
    vm = mask_of(vertices)
    sm = mask_of(s)
    for center in s:
        ends = [t for t in s if t != center]
        rest = vm & ~(1 << center)
        degs = {v: (adj[v] & rest).bit_count() for v in bits(rest)}
        if any(degs[e] != 1 for e in ends):
            continue
        if any(d != 2 for v, d in degs.items() if v not in ends):
            continue
        if not is_connected_mask(adj, rest):
            continue
        if adj[center] != vm & ~sm:
            continue
        # walk the path from the smaller end
        path = [ends[0]]
        prev = -1
        while len(path) < k - 1:
            nxt = [w for w in bits(adj[path[-1]] & rest) if w != prev]
            prev = path[-1]
            path.append(nxt[0])
        if path[-1] != ends[1]:
            continue
        mapping = {center: 0}
        for i, v in enumerate(path, start=1):
            mapping[v] = i
        if _witness(adj, vertices, semi_wheel(k), mapping):
            return StructureReport(
                "semi-wheel", tuple(sorted(s)), k, center, tuple(path), tuple(sorted(mapping.items()))
            )
    return None


def _as_semi_prism(adj: list[int], vertices: list[int], s: tuple[int, ...]) -> StructureReport | None:
    if len(vertices) != 6:
        return None
    sm = mask_of(s)
    inner = [v for v in vertices if not sm >> v & 1]
    mapping = {}
    for i, v in enumerate(inner):
        mapping[v] = i
        partners = list(bits(adj[v] & sm))
        if len(partners) != 1 or partners[0] in mapping:
            return None
        mapping[partners[0]] = SEMI_PRISM_BOUNDARY[i]
    if _witness(adj, vertices, semi_prism(), mapping):
        return StructureReport("semi-prism", tuple(sorted(s)), 6, mapping=tuple(sorted(mapping.items())))
    return None


def _fallback_isomorphism(adj: list[int], vertices: list[int], s: tuple[int, ...]) -> StructureReport | None:
    # brute-force check against the templates, boundary onto boundary
    k = len(vertices)
    if k > 6:
        return None
    templates = [("semi-wheel", semi_wheel(k), (0, 1, k - 1))]
    if k == 6:
        templates.append(("semi-prism", semi_prism(), SEMI_PRISM_BOUNDARY))
    inner = [v for v in vertices if v not in s]
    for kind, tpl, tb in templates:
        t_inner = [i for i in range(k) if i not in tb]
        for bperm in permutations(tb):
            for iperm in permutations(t_inner):
                mapping = dict(zip(s, bperm)) | dict(zip(inner, iperm))
                if _witness(adj, vertices, tpl, mapping):
                    return StructureReport(kind, tuple(sorted(s)), k, mapping=tuple(sorted(mapping.items())))
    return None


def reduced_structure(g: Graph, fan: Fan, s) -> StructureReport:
    """Recognise G[V(F)] minus the edges inside s as a semi-wheel or semi-prism.

    Requires the fan to span its component plus s.  The boundary of the
    recognised shape is always s itself; ``kind`` is None if neither fits.
    """
    s = tuple(sorted(s))
    sm = mask_of(s)
    full = g.vertex_mask
    comp = component_of(g.adj, fan.apex, full & ~sm)
    if mask_of(fan.vertices) != comp | sm:
        raise StructureError("fan does not span its component together with the cut")
    vertices = sorted(fan.vertices)
    adj = _reduced_graph(g, fan.vertices, s)
    report = _as_semi_wheel(adj, vertices, s) or _as_semi_prism(adj, vertices, s)
    if report is None:
        report = _fallback_isomorphism(adj, vertices, s)
    return report or StructureReport(None, s, len(vertices))


# -- witnesses and families ---------------------------------------------------


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and is_k_connected(g, 2)


def separation_witness(g: Graph, h_vertices, u: int, v: int) -> bool:
    """G[H] is 2-connected and u, v lie in different components of G - H.

    Whenever this holds, {u, v} is a contractible non-edge of a 3-connected g.
    """
    hm = mask_of(h_vertices)
    if hm >> u & 1 or hm >> v & 1:
        raise StructureError("u and v must lie outside H")
    if u == v:
        return False
    sub, _ = subgraph(g, h_vertices)
    if not is_biconnected(sub):
        return False
    return not component_of(g.adj, u, g.vertex_mask & ~hm) >> v & 1


def recognize_family(g: Graph, kappa: int | None = None) -> set[str]:
    n = g.n
    tags = set()
    degs = g.degrees()
    if n >= 1 and g.is_complete():
        tags.add("complete")
        if n == 4:
            tags.add("wheel")
    elif n >= 2:
        low = [v for v in range(n) if degs[v] == n - 2]
        if len(low) == 2 and all(d >= n - 2 for d in degs) and not g.has_edge(*low):
            tags.add("complete-minus-edge")
    if n >= 5:
        hubs = [v for v in range(n) if degs[v] == n - 1]
        if len(hubs) == 1:
            rim, _ = subgraph(g, [v for v in range(n) if v != hubs[0]])
            if all(d == 2 for d in rim.degrees()) and is_connected_mask(rim.adj, rim.vertex_mask):
                tags.add("wheel")
    if n >= 5:
        if kappa is None:
            kappa = vertex_connectivity(g)
        if kappa >= 4:
            tags.add("four-connected")
    return tags
