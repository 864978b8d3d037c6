import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from contracta.connectivity import brute_force_connectivity
from contracta.graph import (
    Graph,
    GraphError,
    NamedFamily,
    complete,
    complete_minus_edge,
    contract_pair,
    cycle,
    delete,
    from_edges,
    make_named,
    subgraph,
    wheel,
)


def edge_set(g):
    return set(g.edges())


class TestConstruction:
    def test_k4(self):
        g = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert g == complete(4)

    def test_empty(self):
        g = from_edges(3, [])
        assert g.adj == (0, 0, 0)

    def test_duplicates_collapse(self):
        g = from_edges(5, [(0, 1), (0, 1), (1, 2)])
        assert edge_set(g) == {(0, 1), (1, 2)}

    @pytest.mark.parametrize("edges", [[(0, 5)], [(-1, 0)], [(2, 2)]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(GraphError):
            from_edges(4, edges)

    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError):
            Graph(2, (0b10, 0))

    def test_neighbors_and_distance(self):
        g = cycle(6)
        assert g.neighbors(0) == {1, 5}
        assert g.distance(0, 3) == 3
        assert from_edges(2, []).distance(0, 1) is None


class TestFamilies:
    def test_semi_wheel_5(self):
        g = make_named(NamedFamily("semi-wheel", 5))
        assert edge_set(g) == {(1, 2), (2, 3), (3, 4), (0, 2), (0, 3)}

    def test_semi_wheel_4(self):
        g = make_named(NamedFamily("semi-wheel", 4))
        assert edge_set(g) == {(1, 2), (2, 3), (0, 2)}

    def test_wheel_5(self):
        g = make_named(NamedFamily("wheel", 5))
        assert edge_set(g) == {(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)}

    def test_semi_prism(self):
        g = make_named(NamedFamily("semi-prism"))
        assert edge_set(g) == {(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)}

    def test_complete_minus_edge(self):
        g = make_named(NamedFamily("complete-minus-edge", 5))
        assert not g.has_edge(0, 1) and g.num_edges == 9

    @pytest.mark.parametrize("tag,n", [("wheel", 3), ("semi-wheel", 3), ("complete-minus-edge", 1)])
    def test_minimum_orders(self, tag, n):
        with pytest.raises(GraphError):
            NamedFamily(tag, n)


class TestContraction:
    def test_k5_minus(self):
        assert contract_pair(complete_minus_edge(5), 0, 1) == complete(4)

    def test_c4_pairs(self):
        # the opposite pair merges into the middle of a path; an edge gives a triangle
        assert edge_set(contract_pair(cycle(4), 0, 2)) == {(0, 2), (1, 2)}
        assert contract_pair(cycle(4), 0, 1) == complete(3)

    def test_wheel_rim_pair(self):
        h = contract_pair(wheel(5), 1, 3)
        # survivors 0, 2, 4 keep order; z is vertex 3
        assert h.neighbors(3) == {0, 1, 2}
        assert h.neighbors(1) == {0, 3} and h.neighbors(2) == {0, 3}
        assert brute_force_connectivity(h) == 2

    def test_edge_contraction(self):
        assert contract_pair(complete(4), 0, 1) == complete(3)

    @pytest.mark.parametrize("u,v", [(0, 0), (0, 9)])
    def test_errors(self, u, v):
        with pytest.raises(GraphError):
            contract_pair(cycle(5), u, v)

    @given(graphs(min_n=2), st.data())
    def test_simple_and_traceable(self, g, data):
        u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
        h = contract_pair(g, u, v)
        assert h.n == g.n - 1
        Graph(h.n, h.adj)  # validates loops and symmetry
        keep = [w for w in range(g.n) if w not in (u, v)]
        image = {old: new for new, old in enumerate(keep)}
        image[u] = image[v] = h.n - 1
        traced = {tuple(sorted((image[a], image[b]))) for a, b in g.edges() if image[a] != image[b]}
        assert edge_set(h) == traced


class TestSubgraphs:
    def test_empty_keep(self):
        h, m = subgraph(complete(5), [])
        assert h.n == 0 and m == {}

    def test_triangle(self):
        h, _ = subgraph(complete(5), {0, 1, 2})
        assert h == complete(3)

    def test_hub_removal(self):
        h, m = delete(wheel(6), {0})
        assert h == cycle(5)
        assert m == {1: 0, 2: 1, 3: 2, 4: 3, 5: 4}

    @given(graphs(), st.data())
    def test_composition(self, g, data):
        a = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))).map(lambda s: {v for v in s if v < g.n}))
        b = data.draw(st.sets(st.sampled_from(sorted(a)))) if a else set()
        ga, ma = subgraph(g, a)
        twice, _ = subgraph(ga, {ma[v] for v in b})
        once, _ = subgraph(g, b)
        assert twice == once

    @given(graphs())
    def test_degree_sum(self, g):
        assert sum(g.degrees()) == 2 * g.num_edges
