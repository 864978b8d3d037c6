import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import leaves_up_to
from contracta.contraction import is_contractible, non_edges
from contracta.graph import (
    bits,
    complete,
    complete_minus_edge,
    components,
    cycle,
    from_edges,
    mask_of,
    octahedron,
    semi_prism,
    semi_wheel,
    wheel,
)
from contracta.structure import (
    StructureError,
    brute_force_min_fan_order,
    min_fan_from,
    minimum_fan,
    recognize_family,
    reduced_structure,
    separation_witness,
)


def fan_is_valid(g, fan, s, comp):
    assert sorted(p[-1] for p in fan.paths) == sorted(s)
    interiors = [set(p[1:-1]) for p in fan.paths]
    for i, a in enumerate(interiors):
        assert a <= set(comp) - {fan.apex}
        for b in interiors[i + 1:]:
            assert not a & b
    for p in fan.paths:
        assert p[0] == fan.apex
        assert all(g.has_edge(x, y) for x, y in zip(p, p[1:]))
    assert fan.order == 1 + sum(len(p) - 1 for p in fan.paths)


def test_trivial_fan():
    g = wheel(5)
    fan, apex = minimum_fan(g, (0, 1, 3), [2])
    assert apex == 2 and fan.order == 4


def test_semi_wheel_glued():
    # SW_5 with S = {x0, x1, x4}: C = {x2, x3}; the fan from x2 uses all five vertices
    g = semi_wheel(5)
    fan = min_fan_from(g, 2, (0, 1, 4), [2, 3])
    fan_is_valid(g, fan, (0, 1, 4), [2, 3])
    assert fan.order == 5 == brute_force_min_fan_order(g, 2, (0, 1, 4), [2, 3])
    assert reduced_structure(g, fan, (0, 1, 4)).kind == "semi-wheel"


def test_minimum_prefers_order_four():
    # apex 3 sees all of S; apex 4 needs a detour
    g = from_edges(8, [(3, 0), (3, 1), (3, 2), (3, 4), (4, 0), (4, 5), (5, 1), (5, 2)])
    fan, apex = minimum_fan(g, (0, 1, 2), [3, 4, 5])
    assert apex == 3 and fan.order == 4


def test_no_fan_raises():
    g = from_edges(5, [(3, 0), (3, 1)])
    with pytest.raises(StructureError):
        min_fan_from(g, 3, (0, 1, 2), [3])


def test_single_vertex_component_is_sw4():
    g = wheel(5)
    fan, _ = minimum_fan(g, (0, 1, 3), [2])
    r = reduced_structure(g, fan, (0, 1, 3))
    assert r.kind == "semi-wheel" and r.order == 4 and r.boundary == (0, 1, 3)


def test_semi_prism_recognised():
    # prism: triangle 0,1,2 with pendants 3,4,5 joined into a host whose S = {3,4,5}
    g = from_edges(7, list(semi_prism().edges()) + [(6, 3), (6, 4), (6, 5)])
    fan, _ = minimum_fan(g, (3, 4, 5), [0, 1, 2])
    r = reduced_structure(g, fan, (3, 4, 5))
    assert r.kind == "semi-prism" and r.boundary == (3, 4, 5)
    mapping = dict(r.mapping)
    assert sorted(mapping[v] for v in (3, 4, 5)) == [3, 4, 5]


def test_non_spanning_fan_rejected():
    g = from_edges(8, [(3, 0), (3, 1), (3, 2), (3, 4), (4, 0), (4, 5), (5, 1), (5, 2)])
    fan, _ = minimum_fan(g, (0, 1, 2), [3, 4, 5])
    with pytest.raises(StructureError, match="span"):
        reduced_structure(g, fan, (0, 1, 2))


def test_fans_minimal_and_dichotomy_up_to_7():
    spanning = 0
    for leaf in leaves_up_to(7):
        g = leaf.graph()
        for t in leaf.cuts:
            s = tuple(bits(t))
            for comp in components(g.adj, g.vertex_mask & ~t):
                cv = list(bits(comp))
                for c in cv:
                    fan = min_fan_from(g, c, s, cv)
                    fan_is_valid(g, fan, s, cv)
                    assert fan.order == brute_force_min_fan_order(g, c, s, cv)
                fan, _ = minimum_fan(g, s, cv)
                if mask_of(fan.vertices) == comp | t:
                    spanning += 1
                    r = reduced_structure(g, fan, s)
                    assert r.kind in ("semi-wheel", "semi-prism") and r.boundary == s
    assert spanning > 100


class TestWitness:
    def host(self):
        # a 4-cycle 0-1-2-3 separating 4 from 5; both see every cycle vertex
        edges = [(0, 1), (1, 2), (2, 3), (3, 0)] + [(x, y) for x in (4, 5) for y in range(4)]
        return from_edges(6, edges)

    def test_true_and_contractible(self):
        g = self.host()
        assert separation_witness(g, {0, 1, 2, 3}, 4, 5)
        assert is_contractible(g, 4, 5, check=True)

    def test_not_biconnected(self):
        assert not separation_witness(wheel(6), {1, 2}, 0, 4)

    def test_same_component(self):
        assert not separation_witness(wheel(7), {1, 2, 3}, 5, 6)

    def test_inside_h_rejected(self):
        with pytest.raises(StructureError):
            separation_witness(self.host(), {0, 1, 2, 3}, 0, 5)

    def test_soundness_up_to_7(self):
        rng = random.Random(3)
        hits = 0
        for leaf in leaves_up_to(7):
            g = leaf.graph()
            if g.n < 6:
                continue
            for _ in range(10):
                h = set(rng.sample(range(g.n), rng.randint(3, g.n - 2)))
                rest = [v for v in range(g.n) if v not in h]
                u, v = rng.sample(rest, 2)
                if separation_witness(g, h, u, v):
                    hits += 1
                    assert is_contractible(g, u, v)
        assert hits > 10


class TestFamilies:
    def test_examples(self):
        assert recognize_family(complete(7)) == {"complete", "four-connected"}
        assert recognize_family(wheel(6)) == {"wheel"}
        assert recognize_family(complete_minus_edge(6)) == {"complete-minus-edge", "four-connected"}
        assert recognize_family(complete(4)) == {"complete", "wheel"}
        assert recognize_family(octahedron()) == {"four-connected"}
        assert recognize_family(cycle(5)) == set()

    def test_hub_with_two_cycles_is_not_a_wheel(self):
        rim = [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]
        g = from_edges(7, rim + [(0, v) for v in range(1, 7)])
        assert "wheel" not in recognize_family(g)

    @settings(max_examples=100)
    @given(st.data())
    def test_invariant_under_relabeling(self, data):
        leaves = leaves_up_to(7)
        g = leaves[data.draw(st.integers(0, len(leaves) - 1))].graph()
        perm = data.draw(st.permutations(list(range(g.n))))
        assert recognize_family(g) == recognize_family(g.relabel(perm))
