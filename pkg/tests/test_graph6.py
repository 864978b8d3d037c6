import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from contracta.graph import complete, from_edges
from contracta.graph6 import FormatError, emit_graph6, parse_graph6, parse_line, parse_sparse6


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_k4():
    assert emit_graph6(complete(4)) == b"C~"
    assert parse_graph6("C~") == complete(4)
    assert nx.to_graph6_bytes(to_nx(complete(4)), header=False).strip() == b"C~"


def test_single_vertex():
    assert emit_graph6(from_edges(1, [])) == b"@"
    assert parse_graph6(b"@").n == 1


def test_header_tolerated():
    assert parse_graph6(b">>graph6<<C~") == complete(4)


@pytest.mark.parametrize(
    "text,offset",
    [
        (b"C~~", 2),  # trailing byte
        (b"C", 1),  # truncated
        (b"C\x01", 1),  # non-printable
        (b"", 0),
    ],
)
def test_errors_carry_offsets(text, offset):
    with pytest.raises(FormatError) as err:
        parse_graph6(text)
    assert err.value.offset == offset


def test_nonzero_padding_rejected():
    # K_2 is "A_"; "A`" sets a padding bit
    with pytest.raises(FormatError):
        parse_graph6(b"A`")


def test_large_order_uses_long_form():
    g = from_edges(70, [(0, 69), (3, 4)])
    data = emit_graph6(g)
    assert data[0] == 126
    assert parse_graph6(data) == g
    assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@given(graphs(max_n=12))
def test_round_trip_against_networkx(g):
    data = emit_graph6(g)
    assert parse_graph6(data) == g
    assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@given(graphs(min_n=1, max_n=12))
def test_sparse6_matches_networkx(g):
    data = nx.to_sparse6_bytes(to_nx(g), header=False).strip()
    assert parse_sparse6(data) == g
    assert parse_line(data) == g
    assert parse_line(b">>sparse6<<" + data) == g
