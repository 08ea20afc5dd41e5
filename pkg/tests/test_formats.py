import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from emdlab.formats import (
    emit_edge_list_text,
    emit_graph6,
    parse_edge_list_text,
    parse_graph6,
    read_graph6_lines,
    read_graph_file,
)
from emdlab.graph_core import GraphError, from_edge_list
from emdlab.verify import corpus_lines
from oracles import to_nx


def test_triangle_graph6_by_hand():
    # n=3 -> 'B'; bits (0,1),(0,2),(1,2) = 111 padded to 111000 = 56, +63 = 'w'
    k3 = from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    assert emit_graph6(k3) == "Bw"
    assert parse_graph6("Bw") == k3
    assert parse_graph6(">>graph6<<Bw\n") == k3


def test_graph6_long_size_prefix():
    g = from_edge_list(63, [(i, i + 1) for i in range(62)])
    text = emit_graph6(g)
    assert text.startswith("~??~")
    assert parse_graph6(text) == g
    assert text.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()


@pytest.mark.parametrize("bad", ["Bx", "B", "Bww", "B\x7f", "", "B w"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphError):
        parse_graph6(bad)


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=10))
def test_graph6_matches_networkx_and_round_trips(g):
    text = emit_graph6(g)
    assert text.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert parse_graph6(text) == g


def test_shipped_corpus_is_all_connected_graphs_up_to_six():
    graphs = [parse_graph6(x) for x in corpus_lines("corpus-n6.g6")]
    counts = {}
    for g in graphs:
        assert g.connected
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
    # pairwise non-isomorphic within each order
    for n in (4, 5):
        hs = [to_nx(g) for g in graphs if g.n == n]
        assert not any(nx.is_isomorphic(a, b) for i, a in enumerate(hs) for b in hs[i + 1:])


def test_read_graph6_lines_reports_bad_lines_and_continues():
    rows = list(read_graph6_lines(["Bw", "B!", "", "A_"]))
    assert [r[0] for r in rows] == [1, 2, 4]
    assert isinstance(rows[1][2], GraphError)
    assert rows[2][2].m == 1


def test_edge_list_round_trip():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    text = emit_edge_list_text(g)
    assert text == "4 4\n0 1\n0 3\n1 2\n2 3\n"
    assert parse_edge_list_text(text) == g
    assert parse_edge_list_text("3 2\n2 1\n1 0\n") == from_edge_list(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("bad", [
    "3 2\n0 1\n",          # fewer edges than declared
    "3 1\n0 1",            # no trailing newline
    "3 1\n0 x\n",          # junk
    "3\n",                 # bad header
    "3 1\n0 0\n",          # loop
])
def test_edge_list_rejects_malformed(bad):
    with pytest.raises(GraphError):
        parse_edge_list_text(bad)


def test_read_graph_file_sniffs_format(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("3 2\n0 1\n1 2\n")
    assert read_graph_file(str(p)).m == 2
    q = tmp_path / "g.g6"
    q.write_text("Bw\n")
    assert read_graph_file(str(q)).m == 3
