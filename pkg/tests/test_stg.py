import pytest
from hypothesis import given

from conftest import graphs
from stablegraph import stg
from stablegraph.constructions import chain_graph
from stablegraph.graph import StableGraph


@given(graphs(stable=False))
def test_round_trip(G):
    text = stg.dumps(G)
    assert stg.loads(text) == G
    assert stg.dumps(stg.loads(text)) == text


@given(graphs(stable=False))
def test_canonical_text_is_a_fixed_point(G):
    text = stg.dumps_canonical(G)
    assert stg.dumps_canonical(stg.loads(text)) == text


def test_comments_and_blank_lines(tmp_path):
    text = "# a chain\nstg v1\n\nvertices 2   # two\nw 1 2\nlegs 0 1\nedge 1 0\nend\n"
    G = stg.loads(text)
    assert G == StableGraph((1, 2), (0, 1), [(0, 1)])
    path = tmp_path / "g.stg"
    stg.dump(chain_graph(), path)
    assert stg.load(path) == chain_graph()


@pytest.mark.parametrize("text, line, column", [
    ("", 1, 1),
    ("stg v2\n", 1, 1),
    ("stg v1\nvertex 1\n", 2, 1),
    ("stg v1\nvertices 0\nw\nlegs\nend\n", 2, 10),
    ("stg v1\nvertices 2\nw 1\n", 3, 3),
    ("stg v1\nvertices 2\nw 1 x\n", 3, 5),
    ("stg v1\nvertices 1\nw -1\nlegs 0\nend\n", 3, 3),
    ("stg v1\nvertices 2\nw 1 1\nlegs 0 0\nedge 0 2\nend\n", 5, 8),
    ("stg v1\nvertices 1\nw 1\nlegs 0\nedge 0\nend\n", 5, 1),
    ("stg v1\nvertices 1\nw 2\nlegs 0\nloop 0\n", 5, 1),
    ("stg v1\nvertices 1\nw 2\nlegs 0\n", 5, 1),
    ("stg v1\nvertices 1\nw 2\nlegs 0\nend\nedge 0 0\n", 6, 1),
    ("stg v1\nvertices 1\nw 2\nlegs 0\nend now\n", 5, 5),
])
def test_diagnostics_carry_position(text, line, column):
    with pytest.raises(stg.STGError) as info:
        stg.loads(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(info.value)
