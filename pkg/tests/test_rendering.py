from __future__ import annotations

import re

import pytest

from chainedboards.boards import circular, linear
from chainedboards.errors import UnsupportedDomainError
from chainedboards.ice import build_grid_graph, to_ice
from chainedboards.matchings import build_chain_graph, to_matching
from chainedboards.perms import from_one_line, parse_one_line
from chainedboards.placements import canonical_placement
from chainedboards.rendering import render
from chainedboards.serialization import str_to_vertex, vertex_to_str
from chainedboards.triangles import to_monotone_triangles
from tests.worked_examples import ONE_LINE_46, WORKED_46


def test_ascii_placement_grid():
    text = render(canonical_placement(linear(2, 1), (2,)), "ascii")
    assert text == "board 1\nR.\n.R\n"


def test_ascii_board_and_matrices():
    assert render(linear(2, 2), "ascii").count(".") == 8
    matrices = render(WORKED_46, "ascii")
    assert "matrix 6" in matrices and "-1" in matrices


def test_ascii_triangles():
    text = render(to_monotone_triangles(WORKED_46), "ascii")
    assert "triangle 3" in text
    assert "1 3 5 8" in text.replace("  ", " ")


def test_dot_chain_graph_counts():
    dot = render(build_chain_graph(circular(2, 2)), "dot")
    assert dot.startswith("graph chain {")
    assert len(re.findall(r'^\s+"\d+:\d+";$', dot, re.M)) == 4
    assert len(re.findall(r" -- ", dot)) == 8


def test_dot_matching_marks_matched_edges():
    cp = from_one_line(parse_one_line("12-00-"))
    dot = render(to_matching(cp), "dot")
    assert dot.count("style=bold") == 2


def test_dot_grid_graph():
    g = build_grid_graph(2, 2)
    dot = render(g, "dot")
    assert len(re.findall(r" -- ", dot)) == len(g.edges())


def test_dot_ice_has_two_in_per_interior_vertex():
    ice = to_ice(WORKED_46)
    dot = render(ice, "dot")
    heads = re.findall(r'-> "([^"]+)"', dot)
    indeg: dict[str, int] = {}
    for h in heads:
        indeg[h] = indeg.get(h, 0) + 1
    for v in ice.graph.interior_vertices():
        assert indeg[vertex_to_str(v)] == 2
    # identifiers survive the string form
    for h in heads:
        assert vertex_to_str(str_to_vertex(h)) == h


def test_dot_fpl_lists_chosen_edges_only():
    from chainedboards.ice import to_fpl

    fpl = to_fpl(to_ice(WORKED_46))
    dot = render(fpl, "dot")
    assert len(re.findall(r" -- ", dot)) == len(fpl.chosen)


def test_unsupported_pairings_rejected():
    with pytest.raises(UnsupportedDomainError):
        render(build_chain_graph(circular(2, 2)), "ascii")
    with pytest.raises(UnsupportedDomainError):
        render(WORKED_46, "dot")
    with pytest.raises(UnsupportedDomainError):
        render(WORKED_46, "svg")


def test_renders_deterministic():
    a = render(to_ice(WORKED_46), "dot")
    b = render(to_ice(WORKED_46), "dot")
    assert a == b


def test_one_line_ascii_is_wire_format():
    o = parse_one_line(ONE_LINE_46)
    assert render(o, "ascii") == ONE_LINE_46 + "\n"
