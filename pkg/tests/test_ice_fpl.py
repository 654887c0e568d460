from __future__ import annotations

import pytest

from chainedboards.asm import enumerate_chained_asm
from chainedboards.boards import circular
from chainedboards.errors import UnsupportedDomainError, ValidationError
from chainedboards.ice import (
    FPLConfiguration,
    IceConfiguration,
    build_grid_graph,
    enumerate_fpl,
    enumerate_ice,
    fpl_problems,
    from_fpl,
    from_ice,
    ice_problems,
    to_fpl,
    to_ice,
    validate_fpl,
    validate_ice,
    vertex_parity,
)
from tests.worked_examples import WORKED_46


def test_grid_graph_counts():
    for n, k in [(2, 2), (3, 4), (1, 2)]:
        g = build_grid_graph(n, k)
        assert len(list(g.interior_vertices())) == n * n * k
        edges = g.edges()
        assert sum(1 for e in edges if e[0] in ("bl", "bt")) == 2 * n * k
        assert sum(1 for e in edges if e[0] == "c") == n * k
        assert len(edges) == k * (2 * n * n + n)
        for v in g.interior_vertices():
            assert len(g.incident(v)) == 4
            for e in g.incident(v):
                assert v in g.endpoints(e)


def test_grid_graph_chaining_wraps():
    g = build_grid_graph(2, 4)
    assert g.endpoints(("c", 4, 1)) == ((4, 1, 2), (1, 2, 1))
    assert g.endpoints(("c", 2, 2)) == ((2, 2, 2), (3, 2, 2))


def test_grid_graph_needs_even_k():
    with pytest.raises(UnsupportedDomainError):
        build_grid_graph(2, 3)


def test_edges_are_parity_bipartite():
    g = build_grid_graph(3, 2)
    for e in g.edges():
        u, v = g.endpoints(e)
        assert vertex_parity(u) != vertex_parity(v)


def test_boundary_orientation_rules():
    ice = to_ice(WORKED_46)
    g = ice.graph
    for l in range(1, g.k + 1):
        for i in range(1, g.n + 1):
            # odd boards: left boundary points in, top boundary points out
            if l % 2 == 1:
                assert ice.head(("bl", l, i)) == (l, i, 1)
                assert ice.head(("bt", l, i)) == (l, 0, i)
            else:
                assert ice.head(("bl", l, i)) == (l, i, 0)
                assert ice.head(("bt", l, i)) == (l, 1, i)


def test_worked_example_ice_round_trip():
    ice = to_ice(WORKED_46)
    assert validate_ice(ice)
    assert from_ice(ice) == WORKED_46
    fpl = to_fpl(ice)
    assert validate_fpl(fpl)
    assert from_fpl(fpl) == ice


def test_round_trips_exhaustive():
    for n, k in [(1, 2), (2, 2), (1, 4), (2, 4), (3, 2), (2, 6)]:
        for a in enumerate_chained_asm(circular(n, k)):
            ice = to_ice(a)
            assert validate_ice(ice), ice_problems(ice)
            assert from_ice(ice) == a
            fpl = to_fpl(ice)
            assert validate_fpl(fpl), fpl_problems(fpl)
            assert from_fpl(fpl) == ice


def test_flipping_one_interior_edge_invalidates():
    ice = to_ice(WORKED_46)
    edges = ice.graph.edges()
    idx = next(i for i, e in enumerate(edges) if e[0] == "h")
    u, v = ice.graph.endpoints(edges[idx])
    flipped = list(ice.heads)
    flipped[idx] = v if flipped[idx] == u else u
    assert not validate_ice(IceConfiguration(ice.graph, tuple(flipped)))


def test_wrong_boundary_orientation_invalidates():
    ice = to_ice(WORKED_46)
    edges = ice.graph.edges()
    idx = next(i for i, e in enumerate(edges) if e[0] == "bl")
    u, v = ice.graph.endpoints(edges[idx])
    flipped = list(ice.heads)
    flipped[idx] = v if flipped[idx] == u else u
    bad = IceConfiguration(ice.graph, tuple(flipped))
    assert any("boundary" in p for p in ice_problems(bad))
    with pytest.raises(ValidationError):
        from_ice(bad)


def test_fpl_boundary_pattern():
    fpl = to_fpl(to_ice(WORKED_46))
    for l in range(1, fpl.graph.k + 1):
        for i in range(1, fpl.graph.n + 1):
            assert fpl.contains(("bl", l, i)) == (i % 2 == 1)
            assert fpl.contains(("bt", l, i)) == (i % 2 == 0)


def test_fpl_missing_edge_rejected():
    fpl = to_fpl(to_ice(WORKED_46))
    trimmed = FPLConfiguration(fpl.graph, tuple(e for e in fpl.chosen if e[0] != "c"))
    assert not validate_fpl(trimmed)
    with pytest.raises(ValidationError):
        from_fpl(trimmed)


def test_ice_and_fpl_counts_small():
    # the reference circular k=2, n=2 count is 10
    assert sum(1 for _ in enumerate_ice(2, 2)) == 10
    assert sum(1 for _ in enumerate_fpl(2, 2)) == 10
    for n, k in [(1, 2), (2, 2), (2, 4)]:
        n_asm = sum(1 for _ in enumerate_chained_asm(circular(n, k)))
        assert sum(1 for _ in enumerate_ice(n, k)) == n_asm
        assert sum(1 for _ in enumerate_fpl(n, k)) == n_asm


def test_independent_ice_enumeration_matches_images():
    for n, k in [(1, 2), (2, 2)]:
        images = {to_ice(a).heads for a in enumerate_chained_asm(circular(n, k))}
        independent = {c.heads for c in enumerate_ice(n, k)}
        assert images == independent


def test_independent_fpl_enumeration_matches_images():
    for n, k in [(1, 2), (2, 2)]:
        images = {to_fpl(to_ice(a)).chosen for a in enumerate_chained_asm(circular(n, k))}
        independent = {f.chosen for f in enumerate_fpl(n, k)}
        assert images == independent


def test_to_ice_domain():
    with pytest.raises(UnsupportedDomainError):
        to_ice(next(iter(enumerate_chained_asm(circular(2, 3)))))
