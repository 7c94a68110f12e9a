from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vpht.graphs import (
    DuplicateEdgeError,
    OutOfRangeError,
    SelfLoopError,
    TooManyVerticesError,
    VertexCountMismatchError,
    all_pairs,
    component_count,
    degree_profile,
    edges_to_mask,
    enumerate_graphs,
    graph_from_json,
    graph_to_json,
    make_vertical_graph,
    mask_to_edges,
    mirror,
    oriented_union,
)

import figures
import oracles


def test_edges_stored_normalized_and_sorted():
    g = make_vertical_graph(5, [(4, 1), (2, 5), (3, 1)])
    assert g.edges == ((1, 3), (1, 4), (2, 5))
    assert g.n == 5
    assert not g.multi


def test_validation_errors():
    with pytest.raises(OutOfRangeError):
        make_vertical_graph(4, [(1, 5)])
    with pytest.raises(OutOfRangeError):
        make_vertical_graph(4, [(0, 2)])
    with pytest.raises(SelfLoopError):
        make_vertical_graph(4, [(2, 2)])
    with pytest.raises(DuplicateEdgeError):
        make_vertical_graph(4, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        make_vertical_graph(0, [])


def test_multigraph_keeps_copies():
    g = make_vertical_graph(3, [(1, 2), (2, 1), (1, 3)], allow_multi=True)
    assert g.edges == ((1, 2), (1, 2), (1, 3))
    assert g.multi


def test_degree_profile_matching_graph():
    prof = degree_profile(figures.parallel_rungs())
    assert prof.ldeg == (0, 0, 0, 1, 1, 1)
    assert prof.hdeg == (1, 1, 1, 0, 0, 0)


def test_degree_profile_counts_multiplicity():
    g = make_vertical_graph(3, [(1, 3), (1, 3), (2, 3)], allow_multi=True)
    prof = degree_profile(g)
    assert prof.ldeg == (0, 0, 3)
    assert prof.hdeg == (2, 1, 0)


def test_oriented_union_arcs():
    u = oriented_union(figures.parallel_rungs(), figures.crossed_rungs())
    assert u.n == 6
    assert sorted(u.up) == [(1, 4), (2, 5), (3, 6)]
    # down-arcs run upper -> lower
    assert sorted(u.down) == [(4, 3), (5, 1), (6, 2)]


def test_oriented_union_keeps_shared_edges_as_two_arcs():
    u = oriented_union(figures.shared_chord_a(), figures.shared_chord_b())
    assert len(u.up) == 4 and len(u.down) == 4
    assert (1, 6) in u.up and (6, 1) in u.down


def test_oriented_union_rejects_mismatched_vertex_counts():
    with pytest.raises(VertexCountMismatchError):
        oriented_union(make_vertical_graph(3, []), make_vertical_graph(4, []))


def test_mirror_flips_heights():
    g = mirror(figures.shared_chord_a())
    assert g == figures.shared_chord_b()
    assert mirror(g) == figures.shared_chord_a()


def test_component_count():
    assert component_count(figures.parallel_rungs()) == 3
    assert component_count(figures.triangle()) == 1
    assert component_count(make_vertical_graph(4, [])) == 4


def test_canonical_pair_order():
    assert all_pairs(3) == [(1, 2), (1, 3), (2, 3)]
    assert all_pairs(4)[:4] == [(1, 2), (1, 3), (1, 4), (2, 3)]


def test_mask_roundtrip_small():
    n = 4
    for mask in range(1 << 6):
        edges = mask_to_edges(n, mask)
        assert edges_to_mask(n, edges) == mask


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    assert sum(1 for _ in enumerate_graphs(6)) == 32768


def test_enumeration_is_ascending_bitmask_order():
    masks = [edges_to_mask(3, g.edges) for g in enumerate_graphs(3)]
    assert masks == list(range(8))


def test_enumeration_with_base_edges():
    got = list(enumerate_graphs(3, base_edges=[(1, 2)]))
    assert len(got) == 4
    assert all((1, 2) in g.edges for g in got)
    masks = [edges_to_mask(3, g.edges) for g in got]
    assert masks == sorted(masks)


def test_enumeration_ignore_dangling_three_vertices():
    got = [g.edges for g in enumerate_graphs(3, ignore_dangling=True)]
    # every vertex must have positive degree
    assert got == [
        ((1, 2), (1, 3)),
        ((1, 2), (2, 3)),
        ((1, 3), (2, 3)),
        ((1, 2), (1, 3), (2, 3)),
    ]


def test_enumeration_matches_naive_oracle():
    for n in (1, 2, 3, 4):
        ours = [g.edges for g in enumerate_graphs(n)]
        assert sorted(ours) == sorted(oracles.naive_simple_graphs(n))


def test_enumeration_vertex_limit():
    with pytest.raises(TooManyVerticesError):
        next(enumerate_graphs(33))


def test_json_roundtrip():
    g = figures.shared_chord_a()
    blob = json.dumps(graph_to_json(g))
    assert graph_from_json(json.loads(blob)) == g


def test_json_shape():
    obj = graph_to_json(figures.triangle())
    assert obj == {"n": 3, "edges": [[1, 2], [1, 3], [2, 3]], "multi": False}


@given(st.integers(2, 8), st.data())
@settings(max_examples=60, deadline=None)
def test_degree_profile_matches_oracle(n, data):
    pairs = all_pairs(n)
    mask = data.draw(st.integers(0, (1 << len(pairs)) - 1))
    g = make_vertical_graph(n, mask_to_edges(n, mask))
    prof = degree_profile(g)
    ldeg, hdeg = oracles.degrees(n, g.edges)
    assert list(prof.ldeg) == ldeg
    assert list(prof.hdeg) == hdeg
    assert sum(prof.ldeg) == sum(prof.hdeg) == len(g.edges)


@given(st.integers(1, 7), st.data())
@settings(max_examples=60, deadline=None)
def test_mirror_is_involution(n, data):
    pairs = all_pairs(n)
    mask = data.draw(st.integers(0, (1 << len(pairs)) - 1))
    g = make_vertical_graph(n, mask_to_edges(n, mask))
    assert mirror(mirror(g)) == g
    # mirroring swaps the degree profiles end for end
    p, q = degree_profile(g), degree_profile(mirror(g))
    assert q.ldeg == tuple(reversed(p.hdeg))
    assert q.hdeg == tuple(reversed(p.ldeg))
