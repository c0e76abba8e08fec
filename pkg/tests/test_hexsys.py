"""Hexagonal systems: lattice construction, invariants, recognizers."""

import pytest

from matchforce.errors import Disconnected, HasHole, NotATree, NotAValidCut
from matchforce.generators import gen_named, gen_truncated_parallelogram
from matchforce.graphs import BLACK, build_graph, enumerate_perfect_matchings
from matchforce.hexsys import (
    alternating_hexagons,
    build_hex_system,
    clar_number,
    fries_numbers,
    inner_dual,
    is_all_kink_catahex,
    is_truncated_parallelogram,
    normal_hex_components,
    parallel_cuts,
    sachs_cut_check,
    transform_cell,
    tree_independent_domination,
)


def test_single_cell_is_a_hexagon():
    h = build_hex_system([(0, 0)])
    assert h.graph.n == 6 and h.graph.m == 6
    assert len(h.boundary_edges) == 6
    assert h.face_vertices[0] == tuple(range(6)) or len(set(h.face_vertices[0])) == 6


def test_triphenylene_counts():
    h = gen_named("triphenylene")
    assert h.n_cells == 4
    assert h.graph.n == 18 and h.graph.m == 21
    assert h.graph.color is not None  # bipartite, colors assigned


def test_ring_has_hole():
    with pytest.raises(HasHole):
        build_hex_system([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])


def test_disconnected_cells_rejected():
    with pytest.raises(Disconnected):
        build_hex_system([(0, 0), (5, 5)])


def test_peaks_are_black():
    h = gen_truncated_parallelogram((3, 2))
    g = h.graph
    for v, key in enumerate(h.vertex_keys):
        x, y = key
        neighbors = [h.vertex_keys[w] for w, _ in g.adjacency[v]]
        if all(ny < y for _, ny in neighbors):  # local top corner
            assert g.color[v] == BLACK


def test_derived_graph_is_bipartite_and_colored():
    h = gen_truncated_parallelogram((4, 2, 1))
    g = h.graph
    assert g.color is not None
    for u, v in g.edges:
        assert g.color[u] != g.color[v]


# ----------------------------------------------------------------- invariants

def test_single_hexagon_clar_and_fries():
    h = build_hex_system([(0, 0)])
    value, (m, cells) = clar_number(h)
    assert value == 1 and cells == ((0, 0),)
    fr = fries_numbers(h)
    assert (fr.maximum, fr.minimum) == (1, 1)


def test_triphenylene_clar_and_fries():
    h = gen_named("triphenylene")
    value, _ = clar_number(h)
    assert value == 3
    fr = fries_numbers(h)
    assert fr.maximum == 4   # all-kink with four hexagons
    assert fr.minimum == 1


def test_h22_clar_equals_max_forcing():
    from matchforce.forcing import forcing_spectrum

    h = gen_truncated_parallelogram((2, 2))
    value, _ = clar_number(h)
    assert value == forcing_spectrum(h.graph).max == 2


def test_alternating_hexagons_flags():
    h = build_hex_system([(0, 0)])
    for m in enumerate_perfect_matchings(h.graph):
        assert alternating_hexagons(h, m) == (0,)


# ------------------------------------------------------------------- duals

def test_single_cell_dual():
    d = inner_dual(build_hex_system([(0, 0)]))
    assert d.graph.n == 1 and d.graph.m == 0
    assert d.is_tree


def test_triphenylene_dual_is_a_star():
    d = inner_dual(gen_named("triphenylene"))
    assert d.graph.n == 4 and d.graph.m == 3
    degrees = sorted(d.graph.degree(v) for v in range(4))
    assert degrees == [1, 1, 1, 3]
    assert d.is_tree


def test_parallelogram_dual_contains_cycle():
    # the compact 2x2 rhombus is pericondensed: four ring cells plus one
    # diagonal contact, so the dual has 5 edges on 4 nodes
    d = inner_dual(gen_truncated_parallelogram((2, 2)))
    assert d.graph.n == 4 and d.graph.m == 5
    assert not d.is_tree


# -------------------------------------------------------------- recognizers

def test_all_kink_recognition():
    assert is_all_kink_catahex(gen_named("triphenylene"))
    assert not is_all_kink_catahex(gen_truncated_parallelogram((3,)))
    assert not is_all_kink_catahex(gen_truncated_parallelogram((2, 2)))


def test_truncated_parallelogram_recognition():
    ok, params = is_truncated_parallelogram(gen_truncated_parallelogram((5, 5, 3, 2)))
    assert ok and params == (5, 5, 3, 2)
    ok, params = is_truncated_parallelogram(build_hex_system([(0, 0)]))
    assert ok and params == (1,)
    ok, params = is_truncated_parallelogram(gen_named("triphenylene"))
    assert not ok and params is None


def test_recognition_is_symmetry_invariant():
    base = gen_truncated_parallelogram((4, 2, 1)).cells
    for sym in range(12):
        h = build_hex_system([transform_cell(c, sym) for c in base])
        ok, params = is_truncated_parallelogram(h)
        assert ok and params == (4, 2, 1)


def test_zigzag_chain_is_not_truncated_parallelogram():
    h = build_hex_system([(0, 0), (1, 0), (1, 1), (2, 1)])
    ok, _ = is_truncated_parallelogram(h)
    assert not ok


# ------------------------------------------------------ independent domination

def test_idom_single_node():
    g = build_graph(1, [])
    assert tree_independent_domination(g) == (1, (0,))


def test_idom_star_picks_center():
    d = inner_dual(gen_named("triphenylene"))
    value, witness = tree_independent_domination(d)
    assert value == 1
    (center,) = witness
    assert d.graph.degree(center) == 3


def test_idom_rejects_non_tree():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(NotATree):
        tree_independent_domination(g)


def brute_idom(g):
    best = g.n
    for mask in range(1 << g.n):
        picked = {v for v in range(g.n) if mask >> v & 1}
        if len(picked) >= best:
            continue
        if any(u in picked and v in picked for u, v in g.edges):
            continue
        dominated = set(picked)
        for u, v in g.edges:
            if u in picked:
                dominated.add(v)
            if v in picked:
                dominated.add(u)
        if len(dominated) == g.n:
            best = len(picked)
    return best


def test_idom_matches_brute_force_on_fixed_trees():
    trees = [
        [(0, 1)],
        [(0, 1), (1, 2), (2, 3)],
        [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)],
        [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)],
        [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5), (5, 6), (6, 7)],
    ]
    for edges in trees:
        n = max(max(e) for e in edges) + 1
        g = build_graph(n, edges)
        value, witness = tree_independent_domination(g)
        assert value == brute_idom(g)
        wset = set(witness)
        assert len(wset) == value
        assert all(not (u in wset and v in wset) for u, v in g.edges)
        dominated = set(wset)
        for u, v in g.edges:
            if u in wset:
                dominated.add(v)
            if v in wset:
                dominated.add(u)
        assert dominated == set(range(n))


# -------------------------------------------------------------------- cuts

def test_single_hexagon_cuts():
    h = build_hex_system([(0, 0)])
    cuts = parallel_cuts(h)
    assert len(cuts) == 3 and all(len(c) == 2 for c in cuts)
    for cut in cuts:
        ok, value = sachs_cut_check(h, cut)
        assert ok and value == 1


def test_invalid_cut_rejected():
    h = build_hex_system([(0, 0)])
    with pytest.raises(NotAValidCut):
        sachs_cut_check(h, [0, 1])


def test_linear_chain_cuts_are_invariant():
    h = gen_truncated_parallelogram((3,))
    for cut in parallel_cuts(h):
        ok, value = sachs_cut_check(h, cut)
        assert ok and value >= 1


def test_triphenylene_cuts_are_invariant():
    h = gen_named("triphenylene")
    for cut in parallel_cuts(h):
        ok, _ = sachs_cut_check(h, cut)
        assert ok


# ------------------------------------------------------- normal components

def test_fixed_edge_instance_splits_into_two_parallelogram_components():
    # two 2-cell blocks meeting around a forced joint: both components
    # are truncated parallelograms and the whole has anti-forcing number 2
    h = build_hex_system([(-2, 1), (-2, 2), (-1, 1), (0, 0), (0, 1)])
    comps = normal_hex_components(h)
    assert len(comps) == 2
    for comp in comps:
        ok, _ = is_truncated_parallelogram(comp)
        assert ok


def test_normal_system_has_single_component():
    h = gen_truncated_parallelogram((3, 2))
    comps = normal_hex_components(h)
    assert len(comps) == 1 and comps[0].n_cells == h.n_cells


def test_hex_labels_carry_fusings_and_alternation():
    from matchforce.hexsys import hex_labels

    h = gen_named("triphenylene")
    labels = hex_labels(h)
    assert labels.alternating is None
    center = h.cell_index[(0, 0)]
    assert len(labels.fused_directions[center]) == 3
    # fusing directions of an all-kink system are pairwise non-opposite
    for dirs in labels.fused_directions:
        assert all((-dq, -dr) not in dirs for dq, dr in dirs)

    m = enumerate_perfect_matchings(h.graph)[0]
    labels = hex_labels(h, m)
    assert labels.alternating is not None
    assert labels.alternating == tuple(
        i in alternating_hexagons(h, m) for i in range(h.n_cells)
    )
