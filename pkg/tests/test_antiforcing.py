"""Anti-forcing numbers, spectra, compatible sets, anti-forcing edges."""

import itertools

import pytest

from matchforce.antiforcing import (
    anti_forcing_edges,
    antiforcing_number,
    antiforcing_spectrum,
    is_antiforcing_set,
    max_compatible_alternating_set,
    min_feedback_arc_set,
)
from matchforce.errors import IntersectsM
from matchforce.forcing import forcing_number
from matchforce.generators import gen_named, gen_truncated_parallelogram
from matchforce.graphs import (
    enumerate_perfect_matchings,
    has_unique_perfect_matching,
    orient_and_contract,
    remove_edges,
)


def test_hexagon_single_non_matching_edge_antiforces():
    g = gen_truncated_parallelogram((1,)).graph
    for m in enumerate_perfect_matchings(g):
        for e in range(g.m):
            if e not in m.edge_set:
                assert is_antiforcing_set(g, m, [e])
    assert len(anti_forcing_edges(g)) == 6


def test_antiforcing_set_must_avoid_matching():
    g = gen_named("C6")
    m = enumerate_perfect_matchings(g)[0]
    with pytest.raises(IntersectsM):
        is_antiforcing_set(g, m, [m.edge_ids[0]])


def test_empty_set_never_antiforces_triphenylene():
    g = gen_named("triphenylene").graph
    for m in enumerate_perfect_matchings(g)[:3]:
        assert not is_antiforcing_set(g, m, [])


def test_antiforcing_agrees_with_unique_matching_after_deletion():
    g = gen_named("triphenylene").graph
    for m in enumerate_perfect_matchings(g)[:3]:
        non_m = [e for e in range(g.m) if e not in m.edge_set]
        for s in itertools.combinations(non_m, 2):
            hit = is_antiforcing_set(g, m, s)
            unique, um = has_unique_perfect_matching(remove_edges(g, s))
            # the surviving unique matching must be m itself
            assert hit == unique
            if unique:
                survivors = [e for e in range(g.m) if e not in set(s)]
                restored = {survivors[e] for e in um.edge_ids}
                assert restored == set(m.edge_set)


def test_c6_antiforcing_number_is_one():
    g = gen_named("C6")
    m = enumerate_perfect_matchings(g)[0]
    value, witness = antiforcing_number(g, m)
    assert value == 1
    assert is_antiforcing_set(g, m, witness)


def test_triphenylene_antiforcing_spectrum():
    g = gen_named("triphenylene").graph
    s = antiforcing_spectrum(g)
    assert s.value_set == (2, 3, 4)
    assert s.min == 2 and s.max == 4


def test_sandwich_bound_on_named_instances():
    for name in ("triphenylene", "dodecahedron", "C4", "C6"):
        obj = gen_named(name)
        g = obj.graph if hasattr(obj, "cells") else obj
        slack = g.max_degree - 1
        for m in enumerate_perfect_matchings(g):
            f, _ = forcing_number(g, m)
            af, _ = antiforcing_number(g, m)
            assert f <= af <= slack * f, (name, f, af)


def test_compatible_family_revalidates():
    g = gen_named("triphenylene").graph
    for m in enumerate_perfect_matchings(g):
        af, _ = antiforcing_number(g, m)
        cp, family = max_compatible_alternating_set(g, m)
        assert family.mode == "compatible"
        assert family.is_valid(g, m)
        assert cp == af  # bipartite planar: the minimax is tight
        assert af >= cp  # and never below (general bound)


def test_anti_forcing_edge_counts_for_parallelogram_families():
    assert len(anti_forcing_edges(gen_truncated_parallelogram((3,)).graph)) == 4
    assert len(anti_forcing_edges(gen_truncated_parallelogram((3, 3)).graph)) == 2
    assert len(anti_forcing_edges(gen_truncated_parallelogram((5, 5, 3, 2)).graph)) == 1
    assert len(anti_forcing_edges(gen_named("triphenylene").graph)) == 0


def test_truncated_parallelogram_unique_after_deleting_its_edge():
    g = gen_truncated_parallelogram((5, 5, 3, 2)).graph
    (edge,) = anti_forcing_edges(g)
    unique, m = has_unique_perfect_matching(remove_edges(g, [edge]))
    assert unique and m is not None


def test_h5555_minimum_antiforcing_is_one():
    g = gen_truncated_parallelogram((5, 5, 5, 5)).graph
    s = antiforcing_spectrum(g)
    assert s.min == 1


def test_feedback_set_matches_antiforcing_number():
    g = gen_named("triphenylene").graph
    for m in enumerate_perfect_matchings(g)[:4]:
        af, _ = antiforcing_number(g, m)
        fb, arcs = min_feedback_arc_set(orient_and_contract(g, m))
        assert fb == af


def smallest_global_antiforcing_set(g, limit=3):
    """Direct search: fewest edge deletions leaving a unique perfect matching."""
    for k in range(limit + 1):
        for s in itertools.combinations(range(g.m), k):
            unique, _ = has_unique_perfect_matching(remove_edges(g, s))
            if unique:
                return k
    return None


def test_antiforcing_number_matches_definitional_brute_force():
    """Independent route: fewest non-matching edges whose removal pins the PM."""
    from matchforce.generators import enumerate_hex_systems

    def brute(g, m):
        non_m = [e for e in range(g.m) if e not in m.edge_set]
        for k in range(len(non_m) + 1):
            for s in itertools.combinations(non_m, k):
                unique, _ = has_unique_perfect_matching(remove_edges(g, s))
                if unique:
                    return k
        raise AssertionError("unreachable")

    for n in (1, 2, 3):
        for h in enumerate_hex_systems(n):
            g = h.graph
            for m in enumerate_perfect_matchings(g):
                assert antiforcing_number(g, m)[0] == brute(g, m)


def test_spectrum_minimum_matches_direct_global_search():
    from matchforce.generators import glue_preset

    instances = [
        gen_named("C6"),
        gen_named("triphenylene").graph,
        gen_truncated_parallelogram((2, 2)).graph,
        gen_truncated_parallelogram((3, 1)).graph,
        glue_preset(1).graph,
    ]
    for g in instances:
        direct = smallest_global_antiforcing_set(g)
        assert direct is not None  # all of these have small anti-forcing numbers
        assert antiforcing_spectrum(g).min == direct
