"""Forcing sets, forcing numbers and spectra, disjoint cycle packings.

A forcing set of a perfect matching is a subset of it contained in no other
perfect matching; equivalently, one meeting every alternating cycle.  The
forcing number is the smallest such set, computed here as an exact minimum
hitting set over the enumerated alternating cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import exact
from .errors import NoPerfectMatching, NotSubsetOfM
from .graphs import (
    AltCycle,
    DEFAULT_CYCLE_CAP,
    DEFAULT_MATCHING_CAP,
    Graph,
    Matching,
    enumerate_alternating_cycles,
    enumerate_perfect_matchings,
)

DISJOINT = "disjoint"
COMPATIBLE = "compatible"


@dataclass(frozen=True)
class CycleFamily:
    """A family of alternating cycles under a pairwise-intersection rule.

    mode "disjoint": members share no vertex.  mode "compatible": members
    may only overlap in matching edges (every shared vertex must lie on a
    shared matching edge).
    """

    cycles: tuple[AltCycle, ...]
    mode: str

    def __len__(self) -> int:
        return len(self.cycles)

    def is_valid(self, g: Graph, m: Matching) -> bool:
        for i, a in enumerate(self.cycles):
            for b in self.cycles[i + 1:]:
                if self.mode == DISJOINT:
                    if a.vertex_set & b.vertex_set:
                        return False
                elif not compatible_cycles(g, m, a, b):
                    return False
        return True


def compatible_cycles(g: Graph, m: Matching, a: AltCycle, b: AltCycle) -> bool:
    """True when two alternating cycles are disjoint or meet only in m-edges."""
    shared_edges = a.edge_ids & b.edge_ids
    if not shared_edges <= m.edge_set:
        return False
    shared_vertices = a.vertex_set & b.vertex_set
    if not shared_vertices:
        return True
    covered: set[int] = set()
    for eid in shared_edges:
        covered.update(g.edges[eid])
    return shared_vertices <= covered


@dataclass(frozen=True)
class Spectrum:
    """Per-matching invariant values, indexed like the canonical enumeration."""

    values: tuple[int, ...]

    @cached_property
    def min(self) -> int:
        return min(self.values)

    @cached_property
    def max(self) -> int:
        return max(self.values)

    @cached_property
    def value_set(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))


def is_forcing_set(
    g: Graph, m: Matching, edge_ids, max_cycles: int = DEFAULT_CYCLE_CAP
) -> bool:
    """Does the subset of m meet every alternating cycle?"""
    s = frozenset(edge_ids)
    if not s <= m.edge_set:
        raise NotSubsetOfM(f"{sorted(s - m.edge_set)} are not matching edges")
    cycles = enumerate_alternating_cycles(g, m, max_cycles)
    return all(c.edge_ids & s for c in cycles)


def forcing_number(
    g: Graph, m: Matching, max_cycles: int = DEFAULT_CYCLE_CAP
) -> tuple[int, tuple[int, ...]]:
    """Exact forcing number with its lexicographically least witness."""
    cycles = enumerate_alternating_cycles(g, m, max_cycles)
    return exact.min_hitting_set(c.edge_ids & m.edge_set for c in cycles)


def max_disjoint_alternating_cycles(
    g: Graph, m: Matching, max_cycles: int = DEFAULT_CYCLE_CAP
) -> tuple[int, CycleFamily]:
    """Largest family of pairwise vertex-disjoint alternating cycles."""
    cycles = enumerate_alternating_cycles(g, m, max_cycles)
    conflicts = _vertex_conflicts(cycles)
    size, picked = exact.max_independent_indices(conflicts)
    return size, CycleFamily(tuple(cycles[i] for i in picked), DISJOINT)


def _vertex_conflicts(cycles: tuple[AltCycle, ...]) -> list[int]:
    conflicts = [0] * len(cycles)
    for i, a in enumerate(cycles):
        for j in range(i + 1, len(cycles)):
            if a.vertex_set & cycles[j].vertex_set:
                conflicts[i] |= 1 << j
                conflicts[j] |= 1 << i
    return conflicts


def forcing_spectrum(
    g: Graph,
    max_matchings: int = DEFAULT_MATCHING_CAP,
    max_cycles: int = DEFAULT_CYCLE_CAP,
) -> Spectrum:
    """f per perfect matching; min is f(G), max is F(G)."""
    pms = enumerate_perfect_matchings(g, max_matchings)
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    return Spectrum(tuple(forcing_number(g, m, max_cycles)[0] for m in pms))
