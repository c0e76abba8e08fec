"""Simple undirected graphs, perfect matchings, and alternating cycles.

Everything here is immutable and pure: a Graph never changes after
construction, enumeration results come back in a fixed canonical order, and
derived structures (matchings, cycles, the contracted digraph) index into
the parent graph's edge list.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import islice
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    BadColoring,
    DuplicateEdge,
    LimitExceeded,
    NoPerfectMatching,
    NotBipartite,
    NotPerfect,
    SelfLoop,
)

WHITE = 0
BLACK = 1

DEFAULT_MATCHING_CAP = 10**6
DEFAULT_CYCLE_CAP = 10**6

FIXED_SINGLE = "fixed-single"
FIXED_DOUBLE = "fixed-double"
FREE = "free"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; the edge index is the position in `edges`."""

    n: int
    edges: tuple[tuple[int, int], ...]
    color: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (neighbor, edge id) pairs in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, stored as sorted edge ids."""

    edge_ids: tuple[int, ...]

    def __init__(self, edge_ids: Iterable[int]):
        object.__setattr__(self, "edge_ids", tuple(sorted(set(edge_ids))))

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __contains__(self, eid: int) -> bool:
        return eid in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)


@dataclass(frozen=True)
class AltCycle:
    """An alternating cycle in canonical rotation.

    `vertex_seq` starts at the smallest cycle vertex and continues toward its
    smaller cycle neighbor; `edge_ids` is the induced edge set.
    """

    vertex_seq: tuple[int, ...]
    edge_ids: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertex_seq)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertex_seq)


@dataclass(frozen=True)
class ContractedDigraph:
    """Digraph obtained by contracting every matching edge to a node.

    Node i corresponds to the i-th matching edge (in edge-id order); each arc
    remembers the non-matching edge it came from.  Parallel arcs are kept.
    """

    node_count: int
    arcs: tuple[tuple[int, int], ...]
    arc_edges: tuple[int, ...]

    @cached_property
    def out_arcs(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per node: (head, arc id) pairs in arc order."""
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.node_count)]
        for aid, (tail, head) in enumerate(self.arcs):
            out[tail].append((head, aid))
        return tuple(tuple(o) for o in out)


class DirectedCycle(NamedTuple):
    node_seq: tuple[int, ...]
    arc_ids: frozenset[int]


class InducedSubgraph(NamedTuple):
    """A relabelled subgraph plus the original vertex/edge ids it came from."""

    graph: Graph
    vertex_ids: tuple[int, ...]
    edge_ids: tuple[int, ...]


def two_coloring(n: int, edges: Iterable[tuple[int, int]]) -> tuple[int, ...] | None:
    """BFS 2-coloring; None when an odd cycle makes it impossible."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = WHITE
        queue = [start]
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return tuple(color)


def build_graph(
    n: int,
    edge_list: Iterable[tuple[int, int]],
    color: Iterable[int] | None = None,
) -> Graph:
    """Validate and freeze a graph; edge indices follow input order.

    When no coloring is supplied one is computed if the graph is bipartite;
    non-bipartite graphs simply carry no coloring.
    """
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)

    if color is not None:
        col = tuple(color)
        if len(col) != n or any(c not in (WHITE, BLACK) for c in col):
            raise BadColoring("coloring must assign 0 or 1 to every vertex")
        for u, v in edges:
            if col[u] == col[v]:
                raise BadColoring(f"edge ({u}, {v}) joins two vertices of color {col[u]}")
    else:
        col = two_coloring(n, edges)
    return Graph(n=n, edges=tuple(edges), color=col)


def remove_edges(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """Copy of g without the given edges; colors carry over unchanged."""
    drop = set(edge_ids)
    kept = tuple(e for eid, e in enumerate(g.edges) if eid not in drop)
    return Graph(n=g.n, edges=kept, color=g.color)


def relabel_graph(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex i renamed to perm[i]; edge order re-canonicalized."""
    edges = sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges)
    color: list[int] | None = None
    if g.color is not None:
        color = [0] * g.n
        for v, c in enumerate(g.color):
            color[perm[v]] = c
    return Graph(n=g.n, edges=tuple(edges), color=tuple(color) if color else None)


def matching_partner(g: Graph, m: Matching) -> list[int]:
    """partner[v] for a perfect matching; raises NotPerfect otherwise."""
    partner = [-1] * g.n
    for eid in m.edge_ids:
        if eid < 0 or eid >= g.m:
            raise NotPerfect(f"edge id {eid} not in graph")
        u, v = g.edges[eid]
        if partner[u] != -1 or partner[v] != -1:
            raise NotPerfect(f"edge {eid} overlaps another matching edge")
        partner[u] = v
        partner[v] = u
    if any(p == -1 for p in partner):
        raise NotPerfect("matching does not cover every vertex")
    return partner


def is_perfect_matching(g: Graph, m: Matching) -> bool:
    try:
        matching_partner(g, m)
    except NotPerfect:
        return False
    return True


def _iter_perfect_matchings(g: Graph) -> Iterator[tuple[int, ...]]:
    """Backtracking over the lowest-index uncovered vertex, edges in id order."""
    covered = bytearray(g.n)
    chosen: list[int] = []
    adjacency = g.adjacency

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            yield tuple(chosen)
            return
        for w, eid in adjacency[v]:
            if not covered[w]:
                covered[v] = covered[w] = 1
                chosen.append(eid)
                yield from extend(v + 1)
                covered[v] = covered[w] = 0
                chosen.pop()

    if g.n % 2 == 0:
        yield from extend(0)


def enumerate_perfect_matchings(
    g: Graph, max_matchings: int = DEFAULT_MATCHING_CAP
) -> tuple[Matching, ...]:
    """Every perfect matching exactly once, sorted by edge-id sequence."""
    found: list[tuple[int, ...]] = []
    for chosen in _iter_perfect_matchings(g):
        found.append(tuple(sorted(chosen)))
        if len(found) > max_matchings:
            raise LimitExceeded(f"more than {max_matchings} perfect matchings")
    found.sort()
    return tuple(Matching(ids) for ids in found)


def count_perfect_matchings(g: Graph, max_matchings: int = DEFAULT_MATCHING_CAP) -> int:
    count = 0
    for _ in _iter_perfect_matchings(g):
        count += 1
        if count > max_matchings:
            raise LimitExceeded(f"more than {max_matchings} perfect matchings")
    return count


def _pendant_reduction(g: Graph) -> tuple[str, list[int], list[int]]:
    """Iteratively take pendant edges as forced.

    Returns (status, forced edge ids, alive vertices) where status is one of
    'consumed' (everything matched), 'dead' (an uncovered vertex ran out of
    edges, so no perfect matching), or 'stalled' (min degree ≥ 2 remains).
    """
    alive_v = bytearray(b"\x01" * g.n)
    alive_e = bytearray(b"\x01" * g.m)
    deg = [g.degree(v) for v in range(g.n)]
    forced: list[int] = []
    queue = [v for v in range(g.n) if deg[v] <= 1]

    def drop_vertex(v: int) -> None:
        alive_v[v] = 0
        for w, eid in g.adjacency[v]:
            if alive_e[eid]:
                alive_e[eid] = 0
                deg[w] -= 1
                if alive_v[w] and deg[w] <= 1:
                    queue.append(w)

    while queue:
        v = queue.pop()
        if not alive_v[v]:
            continue
        if deg[v] == 0:
            return "dead", forced, [u for u in range(g.n) if alive_v[u]]
        if deg[v] != 1:
            continue
        u, eid = next((w, e) for w, e in g.adjacency[v] if alive_e[e])
        forced.append(eid)
        drop_vertex(v)
        drop_vertex(u)

    remaining = [u for u in range(g.n) if alive_v[u]]
    status = "consumed" if not remaining else "stalled"
    return status, forced, remaining


def _induced(g: Graph, vertices: list[int], edge_ids: list[int]) -> InducedSubgraph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = tuple((index[g.edges[e][0]], index[g.edges[e][1]]) for e in edge_ids)
    color = tuple(g.color[v] for v in vertices) if g.color is not None else None
    sub = Graph(n=len(vertices), edges=tuple(tuple(sorted(e)) for e in edges), color=color)
    return InducedSubgraph(sub, tuple(vertices), tuple(edge_ids))


def has_unique_perfect_matching(g: Graph) -> tuple[bool, Matching | None]:
    """Uniqueness test; near-linear on bipartite input via pendant reduction.

    On bipartite graphs pendant edges are forced one after another; a stall
    with minimum degree ≥ 2 leaves 0 or ≥ 2 perfect matchings, settled by an
    enumeration capped at two.  Non-bipartite input goes straight to the
    capped enumeration.
    """
    if g.color is None:
        first_two = list(islice(_iter_perfect_matchings(g), 2))
        if len(first_two) == 1:
            return True, Matching(first_two[0])
        return False, None

    status, forced, remaining = _pendant_reduction(g)
    if status == "consumed":
        return True, Matching(forced)
    if status == "dead":
        return False, None

    alive = set(remaining)
    # forced edges always lose both endpoints, so alive edges are exactly
    # those with both ends still standing
    sub_edges = [
        eid for eid, (u, v) in enumerate(g.edges) if u in alive and v in alive
    ]
    sub = _induced(g, remaining, sub_edges)
    first_two = list(islice(_iter_perfect_matchings(sub.graph), 2))
    if len(first_two) == 1:
        full = list(forced) + [sub.edge_ids[e] for e in first_two[0]]
        return True, Matching(full)
    return False, None


def _canonical_rotation(seq: list[int]) -> tuple[int, ...]:
    """Rotate/reflect a cyclic sequence: smallest vertex first, smaller neighbor second."""
    i = seq.index(min(seq))
    nxt = seq[(i + 1) % len(seq)]
    prev = seq[i - 1]
    if nxt <= prev:
        return tuple(seq[i:] + seq[:i])
    return tuple(seq[i::-1] + seq[:i:-1])


def enumerate_alternating_cycles(
    g: Graph, m: Matching, max_cycles: int = DEFAULT_CYCLE_CAP
) -> tuple[AltCycle, ...]:
    """All cycles alternating between matching and non-matching edges.

    Every such cycle contains the matching edge of each of its vertices, so
    each one is discovered exactly once: rooted at its smallest vertex and
    walked starting along that vertex's matching edge.
    """
    partner = matching_partner(g, m)
    match_edge = [-1] * g.n
    for eid in m.edge_ids:
        u, v = g.edges[eid]
        match_edge[u] = eid
        match_edge[v] = eid
    non_m_adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        if eid not in m.edge_set:
            non_m_adj[u].append((v, eid))
            non_m_adj[v].append((u, eid))

    cycles: list[AltCycle] = []
    on_path = bytearray(g.n)
    path: list[int] = []
    path_edges: list[int] = []

    def walk(root: int, u: int) -> None:
        # u is matched within the path; the next edge must avoid the matching
        for w, eid in non_m_adj[u]:
            if w == root:
                vs = _canonical_rotation(path)
                cycles.append(AltCycle(vs, frozenset(path_edges + [eid])))
                if len(cycles) > max_cycles:
                    raise LimitExceeded(f"more than {max_cycles} alternating cycles")
            elif w > root and not on_path[w]:
                pw = partner[w]
                if pw > root and not on_path[pw]:
                    on_path[w] = on_path[pw] = 1
                    path.extend((w, pw))
                    path_edges.extend((eid, match_edge[w]))
                    walk(root, pw)
                    path_edges.pop()
                    path_edges.pop()
                    path.pop()
                    path.pop()
                    on_path[w] = on_path[pw] = 0

    for s in range(g.n):
        t = partner[s]
        if t < s:
            continue
        on_path[s] = on_path[t] = 1
        path.extend((s, t))
        path_edges.append(match_edge[s])
        walk(s, t)
        path_edges.pop()
        path.pop()
        path.pop()
        on_path[s] = on_path[t] = 0

    cycles.sort(key=lambda c: (len(c.vertex_seq), c.vertex_seq))
    return tuple(cycles)


def edge_fixedness(
    g: Graph, max_matchings: int = DEFAULT_MATCHING_CAP
) -> tuple[str, ...]:
    """Label every edge fixed-single / fixed-double / free by PM membership."""
    counts = [0] * g.m
    total = 0
    for chosen in _iter_perfect_matchings(g):
        total += 1
        if total > max_matchings:
            raise LimitExceeded(f"more than {max_matchings} perfect matchings")
        for eid in chosen:
            counts[eid] += 1
    if total == 0:
        raise NoPerfectMatching("graph has no perfect matching")
    labels = []
    for c in counts:
        if c == 0:
            labels.append(FIXED_SINGLE)
        elif c == total:
            labels.append(FIXED_DOUBLE)
        else:
            labels.append(FREE)
    return tuple(labels)


def normal_components(
    g: Graph, max_matchings: int = DEFAULT_MATCHING_CAP
) -> tuple[InducedSubgraph, ...]:
    """Connected components of the subgraph spanned by the free edges."""
    labels = edge_fixedness(g, max_matchings)
    free_ids = [eid for eid, lab in enumerate(labels) if lab == FREE]
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid in free_ids:
        u, v = g.edges[eid]
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))

    seen: set[int] = set()
    comps: list[InducedSubgraph] = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        verts: set[int] = {start}
        edges: set[int] = set()
        while stack:
            u = stack.pop()
            for w, eid in adj[u]:
                edges.add(eid)
                if w not in verts:
                    verts.add(w)
                    stack.append(w)
        seen |= verts
        comps.append(_induced(g, sorted(verts), sorted(edges)))
    return tuple(comps)


def orient_and_contract(g: Graph, m: Matching) -> ContractedDigraph:
    """Contract each matching edge to a node; orient the rest black → white.

    Directed cycles of the result correspond one-to-one to alternating cycles
    of the graph, with arc provenance giving back the non-matching edges.
    """
    if g.color is None:
        raise NotBipartite("orientation requires a 2-coloring")
    matching_partner(g, m)  # raises NotPerfect on bad input
    node_of = [-1] * g.n
    for i, eid in enumerate(m.edge_ids):
        u, v = g.edges[eid]
        node_of[u] = node_of[v] = i
    arcs: list[tuple[int, int]] = []
    provenance: list[int] = []
    for eid, (u, v) in enumerate(g.edges):
        if eid in m.edge_set:
            continue
        black, white = (u, v) if g.color[u] == BLACK else (v, u)
        arcs.append((node_of[black], node_of[white]))
        provenance.append(eid)
    return ContractedDigraph(len(m), tuple(arcs), tuple(provenance))


def enumerate_directed_cycles(
    d: ContractedDigraph, max_cycles: int = DEFAULT_CYCLE_CAP
) -> tuple[DirectedCycle, ...]:
    """All node-simple directed cycles; parallel arcs yield distinct cycles."""
    cycles: list[DirectedCycle] = []
    on_path = bytearray(d.node_count)
    path: list[int] = []
    arc_path: list[int] = []

    def walk(root: int, u: int) -> None:
        for head, aid in d.out_arcs[u]:
            if head == root and len(path) >= 2:
                cycles.append(DirectedCycle(tuple(path), frozenset(arc_path + [aid])))
                if len(cycles) > max_cycles:
                    raise LimitExceeded(f"more than {max_cycles} directed cycles")
            elif head > root and not on_path[head]:
                on_path[head] = 1
                path.append(head)
                arc_path.append(aid)
                walk(root, head)
                arc_path.pop()
                path.pop()
                on_path[head] = 0

    for root in range(d.node_count):
        on_path[root] = 1
        path.append(root)
        walk(root, root)
        path.pop()
        on_path[root] = 0

    cycles.sort(key=lambda c: (len(c.node_seq), c.node_seq, sorted(c.arc_ids)))
    return tuple(cycles)
