"""Simple undirected graphs: automorphisms, isomorphism and reductions.

Automorphism and isomorphism searches are exhaustive backtracking over
vertex images with adjacency consistency enforced on every partial
assignment;
that is exact at the small sizes used here and needs no canonical-labeling
machinery.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .errors import CapacityError
from .permutation import Permutation, all_permutations
from .repops import FiniteGroupView, subgroup_view, symmetric_group_view
from .sampling import HiddenSubgroupInstance

AUT_VERTEX_CAP = 12
GI_VERTEX_CAP = 8
GI_COMBINED_CAP = 16
HSP_VERTEX_CAP = 8


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside 1..{vertex_count}")
            normalized.add((min(u, v), max(u, v)))
        return cls(vertex_count, frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def canonical_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors = [set() for _ in range(self.vertex_count + 1)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(self.adjacency[v]) for v in range(1, self.vertex_count + 1)))

    def apply(self, p: Permutation) -> "Graph":
        """Relabeled copy: edge {u, v} becomes {p(u), p(v)}."""
        if p.degree != self.vertex_count:
            raise ValueError("permutation degree does not match vertex count")
        return Graph.from_edges(
            self.vertex_count, ((p(u), p(v)) for u, v in self.edges)
        )

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph.from_edges(n, edges)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.vertex_count
    edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    return Graph.from_edges(a.vertex_count + b.vertex_count, edges)


def disjoint_cycle_family(smallest: int, cycle_count: int) -> Graph:
    """Disjoint union of cycles of lengths m, m+1, ..., m+count-1."""
    if smallest < 3 or cycle_count < 1:
        raise ValueError("need smallest >= 3 and at least one cycle")
    graph = cycle_graph(smallest)
    for extra in range(1, cycle_count):
        graph = disjoint_union(graph, cycle_graph(smallest + extra))
    return graph


@dataclass(frozen=True)
class AutGroup:
    graph: Graph
    elements: tuple[Permutation, ...]
    generators: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_view(self, parent: FiniteGroupView) -> FiniteGroupView:
        return subgroup_view(parent, self.elements, name="Aut")


def brute_force_aut(graph: Graph) -> AutGroup:
    """All edge-preserving permutations, by pruned exhaustive search."""
    n = graph.vertex_count
    if n > AUT_VERTEX_CAP:
        raise CapacityError(f"{n} vertices exceed automorphism cap {AUT_VERTEX_CAP}")
    found = _isomorphism_search(graph, graph, find_all=True)
    elements = tuple(sorted(found, key=lambda p: p.images))
    return AutGroup(graph=graph, elements=elements, generators=_generating_set(elements))


def _generating_set(elements: tuple[Permutation, ...]) -> tuple[Permutation, ...]:
    if not elements:
        return ()
    n = elements[0].degree
    generated = {Permutation.identity(n)}
    generators: list[Permutation] = []
    for g in elements:
        if g in generated:
            continue
        generators.append(g)
        frontier = set(generated)
        frontier.add(g)
        while True:
            grown = {a * b for a in frontier for b in frontier}
            if grown <= frontier:
                break
            frontier |= grown
        generated = frontier
    return tuple(generators)


def _isomorphism_search(a: Graph, b: Graph, find_all: bool):
    """Backtracking search for edge-preserving bijections from a to b."""
    n = a.vertex_count
    results: list[Permutation] = []
    if b.vertex_count != n or a.edge_count != b.edge_count:
        return results
    if a.degree_sequence() != b.degree_sequence():
        return results
    deg_a = [len(a.adjacency[v]) for v in range(n + 1)]
    deg_b = [len(b.adjacency[v]) for v in range(n + 1)]
    mapping = [0] * (n + 1)
    used = [False] * (n + 1)

    def extend(v: int) -> bool:
        if v > n:
            results.append(Permutation(tuple(mapping[1:])))
            return not find_all
        for w in range(1, n + 1):
            if used[w] or deg_a[v] != deg_b[w]:
                continue
            ok = True
            for u in range(1, v):
                if (u in a.adjacency[v]) != (mapping[u] in b.adjacency[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
        mapping[v] = 0
        return False

    extend(1)
    return results


def brute_force_gi(a: Graph, b: Graph, vertex_cap: int = GI_VERTEX_CAP,
                   combined_cap: int = GI_COMBINED_CAP) -> bool:
    """Exhaustive isomorphism test with degree-sequence pruning."""
    if a.vertex_count > vertex_cap or b.vertex_count > vertex_cap:
        raise CapacityError(f"a graph exceeds the per-graph cap {vertex_cap}")
    if a.vertex_count + b.vertex_count > combined_cap:
        raise CapacityError(f"combined size exceeds cap {combined_cap}")
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False
    return bool(_isomorphism_search(a, b, find_all=False))


def attach_label_gadget(graph: Graph, vertex: int) -> Graph:
    """Mark a vertex by hanging a pendant path longer than any native path.

    The gadget has vertex_count + 1 new vertices, so it cannot be confused
    with structure already present in the graph and two labeled copies are
    isomorphic exactly when an automorphism maps one marked vertex to the
    other.
    """
    n = graph.vertex_count
    extra = n + 1
    edges = list(graph.edges)
    edges.append((vertex, n + 1))
    edges += [(n + i, n + i + 1) for i in range(1, extra)]
    return Graph.from_edges(n + extra, edges)


def ga_gi_turing_reduction(graph: Graph,
                           gi_decider: Callable[[Graph, Graph], bool] | None = None,
                           transcript: list | None = None) -> bool:
    """Accept iff the graph has a non-trivial automorphism.

    Asks an isomorphism decider about every pair of single-vertex-labeled
    copies; accepts on the first isomorphic pair.  The default decider is
    the built-in exhaustive one with its caps widened to fit the gadgeted
    copies (a labeled copy of an n-vertex graph has 2n+1 vertices).
    """
    n = graph.vertex_count
    if gi_decider is None:
        if n > HSP_VERTEX_CAP:
            raise CapacityError(
                f"{n} vertices exceed the built-in decider cap {HSP_VERTEX_CAP}"
            )
        gadget_size = 2 * n + 1
        gi_decider = lambda x, y: brute_force_gi(
            x, y, vertex_cap=gadget_size, combined_cap=2 * gadget_size
        )
    labeled = {v: attach_label_gadget(graph, v) for v in range(1, n + 1)}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            isomorphic = gi_decider(labeled[i], labeled[j])
            if transcript is not None:
                transcript.append((i, j, isomorphic))
            if isomorphic:
                return True
    return False


def hsp_instance_from_graph(graph: Graph) -> HiddenSubgroupInstance:
    """Hidden-subgroup instance whose oracle is the relabeled edge set.

    The ambient group is the full symmetric group on the vertices; the
    hidden subgroup is the automorphism group; the oracle sends g to the
    canonical serialization of g applied to the graph, which is constant
    exactly on left cosets of the automorphism group.
    """
    n = graph.vertex_count
    if n > HSP_VERTEX_CAP:
        raise CapacityError(f"{n} vertices exceed HSP instance cap {HSP_VERTEX_CAP}")
    ambient = symmetric_group_view(n)
    aut = brute_force_aut(graph)
    hidden = subgroup_view(ambient, aut.elements, name="Aut")
    oracle = lambda g: graph.apply(g).canonical_edges()
    return HiddenSubgroupInstance(ambient=ambient, hidden=hidden, oracle=oracle)


# -- file formats -----------------------------------------------------------


def graph_to_text(graph: Graph) -> str:
    lines = [f"{graph.vertex_count} {graph.edge_count}"]
    lines += [f"{u} {v}" for u, v in graph.canonical_edges()]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = [line for line in text.splitlines() if line.strip()]
    n, m = map(int, lines[0].split())
    edges = [tuple(map(int, line.split())) for line in lines[1 : m + 1]]
    if len(edges) != m:
        raise ValueError(f"expected {m} edge lines, found {len(edges)}")
    return Graph.from_edges(n, edges)


def graph_to_json(graph: Graph) -> str:
    return json.dumps(
        {"vertex_count": graph.vertex_count,
         "edges": [list(e) for e in graph.canonical_edges()]},
        sort_keys=True,
    )


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    return Graph.from_edges(data["vertex_count"], data["edges"])


def load_graph(path: str) -> Graph:
    with open(path) as handle:
        text = handle.read()
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return graph_from_text(text)


# -- exhaustive small-graph corpus ------------------------------------------


def _edge_positions(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]


def all_graphs_up_to_iso(n: int) -> list[Graph]:
    """One representative per isomorphism class of simple graphs on n vertices.

    Every labeled graph is encoded as an edge bitmask; the canonical form is
    the minimum mask over all vertex permutations, computed for all masks at
    once with vectorized bit gathers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > 6:
        raise CapacityError("corpus generation is capped at 6 vertices")
    positions = _edge_positions(n)
    index = {pair: i for i, pair in enumerate(positions)}
    masks = np.arange(1 << len(positions), dtype=np.int64)
    canon = masks.copy()
    for images in itertools.permutations(range(1, n + 1)):
        gathered = np.zeros_like(masks)
        for src, (u, v) in enumerate(positions):
            pu, pv = images[u - 1], images[v - 1]
            dst = index[(min(pu, pv), max(pu, pv))]
            gathered |= ((masks >> src) & 1) << dst
        np.minimum(canon, gathered, out=canon)
    representatives = np.unique(canon)
    graphs = []
    for mask in representatives.tolist():
        edges = [positions[i] for i in range(len(positions)) if mask >> i & 1]
        graphs.append(Graph.from_edges(n, edges))
    return graphs


def find_rigid_graph(n: int = 6) -> Graph:
    """First graph (in corpus order) on n vertices with trivial automorphisms."""
    for graph in all_graphs_up_to_iso(n):
        if brute_force_aut(graph).order == 1:
            return graph
    raise ValueError(f"no rigid graph on {n} vertices")
