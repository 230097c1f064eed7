"""Finite simple loopless undirected graphs over structured labels."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .errors import EdgeEndpointMissing, LoopEdge, VertexNotInGraph
from .labels import PairLabel, VertexLabel, as_label

Edge = tuple  # (u, v) with u < v in canonical label order


def edge_key(u: VertexLabel, v: VertexLabel) -> Edge:
    return (u, v) if u < v else (v, u)


def _normalize_edges(edges, vertices):
    out = set()
    for e in edges:
        pair = tuple(e)
        if len(pair) == 1:
            raise LoopEdge(f"loop at {pair[0]}")
        if len(pair) != 2:
            raise EdgeEndpointMissing(f"edge must have exactly two endpoints, got {pair!r}")
        u, v = pair
        if u == v:
            raise LoopEdge(f"loop edge {{{u},{v}}}")
        for x in (u, v):
            if x not in vertices:
                raise EdgeEndpointMissing(f"edge {{{u},{v}}}: endpoint {x} is not a vertex")
        out.add(edge_key(u, v))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """An immutable simple loopless graph.

    ``edges`` holds each unordered edge once, as a 2-tuple ordered by the
    canonical label order.  Construction validates the invariants, so every
    ``Graph`` value in circulation is well formed.
    """

    vertices: frozenset
    edges: frozenset = frozenset()

    def __post_init__(self):
        vs = frozenset(self.vertices)
        for v in vs:
            if not isinstance(v, VertexLabel):
                raise TypeError(f"vertex {v!r} is not a VertexLabel; use make_graph")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", _normalize_edges(self.edges, vs))

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_list(self) -> tuple:
        return tuple(sorted(self.vertices))

    @cached_property
    def edge_list(self) -> tuple:
        return tuple(sorted(self.edges))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertex_list)}

    @cached_property
    def adjacency(self) -> Mapping[VertexLabel, frozenset]:
        nbrs = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def adj_matrix(self) -> np.ndarray:
        """Adjacency as a ``uint8`` matrix indexed by :attr:`vertex_list`."""
        n = len(self.vertex_list)
        mat = np.zeros((n, n), dtype=np.uint8)
        idx = self.index
        for u, v in self.edges:
            i, j = idx[u], idx[v]
            mat[i, j] = mat[j, i] = 1
        return mat

    def neighbors(self, v) -> list:
        """Neighbours of ``v`` in canonical order."""
        return sorted(self.adjacency[v])

    def has_edge(self, u, v) -> bool:
        return u != v and edge_key(u, v) in self.edges

    def degree(self, v) -> int:
        return len(self.adjacency[v])


def make_graph(vertices: Iterable = (), edges: Iterable = ()) -> Graph:
    """Build a graph, coercing canonical label text to labels.

    Duplicate edges collapse; loops raise :class:`LoopEdge` and dangling
    endpoints raise :class:`EdgeEndpointMissing`.
    """
    vs = frozenset(as_label(v) for v in vertices)
    es = [tuple(as_label(x) for x in e) for e in edges]
    return Graph(vs, es)


EMPTY_GRAPH = Graph(frozenset())


def graph_product(a: Graph, b: Graph) -> Graph:
    """Categorical (tensor) product: adjacent iff adjacent in both factors."""
    vertices = frozenset(PairLabel(x, y) for x in a.vertices for y in b.vertices)
    edges = []
    for a1, a2 in a.edges:
        for b1, b2 in b.edges:
            edges.append((PairLabel(a1, b1), PairLabel(a2, b2)))
            edges.append((PairLabel(a1, b2), PairLabel(a2, b1)))
    return Graph(vertices, edges)


def induced_subgraph(g: Graph, subset: Iterable) -> Graph:
    keep = frozenset(subset)
    missing = keep - g.vertices
    if missing:
        raise VertexNotInGraph(f"not vertices of the graph: {sorted(map(str, missing))}")
    return Graph(keep, [e for e in g.edges if e[0] in keep and e[1] in keep])
