"""Exhaustive and random graph families plus the named fixtures used in tests."""

from __future__ import annotations

import itertools
import string
from typing import Iterator

import numpy as np

from ._kernels import all_graph_adjacencies
from .graph import Graph, make_graph
from .labels import Atom
from .matching import PerfectMatching, enumerate_matchings
from .steiner import PSTS, make_psts


def vertex_names(n: int) -> list:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"v{i}" for i in range(n)]


def graph_from_adjacency(adj: np.ndarray, names=None) -> Graph:
    n = adj.shape[0]
    labels = [Atom(x) for x in (names or vertex_names(n))]
    iu, ju = np.nonzero(np.triu(adj, 1))
    return Graph(frozenset(labels), [(labels[i], labels[j]) for i, j in zip(iu, ju)])


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**C(n,2)`` labeled graphs on the vertices ``a, b, ...``."""
    names = vertex_names(n)
    for adj in all_graph_adjacencies(n):
        yield graph_from_adjacency(adj, names)


def graphs_up_to(max_n: int) -> Iterator[Graph]:
    for n in range(max_n + 1):
        yield from labeled_graphs(n)


def random_graphs(count: int, min_n: int, max_n: int, seed: int = 0, p: float = 0.5) -> list:
    """``count`` G(n, p) graphs with ``n`` uniform in ``[min_n, max_n]``."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        upper = np.triu(rng.random((n, n)) < p, 1).astype(np.uint8)
        out.append(graph_from_adjacency(upper + upper.T))
    return out


# -- fixtures -------------------------------------------------------------------


def empty_graph() -> Graph:
    return make_graph()


def complete_graph(n: int) -> Graph:
    names = vertex_names(n)
    return make_graph(names, itertools.combinations(names, 2))


def path_graph(n: int) -> Graph:
    names = vertex_names(n)
    return make_graph(names, zip(names, names[1:]))


def cycle_graph(n: int) -> Graph:
    names = vertex_names(n)
    return make_graph(names, [(names[i], names[(i + 1) % n]) for i in range(n)])


def square_with_chord() -> Graph:
    """The 4-cycle a-b-d-c-a with the chord b-c."""
    return make_graph("abcd", [("a", "b"), ("b", "d"), ("d", "c"), ("c", "a"), ("b", "c")])


def matched(graph: Graph, pairs) -> PerfectMatching:
    m = {}
    for x, y in pairs:
        x, y = Atom(x) if isinstance(x, str) else x, Atom(y) if isinstance(y, str) else y
        m[x], m[y] = y, x
    return PerfectMatching(graph, m)


def k2_swap() -> PerfectMatching:
    return matched(complete_graph(2), [("a", "b")])


FANO_TRIPLES = ("124", "235", "346", "457", "561", "672", "713")


def fano() -> PSTS:
    """The Fano plane on points 1..7 (lines ``{i, i+1, i+3} mod 7``)."""
    return make_psts("1234567", [tuple(t) for t in FANO_TRIPLES])


# -- structured families --------------------------------------------------------


def matched_graphs(max_n: int) -> list:
    """Every (graph, perfect matching) pair on ``a, b, ...`` with ``n <= max_n``."""
    out = []
    for n in range(0, max_n + 1, 2):
        for g in labeled_graphs(n):
            out.extend(enumerate_matchings(g))
    return out


def _matched_form(pm: PerfectMatching, perm) -> tuple:
    idx = pm.graph.index
    edges = sorted(tuple(sorted((perm[idx[u]], perm[idx[v]]))) for u, v in pm.graph.edges)
    match = sorted(tuple(sorted((perm[idx[u]], perm[idx[v]]))) for u, v in pm.edges)
    return (pm.graph.order, tuple(edges), tuple(match))


def matched_graph_representatives(max_n: int) -> list:
    """One matched graph per isomorphism class, ``n <= max_n``."""
    seen = {}
    for pm in matched_graphs(max_n):
        n = pm.graph.order
        form = min(_matched_form(pm, p) for p in itertools.permutations(range(n)))
        seen.setdefault(form, pm)
    return list(seen.values())


def psts_up_to(max_points: int) -> list:
    """Every PSTS on the points ``a, b, ...`` with at most ``max_points`` points."""
    out = []
    for n in range(max_points + 1):
        names = vertex_names(n)
        all_triples = list(itertools.combinations(names, 3))
        chosen = []

        def extend(i, used):
            if i == len(all_triples):
                out.append(make_psts(names, chosen))
                return
            extend(i + 1, used)
            t = all_triples[i]
            pairs = set(itertools.combinations(t, 2))
            if not pairs & used:
                chosen.append(t)
                extend(i + 1, used | pairs)
                chosen.pop()

        extend(0, frozenset())
    return out


def _psts_form(p: PSTS, perm) -> tuple:
    idx = p.index
    return (len(p.points), tuple(sorted(tuple(sorted(perm[idx[x]] for x in t)) for t in p.triples)))


def psts_representatives(max_points: int) -> list:
    seen = {}
    for p in psts_up_to(max_points):
        n = len(p.points)
        form = min(_psts_form(p, q) for q in itertools.permutations(range(n)))
        seen.setdefault(form, p)
    return list(seen.values())
