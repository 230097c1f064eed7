"""The pendant-edge monad T and perfect matchings.

``T(A)`` attaches a new leaf ``x~1`` to every vertex ``x`` (which becomes
``x~0``).  The unit is ``x -> x~0`` and the multiplication folds the two
layers of leaves with exclusive or: ``x~i~j -> x~(i^j)``.  Algebras for T are
exactly graphs with a perfect matching, read off as ``m(x) = alpha(x~1)``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import _kernels
from .category import (
    DEFAULT_HOM_CAP,
    PASS,
    Check,
    Hom,
    Monad,
    check_monad_laws,
    check_search_space,
    hom_from_array,
    is_algebra,
    is_algebra_morphism,
    is_homomorphism,
)
from .errors import (
    DomainMismatch,
    InvalidMatching,
    MalformedNestedLabel,
    NotAnAlgebra,
    NotEquivariant,
    ParseError,
    SearchSpaceTooLarge,
)
from .graph import Graph, graph_product, induced_subgraph
from .io import labels_from_json, labels_to_json, parse_edge_list, serialize_edge_list
from .labels import PairLabel, Tagged

DEFAULT_MATCHING_CAP = 12


@lru_cache(maxsize=256)
def T_on_objects(a: Graph) -> Graph:
    vertices = [Tagged(x, i) for x in a.vertices for i in (0, 1)]
    edges = [(Tagged(x, 0), Tagged(y, 0)) for x, y in a.edges]
    edges += [(Tagged(x, 0), Tagged(x, 1)) for x in a.vertices]
    return Graph(frozenset(vertices), edges)


def T_on_morphisms(f: Hom) -> Hom:
    fm = f.mapping
    mapping = {Tagged(x, i): Tagged(fm[x], i) for x in f.src.vertices for i in (0, 1)}
    return Hom(T_on_objects(f.src), T_on_objects(f.dst), mapping, check=False)


def eta_T(a: Graph) -> Hom:
    return Hom(a, T_on_objects(a), {x: Tagged(x, 0) for x in a.vertices}, check=False)


def _fold(v):
    if not (isinstance(v, Tagged) and isinstance(v.base, Tagged)):
        raise MalformedNestedLabel(f"{v} is not a vertex of T(T(A))")
    return Tagged(v.base.base, v.base.bit ^ v.bit)


def mu_T(a: Graph) -> Hom:
    t1 = T_on_objects(a)
    t2 = T_on_objects(t1)
    return Hom(t2, t1, {v: _fold(v) for v in t2.vertices}, check=False)


T = Monad("T", T_on_objects, T_on_morphisms, eta_T, mu_T)


def check_monad_laws_T(a: Graph):
    return check_monad_laws(T, a)


# -- perfect matchings ------------------------------------------------------


def is_perfect_matching(graph: Graph, m: Mapping) -> Check:
    """Functional form: ``{x, m(x)}`` is an edge and ``m∘m = id``.

    The witness is the first offending vertex in canonical order.
    """
    for x in graph.vertex_list:
        if x not in m:
            return Check(False, x, "vertex has no partner")
        y = m[x]
        if y not in graph.vertices:
            return Check(False, x, f"partner {y} is not a vertex")
        if not graph.has_edge(x, y):
            return Check(False, x, f"{{{x},{y}}} is not an edge")
        if m.get(y) != x:
            return Check(False, x, f"not an involution: m({y}) = {m.get(y)}")
    extra = sorted(k for k in m if k not in graph.vertices)
    if extra:
        return Check(False, extra[0], "matched vertex is not in the graph")
    return PASS


@dataclass(frozen=True)
class PerfectMatching:
    graph: Graph
    m: Mapping = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "m", dict(self.m))
        res = is_perfect_matching(self.graph, self.m)
        if not res:
            raise InvalidMatching(str(res))

    def __hash__(self):
        return hash((self.graph, frozenset(self.m.items())))

    def __repr__(self):
        return "PerfectMatching(" + " ".join(f"{u}-{v}" for u, v in self.edges) + ")"

    def __call__(self, x):
        return self.m[x]

    @property
    def edges(self) -> tuple:
        """The matched edges, each once, in canonical order."""
        return tuple(sorted((x, y) for x, y in self.m.items() if x < y))

    def partner_indices(self) -> np.ndarray:
        idx = self.graph.index
        return np.array([idx[self.m[v]] for v in self.graph.vertex_list], dtype=np.int64)


@dataclass(frozen=True)
class TAlgebra:
    graph: Graph
    alpha: Hom

    def __post_init__(self):
        res = is_T_algebra(self.graph, self.alpha)
        if not res:
            raise NotAnAlgebra(str(res))


def is_T_algebra(a: Graph, alpha: Hom) -> Check:
    return is_algebra(T, a, alpha)


def is_T_algebra_morphism(f: Hom, alg1: TAlgebra, alg2: TAlgebra) -> Check:
    return is_algebra_morphism(T, f, alg1.alpha, alg2.alpha)


def is_perf_morphism(f: Hom, pm1: PerfectMatching, pm2: PerfectMatching) -> Check:
    """Equivariance ``f(m(x)) = m'(f(x))`` at every vertex."""
    if f.src != pm1.graph or f.dst != pm2.graph:
        raise DomainMismatch("f must run between the underlying graphs")
    fm = f.mapping
    for x in pm1.graph.vertex_list:
        if fm[pm1.m[x]] != pm2.m[fm[x]]:
            return Check(False, x, f"f(m({x})) = {fm[pm1.m[x]]} but m'(f({x})) = {pm2.m[fm[x]]}")
    return PASS


def matching_to_algebra(pm: PerfectMatching) -> TAlgebra:
    mapping = {}
    for x in pm.graph.vertices:
        mapping[Tagged(x, 0)] = x
        mapping[Tagged(x, 1)] = pm.m[x]
    return TAlgebra(pm.graph, Hom(T_on_objects(pm.graph), pm.graph, mapping))


def algebra_to_matching(alg: TAlgebra) -> PerfectMatching:
    res = is_T_algebra(alg.graph, alg.alpha)
    if not res:
        raise NotAnAlgebra(str(res))
    return PerfectMatching(alg.graph, {x: alg.alpha(Tagged(x, 1)) for x in alg.graph.vertices})


# -- limits in Perf ----------------------------------------------------------


def product_perf(pm1: PerfectMatching, pm2: PerfectMatching) -> PerfectMatching:
    """Product in Perf: the graph product with ``m(a, b) = (m(a), m'(b))``."""
    g = graph_product(pm1.graph, pm2.graph)
    return PerfectMatching(g, {p: PairLabel(pm1.m[p.left], pm2.m[p.right]) for p in g.vertices})


def equalizer_perf(f: Hom, g: Hom, pm1: PerfectMatching, pm2: PerfectMatching):
    """Equalizer of parallel Perf morphisms ``f, g: (A, m) -> (B, m')``.

    Returns the restriction of ``m`` to the subgraph induced on the agreement
    set of ``f`` and ``g``, together with its inclusion into ``A``.
    """
    for name, h in (("f", f), ("g", g)):
        res = is_perf_morphism(h, pm1, pm2)
        if not res:
            raise NotEquivariant(f"{name} is not a Perf morphism: {res}")
    agree = [v for v in pm1.graph.vertex_list if f.mapping[v] == g.mapping[v]]
    sub = induced_subgraph(pm1.graph, agree)
    eq = PerfectMatching(sub, {v: pm1.m[v] for v in agree})
    inclusion = Hom(sub, pm1.graph, {v: v for v in agree})
    return eq, inclusion


# -- enumeration oracles ------------------------------------------------------


def enumerate_matchings(a: Graph, cap: int = DEFAULT_MATCHING_CAP) -> list:
    """All perfect matchings of ``a`` by backtracking over edges.

    Matchings come out in lexicographic order of their partner tuples.
    """
    if a.order > cap:
        raise SearchSpaceTooLarge(f"{a.order} vertices exceeds the matching cap of {cap}")
    order = a.vertex_list
    nbrs = {v: a.neighbors(v) for v in order}
    partner = {}
    found = []

    def extend():
        free = next((v for v in order if v not in partner), None)
        if free is None:
            found.append(PerfectMatching(a, partner))
            return
        for w in nbrs[free]:
            if w not in partner:
                partner[free], partner[w] = w, free
                extend()
                del partner[free], partner[w]

    extend()
    return found


def enumerate_T_algebras(a: Graph, cap: int = DEFAULT_MATCHING_CAP) -> list:
    """All T-algebra structures on ``a``, found without reference to matchings.

    The unit law pins ``alpha(x~0) = x``, so only the leaf images vary.  The
    leaf edge ``{x~0, x~1}`` must land on an edge at ``x``, so each leaf image
    ranges over the neighbours of ``x``; every candidate is then filtered by
    the homomorphism test and both algebra diagrams.
    """
    if a.order > cap:
        raise SearchSpaceTooLarge(f"{a.order} vertices exceeds the algebra cap of {cap}")
    order = a.vertex_list
    ta = T_on_objects(a)
    base = {Tagged(x, 0): x for x in order}
    out = []
    for images in itertools.product(*(a.neighbors(x) for x in order)):
        mapping = dict(base)
        mapping.update({Tagged(x, 1): y for x, y in zip(order, images)})
        if not is_homomorphism(ta, a, mapping):
            continue
        alpha = Hom(ta, a, mapping, check=False)
        if is_T_algebra(a, alpha):
            out.append(TAlgebra(a, alpha))
    return out


def perf_morphism_array(pm1: PerfectMatching, pm2: PerfectMatching,
                        cap: int = DEFAULT_HOM_CAP, backend=None) -> np.ndarray:
    check_search_space(pm1.graph.order, pm2.graph.order, cap)
    return _kernels.enumerate_maps(
        pm1.graph.adj_matrix, pm2.graph.adj_matrix,
        pm1.partner_indices(), pm2.partner_indices(), backend=backend,
    )


def enumerate_perf_morphisms(pm1: PerfectMatching, pm2: PerfectMatching,
                             cap: int = DEFAULT_HOM_CAP, backend=None) -> list:
    """All Perf morphisms ``(A, m) -> (B, m')`` in lexicographic order."""
    rows = perf_morphism_array(pm1, pm2, cap, backend)
    return [hom_from_array(pm1.graph, pm2.graph, r) for r in rows]


# -- JSON -------------------------------------------------------------------------


def matching_to_json(pm: PerfectMatching) -> dict:
    return {"graph": serialize_edge_list(pm.graph), "matching": labels_to_json(pm.m)}


def matching_from_json(obj: Mapping, graph: Graph | None = None, base_dir=None) -> PerfectMatching:
    """Read ``{"graph": ..., "matching": {...}}``.

    ``graph`` may be an edge-list string or ``{"file": path}``; an explicitly
    passed ``graph`` argument takes its place.  Malformed matchings raise
    :class:`InvalidMatching`.
    """
    if not isinstance(obj, Mapping) or "matching" not in obj:
        raise ParseError("matching JSON needs a 'matching' object")
    if graph is None:
        graph = _graph_field(obj, base_dir)
    return PerfectMatching(graph, labels_from_json(obj["matching"]))


def _graph_field(obj, base_dir):
    ref = obj.get("graph")
    if isinstance(ref, str):
        return parse_edge_list(ref)
    if isinstance(ref, Mapping) and isinstance(ref.get("file"), str):
        path = ref["file"]
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    raise ParseError("expected 'graph' to be an edge-list string or {\"file\": path}")


def algebra_to_json(alg) -> dict:
    return {"graph": serialize_edge_list(alg.graph), "alpha": labels_to_json(alg.alpha.mapping)}


def T_algebra_from_json(obj: Mapping, base_dir=None) -> TAlgebra:
    g = _graph_field(obj, base_dir)
    return TAlgebra(g, Hom(T_on_objects(g), g, labels_from_json(obj.get("alpha", {}))))
