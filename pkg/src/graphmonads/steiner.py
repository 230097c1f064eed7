"""The triangle monad S and partial Steiner triple systems.

``S(G)`` has a vertex ``{u}`` per vertex of G and a vertex ``{u,v}`` per edge;
each edge ``{u,v}`` becomes the triangle ``{u}, {v}, {u,v}``.  The unit is
``v -> {v}`` and the multiplication takes the symmetric difference of a system
of sets.  Algebras for S correspond to partial Steiner triple systems: the
structure map completes each covered pair to its unique triple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping

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
    is_algebra,
    is_algebra_morphism,
    is_homomorphism,
)
from .errors import (
    DomainMismatch,
    InvalidPSTS,
    LabelError,
    MalformedNestedLabel,
    MapNotTotal,
    NotAnAlgebra,
    ParseError,
    SearchSpaceTooLarge,
    UncoveredEdge,
)
from .graph import Graph, edge_key
from .io import labels_from_json, labels_to_json, parse_edge_list, serialize_edge_list
from .labels import PairLabel, SetLabel, as_label

DEFAULT_PSTS_CAP = 9


@lru_cache(maxsize=256)
def S_on_objects(g: Graph) -> Graph:
    single = {v: SetLabel((v,)) for v in g.vertices}
    vertices = list(single.values())
    edges = []
    for u, v in g.edges:
        uv = SetLabel((u, v))
        vertices.append(uv)
        edges += [(single[u], single[v]), (uv, single[u]), (uv, single[v])]
    return Graph(frozenset(vertices), edges)


def S_on_morphisms(f: Hom) -> Hom:
    """``{u} -> {f(u)}`` and ``{u,v} -> {f(u),f(v)}``."""
    fm = f.mapping
    mapping = {x: SetLabel([fm[e] for e in x.items]) for x in S_on_objects(f.src).vertices}
    return Hom(S_on_objects(f.src), S_on_objects(f.dst), mapping, check=False)


def eta_S(g: Graph) -> Hom:
    return Hom(g, S_on_objects(g), {v: SetLabel((v,)) for v in g.vertices}, check=False)


def symmetric_difference(system: SetLabel) -> SetLabel:
    """``Δ`` of the member sets of a set-of-sets label."""
    if not isinstance(system, SetLabel):
        raise MalformedNestedLabel(f"{system} is not a set of sets")
    acc = frozenset()
    for member in system.items:
        if not isinstance(member, SetLabel):
            raise MalformedNestedLabel(f"{system}: member {member} is not a set")
        acc = acc ^ member.elems
    try:
        return SetLabel(acc)
    except LabelError:
        raise MalformedNestedLabel(f"symmetric difference of {system} has {len(acc)} elements") from None


def mu_S(g: Graph) -> Hom:
    s1 = S_on_objects(g)
    s2 = S_on_objects(s1)
    return Hom(s2, s1, {x: symmetric_difference(x) for x in s2.vertices}, check=False)


S = Monad("S", S_on_objects, S_on_morphisms, eta_S, mu_S)


def check_monad_laws_S(g: Graph):
    return check_monad_laws(S, g)


# -- partial Steiner triple systems ---------------------------------------------


def _norm_triple(t) -> tuple:
    return tuple(sorted(t))


def is_psts(points: Iterable, triples: Iterable) -> Check:
    """Every triple has three distinct points and no pair lies in two triples.

    The witness is the first offending triple or pair.
    """
    pts = frozenset(points)
    owner = {}
    for t in sorted(_norm_triple(t) for t in triples):
        if len(set(t)) != 3:
            return Check(False, t, "triple does not have 3 distinct points")
        for p in t:
            if p not in pts:
                return Check(False, t, f"{p} is not a point")
        for pair in itertools.combinations(t, 2):
            if pair in owner and owner[pair] != t:
                return Check(False, pair, f"pair lies in two triples {owner[pair]} and {t}")
            owner[pair] = t
    return PASS


@dataclass(frozen=True)
class PSTS:
    """A finite point set with triples, any two of which share at most one point."""

    points: frozenset
    triples: frozenset

    def __post_init__(self):
        pts = frozenset(self.points)
        trs = frozenset(_norm_triple(t) for t in self.triples)
        res = is_psts(pts, trs)
        if not res:
            raise InvalidPSTS(str(res))
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "triples", trs)

    def __repr__(self):
        return f"PSTS(|points|={len(self.points)}, triples={[tuple(map(str, t)) for t in self.triple_list]})"

    @cached_property
    def point_list(self) -> tuple:
        return tuple(sorted(self.points))

    @cached_property
    def triple_list(self) -> tuple:
        return tuple(sorted(self.triples))

    @cached_property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.point_list)}

    @cached_property
    def completion(self) -> dict:
        """``(u, v) -> w`` for every ordered pair covered by the triple ``{u,v,w}``."""
        out = {}
        for a, b, c in self.triples:
            for x, y, z in itertools.permutations((a, b, c)):
                out[(x, y)] = z
        return out

    def triple_indices(self) -> np.ndarray:
        idx = self.index
        return np.array([[idx[p] for p in t] for t in self.triple_list], dtype=np.int64).reshape(-1, 3)

    def triple_cube(self) -> np.ndarray:
        """``cube[i, j, k] == 1`` iff points ``i, j, k`` form a triple (any order)."""
        n = len(self.point_list)
        cube = np.zeros((n, n, n), dtype=np.uint8)
        for t in self.triple_indices():
            for p in itertools.permutations(t):
                cube[p] = 1
        return cube


def make_psts(points: Iterable, triples: Iterable) -> PSTS:
    return PSTS(frozenset(as_label(p) for p in points),
                frozenset(tuple(as_label(p) for p in t) for t in triples))


def is_complete_sts(p: PSTS) -> bool:
    """Every pair of points lies in exactly one triple."""
    covered = sum(3 for _ in p.triples)
    n = len(p.points)
    return covered == n * (n - 1) // 2


def support_graph(p: PSTS) -> Graph:
    edges = [pair for t in p.triples for pair in itertools.combinations(t, 2)]
    return Graph(p.points, edges)


def is_psts_morphism(f, p: PSTS, q: PSTS) -> Check:
    """Does the point map ``f`` send every triple of ``p`` onto a triple of ``q``?"""
    fm = f.mapping if isinstance(f, Hom) else f
    if any(x not in fm for x in p.points):
        raise MapNotTotal("map must be defined on every point")
    for t in p.triple_list:
        image = _norm_triple(fm[x] for x in t)
        if image not in q.triples:
            return Check(False, t, f"image {tuple(map(str, image))} is not a triple")
    return PASS


# -- algebras ---------------------------------------------------------------


@dataclass(frozen=True)
class SAlgebra:
    graph: Graph
    alpha: Hom

    def __post_init__(self):
        res = is_S_algebra(self.graph, self.alpha)
        if not res:
            raise NotAnAlgebra(str(res))


def is_S_algebra(g: Graph, alpha: Hom) -> Check:
    return is_algebra(S, g, alpha)


def is_S_algebra_morphism(f: Hom, alg1: SAlgebra, alg2: SAlgebra) -> Check:
    return is_algebra_morphism(S, f, alg1.alpha, alg2.alpha)


def algebra_to_psts(alg: SAlgebra) -> PSTS:
    """Triples ``{u, v, alpha({u,v})}`` over the edges of the carrier."""
    res = is_S_algebra(alg.graph, alg.alpha)
    if not res:
        raise NotAnAlgebra(str(res))
    triples = {_norm_triple((u, v, alg.alpha(SetLabel((u, v))))) for u, v in alg.graph.edges}
    return PSTS(alg.graph.vertices, frozenset(triples))


def psts_to_algebra(p: PSTS, graph: Graph | None = None) -> SAlgebra:
    """The S-algebra on ``graph`` (default: the support graph of ``p``).

    An explicit ``graph`` must have the points of ``p`` as vertices and every
    edge covered by a triple; otherwise :class:`UncoveredEdge` is raised.
    """
    g = support_graph(p) if graph is None else graph
    if g.vertices != p.points:
        raise DomainMismatch("graph vertices differ from the points of the system")
    done = p.completion
    mapping = {SetLabel((v,)): v for v in g.vertices}
    for u, v in g.edges:
        if (u, v) not in done:
            raise UncoveredEdge(f"edge {{{u},{v}}} lies in no triple")
        mapping[SetLabel((u, v))] = done[(u, v)]
    return SAlgebra(g, Hom(S_on_objects(g), g, mapping))


# -- products ---------------------------------------------------------------


def product_psts(p: PSTS, q: PSTS) -> PSTS:
    """Product in PSTS, built from the product algebra.

    Each edge ``{(a1,b1), (a2,b2)}`` of the product of the support graphs is
    completed to ``(alpha({a1,a2}), beta({b1,b2}))``.
    """
    pc, qc = p.completion, q.completion
    points = frozenset(PairLabel(a, b) for a in p.points for b in q.points)
    triples = set()
    for (a1, a2), a3 in pc.items():
        for (b1, b2), b3 in qc.items():
            triples.add(_norm_triple((PairLabel(a1, b1), PairLabel(a2, b2), PairLabel(a3, b3))))
    return PSTS(points, frozenset(triples))


def product_psts_bruteforce(p: PSTS, q: PSTS) -> frozenset:
    """Triples of the product by filtering every 3-subset of the point product."""
    points = sorted(PairLabel(a, b) for a in p.points for b in q.points)
    out = set()
    for x in itertools.combinations(points, 3):
        if (_norm_triple(v.left for v in x) in p.triples
                and _norm_triple(v.right for v in x) in q.triples):
            out.add(x)
    return frozenset(out)


def psts_projections(prod: PSTS) -> tuple:
    """Coordinate projections out of a product system, as point maps."""
    return ({x: x.left for x in prod.points}, {x: x.right for x in prod.points})


# -- enumeration oracles ----------------------------------------------------------


def enumerate_psts_on(g: Graph, cap: int = DEFAULT_PSTS_CAP) -> list:
    """Every PSTS on ``V(g)`` whose support graph is exactly ``g``.

    Backtracking: the first uncovered edge is assigned to each triangle of
    ``g`` whose other two edges are still uncovered.
    """
    if g.order > cap:
        raise SearchSpaceTooLarge(f"{g.order} vertices exceeds the PSTS cap of {cap}")
    edges = g.edge_list
    covered = set()
    chosen = []
    found = []

    def extend(i):
        while i < len(edges) and edges[i] in covered:
            i += 1
        if i == len(edges):
            found.append(PSTS(g.vertices, frozenset(chosen)))
            return
        u, v = edges[i]
        for w in sorted(g.adjacency[u] & g.adjacency[v]):
            e1, e2 = edge_key(u, w), edge_key(v, w)
            if e1 in covered or e2 in covered:
                continue
            tri = (edges[i], e1, e2)
            covered.update(tri)
            chosen.append(_norm_triple((u, v, w)))
            extend(i + 1)
            chosen.pop()
            covered.difference_update(tri)

    extend(0)
    return sorted(found, key=lambda s: s.triple_list)


def enumerate_S_algebras(g: Graph, cap: int = DEFAULT_PSTS_CAP) -> list:
    """Every S-algebra structure on ``g``, found from the algebra diagrams alone.

    Singletons are pinned by the unit law; the image of each edge-vertex
    ``{u,v}`` ranges over common neighbours of ``u`` and ``v`` (the triangle
    ``{u},{v},{u,v}`` must land on a triangle).  Partial assignments are
    pruned by the square law wherever it is already decidable, and every
    complete candidate passes the full homomorphism and algebra checks.
    """
    if g.order > cap:
        raise SearchSpaceTooLarge(f"{g.order} vertices exceeds the algebra cap of {cap}")
    s1 = S_on_objects(g)
    s2 = S_on_objects(s1)
    mu = mu_S(g).mapping
    edge_vertices = [SetLabel(e) for e in g.edge_list]
    candidates = [sorted(g.adjacency[e.items[0]] & g.adjacency[e.items[1]]) for e in edge_vertices]
    alpha = {SetLabel((v,)): v for v in g.vertices}
    squares = [(k, k.items, mu[k]) for k in s2.vertex_list]

    def square_ok():
        for k, members, folded in squares:
            images = []
            for y in members:
                img = alpha.get(y)
                if img is None:
                    break
                images.append(img)
            else:
                left = alpha.get(SetLabel(images))
                right = alpha.get(folded)
                if left is not None and right is not None and left != right:
                    return False
        return True

    found = []

    def extend(i):
        if i == len(edge_vertices):
            if not is_homomorphism(s1, g, alpha):
                return
            hom = Hom(s1, g, alpha, check=False)
            if is_S_algebra(g, hom):
                found.append(SAlgebra(g, hom))
            return
        ev = edge_vertices[i]
        for w in candidates[i]:
            alpha[ev] = w
            if square_ok():
                extend(i + 1)
        alpha.pop(ev, None)

    extend(0)
    return found


def psts_morphism_array(p: PSTS, q: PSTS, cap: int = DEFAULT_HOM_CAP, backend=None) -> np.ndarray:
    """All PSTS morphisms ``p -> q`` as rows of point indices, lexicographically."""
    check_search_space(len(p.points), len(q.points), cap)
    n, m = len(p.points), len(q.points)
    return _kernels.enumerate_maps(
        np.zeros((n, n), dtype=np.uint8), np.zeros((m, m), dtype=np.uint8),
        src_triples=p.triple_indices(), dst_triple=q.triple_cube(), backend=backend,
    )


def enumerate_psts_morphisms(p: PSTS, q: PSTS, cap: int = DEFAULT_HOM_CAP, backend=None) -> list:
    ql = q.point_list
    return [{x: ql[int(i)] for x, i in zip(p.point_list, row)}
            for row in psts_morphism_array(p, q, cap, backend)]


# -- JSON -------------------------------------------------------------------------


def psts_to_json(p: PSTS) -> dict:
    return {
        "points": [str(x) for x in p.point_list],
        "triples": [[str(x) for x in t] for t in p.triple_list],
    }


def psts_from_json(obj: Mapping) -> PSTS:
    if not isinstance(obj, Mapping) or "points" not in obj or "triples" not in obj:
        raise ParseError("PSTS JSON needs 'points' and 'triples'")
    try:
        points = [as_label(x) for x in obj["points"]]
        triples = [tuple(as_label(x) for x in t) for t in obj["triples"]]
    except (LabelError, TypeError) as exc:
        raise ParseError(f"bad PSTS JSON: {exc}") from None
    return PSTS(frozenset(points), frozenset(triples))


def S_algebra_to_json(alg: SAlgebra) -> dict:
    return {"graph": serialize_edge_list(alg.graph), "alpha": labels_to_json(alg.alpha.mapping)}


def S_algebra_from_json(obj: Mapping) -> SAlgebra:
    g = parse_edge_list(obj["graph"])
    return SAlgebra(g, Hom(S_on_objects(g), g, labels_from_json(obj.get("alpha", {}))))
