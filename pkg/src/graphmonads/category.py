"""Homomorphisms, composition, enumeration and commuting-diagram checks.

The monad machinery at the bottom of the module is generic: a :class:`Monad`
bundles the object and morphism parts of an endofunctor with its unit and
multiplication, and the law/algebra checkers evaluate the relevant diagrams
pointwise, reporting the first vertex (in canonical order) where they fail.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import (
    DomainMismatch,
    ImageOutsideTarget,
    MapNotTotal,
    NotAHomomorphism,
    SearchSpaceTooLarge,
)
from .graph import Graph, graph_product
from .io import labels_from_json, labels_to_json
from .labels import PairLabel

DEFAULT_HOM_CAP = 10**7


@dataclass(frozen=True)
class Check:
    """Outcome of a checker: truthy on success, otherwise carries a witness."""

    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return f"FAIL at {_fmt(self.witness)}: {self.detail}" if self.detail else f"FAIL at {_fmt(self.witness)}"


def _fmt(w):
    if isinstance(w, tuple):
        return "{" + ",".join(str(x) for x in w) + "}"
    return str(w)


PASS = Check(True)


def _check_total(src: Graph, dst: Graph, mapping: Mapping):
    if len(mapping) != len(src.vertices) or any(v not in mapping for v in src.vertices):
        missing = sorted(v for v in src.vertices if v not in mapping)
        extra = sorted(k for k in mapping if k not in src.vertices)
        raise MapNotTotal(
            f"map must be defined on exactly V(src); missing {list(map(str, missing))}, "
            f"extra {list(map(str, extra))}"
        )
    for v in src.vertex_list:
        if mapping[v] not in dst.vertices:
            raise ImageOutsideTarget(f"{v} maps to {mapping[v]}, which is not a vertex of the target")


def is_homomorphism(src: Graph, dst: Graph, mapping: Mapping) -> Check:
    """Does ``mapping`` send every edge of ``src`` to an edge of ``dst``?

    The witness on failure is the first offending source edge.
    """
    _check_total(src, dst, mapping)
    for u, v in src.edge_list:
        if not dst.has_edge(mapping[u], mapping[v]):
            return Check(False, (u, v), f"image {{{mapping[u]},{mapping[v]}}} is not an edge")
    return PASS


@dataclass(frozen=True, eq=True)
class Hom:
    src: Graph
    dst: Graph
    mapping: Mapping = field(repr=False)
    check: InitVar[bool] = True

    def __post_init__(self, check):
        object.__setattr__(self, "mapping", dict(self.mapping))
        if check:
            res = is_homomorphism(self.src, self.dst, self.mapping)
            if not res:
                raise NotAHomomorphism(str(res))

    def __call__(self, v):
        return self.mapping[v]

    def __hash__(self):
        return hash(frozenset(self.mapping.items()))

    def __repr__(self):
        pairs = ", ".join(f"{k}->{self.mapping[k]}" for k in sorted(self.mapping))
        return f"Hom({pairs})"

    def as_tuple(self) -> tuple:
        """Images of the source vertices in canonical order."""
        return tuple(self.mapping[v] for v in self.src.vertex_list)


def identity(g: Graph) -> Hom:
    return Hom(g, g, {v: v for v in g.vertices}, check=False)


def _same_graph(a: Graph, b: Graph) -> bool:
    return a is b or a == b


def compose(g: Hom, f: Hom) -> Hom:
    """``g ∘ f`` (apply ``f`` first)."""
    if not _same_graph(f.dst, g.src):
        raise DomainMismatch("cannot compose: target of f differs from source of g")
    gm = g.mapping
    return Hom(f.src, g.dst, {v: gm[w] for v, w in f.mapping.items()}, check=False)


def hom_from_array(src: Graph, dst: Graph, row) -> Hom:
    dl = dst.vertex_list
    return Hom(src, dst, {v: dl[int(i)] for v, i in zip(src.vertex_list, row)}, check=False)


def hom_to_indices(h: Hom) -> np.ndarray:
    idx = h.dst.index
    return np.array([idx[h.mapping[v]] for v in h.src.vertex_list], dtype=np.int64)


def check_search_space(n_src: int, n_dst: int, cap: int):
    if n_src and n_dst ** n_src > cap:
        raise SearchSpaceTooLarge(
            f"{n_dst}^{n_src} candidate maps exceeds the cap of {cap}"
        )


def hom_array(g: Graph, h: Graph, cap: int = DEFAULT_HOM_CAP, backend=None) -> np.ndarray:
    """All homomorphisms ``g -> h`` as rows of target indices, lexicographically."""
    check_search_space(g.order, h.order, cap)
    return _kernels.enumerate_maps(g.adj_matrix, h.adj_matrix, backend=backend)


def enumerate_homs(g: Graph, h: Graph, cap: int = DEFAULT_HOM_CAP, backend=None) -> list:
    """Every homomorphism ``g -> h``, in lexicographic order of the image tuples.

    Raises :class:`SearchSpaceTooLarge` when ``|V(h)|**|V(g)|`` exceeds ``cap``.
    """
    return [hom_from_array(g, h, row) for row in hom_array(g, h, cap, backend)]


def _as_chain(side) -> tuple:
    if isinstance(side, Hom):
        return (side,)
    chain = tuple(side)
    if not chain:
        raise DomainMismatch("empty composite")
    return chain


def _chain_ends(chain):
    # chain (h_k, ..., h_1) denotes h_k ∘ ... ∘ h_1
    for outer, inner in zip(chain, chain[1:]):
        if not _same_graph(inner.dst, outer.src):
            raise DomainMismatch("composite is not well typed")
    return chain[-1].src, chain[0].dst


def _evaluate(chain, v):
    for h in reversed(chain):
        v = h.mapping[v]
    return v


def diagram_commutes(paths: Sequence) -> Check:
    """Check that each listed pair of composites agrees on every source vertex.

    Each element of ``paths`` is a pair ``(left, right)``; a side is either a
    :class:`Hom` or a sequence ``(h_k, ..., h_1)`` meaning ``h_k ∘ ... ∘ h_1``.
    The witness on failure is the first disagreeing vertex in canonical order.
    """
    for n, (left, right) in enumerate(paths):
        lchain, rchain = _as_chain(left), _as_chain(right)
        lsrc, ldst = _chain_ends(lchain)
        rsrc, rdst = _chain_ends(rchain)
        if not (_same_graph(lsrc, rsrc) and _same_graph(ldst, rdst)):
            raise DomainMismatch(f"path pair {n}: composites have different endpoints")
        for v in lsrc.vertex_list:
            a, b = _evaluate(lchain, v), _evaluate(rchain, v)
            if a != b:
                return Check(False, v, f"path pair {n}: {a} != {b}")
    return PASS


# -- products -------------------------------------------------------------


def projections(a: Graph, b: Graph, product: Graph | None = None):
    """The projections ``p_A``, ``p_B`` out of ``a × b``."""
    if product is None:
        product = graph_product(a, b)
    pa = Hom(product, a, {p: p.left for p in product.vertices}, check=False)
    pb = Hom(product, b, {p: p.right for p in product.vertices}, check=False)
    return pa, pb


def pairing(f: Hom, g: Hom, product: Graph | None = None) -> Hom:
    """The mediating map ``⟨f, g⟩: X -> A × B``."""
    if not _same_graph(f.src, g.src):
        raise DomainMismatch("pairing needs a common source")
    if product is None:
        product = graph_product(f.dst, g.dst)
    return Hom(f.src, product, {x: PairLabel(f.mapping[x], g.mapping[x]) for x in f.src.vertices})


def hom_to_json(h: Hom) -> dict:
    return {"map": labels_to_json(h.mapping)}


def hom_from_json(obj: Mapping, src: Graph, dst: Graph) -> Hom:
    return Hom(src, dst, labels_from_json(obj["map"]))


# -- monads ---------------------------------------------------------------


@dataclass(frozen=True)
class Monad:
    """An endofunctor on graphs together with its unit and multiplication."""

    name: str
    on_objects: Callable[[Graph], Graph]
    on_morphisms: Callable[[Hom], Hom]
    unit: Callable[[Graph], Hom]
    mult: Callable[[Graph], Hom]

    def __call__(self, g: Graph) -> Graph:
        return self.on_objects(g)


@dataclass
class LawReport:
    subject: str
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def __bool__(self):
        return self.ok

    def lines(self) -> list:
        return [f"{name}: {res}" for name, res in self.checks.items()]

    def __str__(self):
        return "\n".join([f"{self.subject}: {'ok' if self.ok else 'VIOLATION'}"] + ["  " + s for s in self.lines()])


def check_monad_laws(monad: Monad, a: Graph) -> LawReport:
    """Evaluate both unit triangles and the associativity square at ``a``."""
    t1 = monad.on_objects(a)
    eta_a = monad.unit(a)
    eta_t = monad.unit(t1)
    mu_a = monad.mult(a)
    mu_t = monad.mult(t1)
    id_t = identity(t1)
    report = LawReport(f"monad laws for {monad.name}")
    t = monad.name
    report.checks[f"left unit: mu.{t}(eta) = id"] = diagram_commutes([((mu_a, monad.on_morphisms(eta_a)), id_t)])
    report.checks[f"right unit: mu.eta_{t} = id"] = diagram_commutes([((mu_a, eta_t), id_t)])
    report.checks[f"associativity: mu.{t}(mu) = mu.mu_{t}"] = diagram_commutes(
        [((mu_a, monad.on_morphisms(mu_a)), (mu_a, mu_t))]
    )
    return report


def check_naturality(monad: Monad, f: Hom) -> Check:
    """Naturality squares of the unit and multiplication at ``f: A -> B``."""
    tf = monad.on_morphisms(f)
    ttf = monad.on_morphisms(tf)
    return diagram_commutes([
        ((monad.unit(f.dst), f), (tf, monad.unit(f.src))),
        ((monad.mult(f.dst), ttf), (tf, monad.mult(f.src))),
    ])


def check_functor_laws(monad: Monad, f: Hom, g: Hom) -> Check:
    """``T(g∘f) = T(g)∘T(f)`` and ``T(id) = id`` for the source of ``f``."""
    res = diagram_commutes([(monad.on_morphisms(compose(g, f)), (monad.on_morphisms(g), monad.on_morphisms(f)))])
    if not res:
        return res
    return diagram_commutes([(monad.on_morphisms(identity(f.src)), identity(monad.on_objects(f.src)))])


def is_algebra(monad: Monad, a: Graph, alpha: Hom) -> Check:
    """Unit triangle ``alpha∘eta = id`` and square ``alpha∘T(alpha) = alpha∘mu``."""
    t1 = monad.on_objects(a)
    if not (_same_graph(alpha.src, t1) and _same_graph(alpha.dst, a)):
        raise DomainMismatch(f"structure map must go from {monad.name}(A) to A")
    res = diagram_commutes([((alpha, monad.unit(a)), identity(a))])
    if not res:
        return Check(False, res.witness, "unit law: " + res.detail)
    res = diagram_commutes([((alpha, monad.on_morphisms(alpha)), (alpha, monad.mult(a)))])
    if not res:
        return Check(False, res.witness, "multiplication law: " + res.detail)
    return PASS


def is_algebra_morphism(monad: Monad, h: Hom, alpha1: Hom, alpha2: Hom) -> Check:
    """``h ∘ alpha1 = alpha2 ∘ T(h)``."""
    if not (_same_graph(alpha1.dst, h.src) and _same_graph(alpha2.dst, h.dst)):
        raise DomainMismatch("h must run between the carriers of the two algebras")
    return diagram_commutes([((h, alpha1), (alpha2, monad.on_morphisms(h)))])
