"""Brute-force verification of universal properties.

Each checker enumerates every morphism involved with the map kernels and
confirms that the candidate limit behaves as one against a given test object:
cones and mediating morphisms are in bijection (products), or equalizing maps
factor uniquely through the inclusion (equalizers).  Success returns a
:class:`~graphmonads.category.Check` whose witness is a tuple of counts.
"""

from __future__ import annotations

import numpy as np

from .category import Check, Hom, compose, hom_array, hom_to_indices
from .graph import Graph, graph_product
from .matching import (
    PerfectMatching,
    equalizer_perf,
    is_perf_morphism,
    perf_morphism_array,
    product_perf,
)
from .steiner import PSTS, product_psts, psts_morphism_array


def _rowset(arr: np.ndarray) -> set:
    return set(map(tuple, arr.tolist()))


def _cone_bijection(cones_a, cones_b, mediators, proj_a, proj_b) -> Check:
    pa = proj_a[mediators]
    pb = proj_b[mediators]
    fa, fb = _rowset(cones_a), _rowset(cones_b)
    n_cones = len(fa) * len(fb)
    counts = (n_cones, len(mediators))
    images = set()
    for ra, rb in zip(map(tuple, pa.tolist()), map(tuple, pb.tolist())):
        if ra not in fa or rb not in fb:
            return Check(False, counts, "a mediator projects outside the cone set")
        images.add((ra, rb))
    if len(images) != len(mediators):
        return Check(False, counts, "two mediators induce the same cone")
    if len(mediators) != n_cones:
        return Check(False, counts, f"{n_cones} cones but {len(mediators)} mediating morphisms")
    return Check(True, counts)


def _projection_indices(prod_vertices, a_index, b_index):
    proj_a = np.array([a_index[p.left] for p in prod_vertices], dtype=np.int64)
    proj_b = np.array([b_index[p.right] for p in prod_vertices], dtype=np.int64)
    return proj_a, proj_b


def check_graph_product_universal(x: Graph, a: Graph, b: Graph, prod: Graph | None = None,
                                  backend=None) -> Check:
    """Homs ``x -> a × b`` correspond one-to-one with pairs of homs ``x -> a``, ``x -> b``."""
    prod = prod if prod is not None else graph_product(a, b)
    proj_a, proj_b = _projection_indices(prod.vertex_list, a.index, b.index)
    return _cone_bijection(hom_array(x, a, backend=backend), hom_array(x, b, backend=backend),
                           hom_array(x, prod, backend=backend), proj_a, proj_b)


def check_perf_product_universal(x: PerfectMatching, a: PerfectMatching, b: PerfectMatching,
                                 prod: PerfectMatching | None = None, backend=None,
                                 cone_cache: dict | None = None) -> Check:
    """Universal property of ``a × b`` in Perf against the test object ``x``.

    ``cone_cache`` may memoise Perf-morphism arrays keyed by ``(id(x), id(a))``
    across calls that reuse the same objects.
    """
    prod = prod if prod is not None else product_perf(a, b)
    pa_hom_ok = is_perf_morphism(_proj_hom(prod, a, "left"), prod, a)
    pb_hom_ok = is_perf_morphism(_proj_hom(prod, b, "right"), prod, b)
    if not (pa_hom_ok and pb_hom_ok):
        return Check(False, None, "a projection is not a Perf morphism")

    def cones(target):
        if cone_cache is None:
            return perf_morphism_array(x, target, backend=backend)
        key = (id(x), id(target))
        if key not in cone_cache:
            cone_cache[key] = perf_morphism_array(x, target, backend=backend)
        return cone_cache[key]

    proj_a, proj_b = _projection_indices(prod.graph.vertex_list, a.graph.index, b.graph.index)
    return _cone_bijection(cones(a), cones(b), perf_morphism_array(x, prod, backend=backend),
                           proj_a, proj_b)


def _proj_hom(prod: PerfectMatching, factor: PerfectMatching, side: str):
    return Hom(prod.graph, factor.graph, {p: getattr(p, side) for p in prod.graph.vertices})


def check_psts_product_universal(x: PSTS, p: PSTS, q: PSTS, prod: PSTS | None = None,
                                 backend=None) -> Check:
    """Universal property of ``p × q`` in PSTS against the test system ``x``."""
    prod = prod if prod is not None else product_psts(p, q)
    proj_a, proj_b = _projection_indices(prod.point_list, p.index, q.index)
    return _cone_bijection(psts_morphism_array(x, p, backend=backend),
                           psts_morphism_array(x, q, backend=backend),
                           psts_morphism_array(x, prod, backend=backend), proj_a, proj_b)


def check_perf_equalizer(f, g, a: PerfectMatching, b: PerfectMatching, tests, backend=None,
                         cache: dict | None = None) -> Check:
    """Validate ``equalizer_perf(f, g)`` and its universal property.

    For every test object ``x`` each Perf morphism ``h: x -> a`` with
    ``f∘h = g∘h`` must factor through the inclusion by exactly one Perf
    morphism ``x -> E``.  The witness counts equalizing maps checked.
    ``cache`` may memoise Perf-morphism arrays keyed by ``(x, target)``.
    """
    def morphisms(x, target):
        if cache is None:
            return perf_morphism_array(x, target, backend=backend)
        key = (x, target)
        if key not in cache:
            cache[key] = perf_morphism_array(x, target, backend=backend)
        return cache[key]

    eq, inc = equalizer_perf(f, g, a, b)
    res = is_perf_morphism(inc, eq, a)
    if not res:
        return Check(False, res.witness, "inclusion is not a Perf morphism")
    if compose(f, inc) != compose(g, inc):
        return Check(False, None, "inclusion does not equalize f and g")
    fi, gi = hom_to_indices(f), hom_to_indices(g)
    inc_idx = hom_to_indices(inc)
    checked = 0
    for x in tests:
        h = morphisms(x, a)
        equalizing = _rowset(h[np.all(fi[h] == gi[h], axis=1)])
        k = morphisms(x, eq)
        through = inc_idx[k]
        composites = _rowset(through)
        if len(composites) != len(k):
            return Check(False, x, "factorization through the equalizer is not unique")
        if composites != equalizing:
            return Check(False, x, f"{len(equalizing)} equalizing maps but {len(composites)} factor through E")
        checked += len(equalizing)
    return Check(True, (checked,))
