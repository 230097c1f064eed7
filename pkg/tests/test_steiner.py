import itertools
from math import comb

import pytest

from graphmonads.category import Hom, check_functor_laws, check_naturality, enumerate_homs
from graphmonads.errors import InvalidPSTS, MalformedNestedLabel, NotAnAlgebra, UncoveredEdge
from graphmonads.families import complete_graph, cycle_graph, fano, graphs_up_to, path_graph
from graphmonads.graph import make_graph
from graphmonads.labels import Atom, SetLabel, parse_label
from graphmonads.steiner import (
    S,
    SAlgebra,
    S_algebra_from_json,
    S_algebra_to_json,
    S_on_objects,
    algebra_to_psts,
    check_monad_laws_S,
    enumerate_psts_morphisms,
    enumerate_psts_on,
    enumerate_S_algebras,
    is_complete_sts,
    is_psts,
    is_psts_morphism,
    is_S_algebra,
    is_S_algebra_morphism,
    make_psts,
    mu_S,
    product_psts,
    product_psts_bruteforce,
    psts_from_json,
    psts_to_algebra,
    psts_to_json,
    support_graph,
    symmetric_difference,
)


def L(text):
    return parse_label(text)


def test_S_of_k2():
    s = S_on_objects(complete_graph(2))
    assert s.vertices == {L("{a}"), L("{b}"), L("{a,b}")}
    assert s.size == 3  # a triangle


def test_S_sizes():
    g = cycle_graph(5)
    s = S_on_objects(g)
    assert s.order == 5 + 5 and s.size == 3 * 5


def test_mu_examples(k2):
    mu = mu_S(k2)
    assert mu(L("{{a},{a,b}}")) == L("{b}")
    assert mu(L("{{a,b}}")) == L("{a,b}")
    assert mu(L("{{a},{b}}")) == L("{a,b}")
    assert mu(L("{{a}}")) == L("{a}")


def test_symmetric_difference_malformed():
    with pytest.raises(MalformedNestedLabel):
        symmetric_difference(L("a"))
    with pytest.raises(MalformedNestedLabel):
        symmetric_difference(L("{a,b}"))


def test_monad_laws_small_graphs():
    for g in graphs_up_to(4):
        assert check_monad_laws_S(g)


def test_functor_and_naturality():
    graphs = [complete_graph(2), path_graph(3), complete_graph(3)]
    for a, b, c in itertools.product(graphs, repeat=3):
        for f in enumerate_homs(a, b)[:4]:
            assert check_naturality(S, f)
            for g in enumerate_homs(b, c)[:3]:
                assert check_functor_laws(S, f, g)


def test_is_psts():
    a, b, c, d = (Atom(x) for x in "abcd")
    assert is_psts([a, b, c, d], [(a, b, c)])
    res = is_psts([a, b, c, d], [(a, b, c), (a, b, d)])
    assert not res and res.witness == (a, b)
    assert not is_psts([a, b], [(a, b, b)])
    with pytest.raises(InvalidPSTS):
        make_psts("abcd", ["abc", "abd"])


def test_fano_is_complete(fano_plane):
    assert is_complete_sts(fano_plane)
    assert len(fano_plane.triples) == 7
    g = support_graph(fano_plane)
    assert g.size == comb(7, 2) and g.vertices == fano_plane.points


def fano_automorphisms(p):
    pts = p.point_list
    return [perm for perm in itertools.permutations(pts)
            if is_psts_morphism(dict(zip(pts, perm)), p, p)]


def test_fano_automorphism_group(fano_plane):
    assert len(fano_automorphisms(fano_plane)) == 168


def test_k7_carries_30_steiner_systems():
    k7 = complete_graph(7)
    systems = enumerate_psts_on(k7)
    # labelings of the Fano plane: 7! / |Aut| with the group order found above
    assert len(systems) == 5040 // 168 == 30
    assert all(is_complete_sts(p) for p in systems)
    assert len(enumerate_S_algebras(k7)) == 30


def test_enumerate_psts_small():
    assert len(enumerate_psts_on(complete_graph(3))) == 1
    assert enumerate_psts_on(path_graph(3)) == []
    assert len(enumerate_psts_on(make_graph("abcde", []))) == 1
    assert enumerate_psts_on(complete_graph(4)) == []


def test_algebra_psts_round_trips():
    for g in graphs_up_to(5):
        for p in enumerate_psts_on(g):
            alg = psts_to_algebra(p)
            assert alg.graph == g
            assert algebra_to_psts(alg) == p


def test_uncovered_edge():
    p = make_psts("abcd", ["abc"])
    alg = psts_to_algebra(p)
    assert alg.graph.degree(Atom("d")) == 0
    with pytest.raises(UncoveredEdge):
        psts_to_algebra(p, make_graph("abcd", [("a", "b"), ("b", "c"), ("a", "c"), ("c", "d")]))


def test_non_algebra_rejected(k4):
    s4 = S_on_objects(k4)
    mapping = {SetLabel((v,)): v for v in k4.vertices}
    for u, v in k4.edges:
        mapping[SetLabel((u, v))] = min(k4.vertices - {u, v})
    alpha = Hom(s4, k4, mapping)
    assert not is_S_algebra(k4, alpha)
    with pytest.raises(NotAnAlgebra):
        SAlgebra(k4, alpha)


def test_psts_morphisms_vs_algebra_morphisms():
    systems = [make_psts("abc", ["abc"]), fano(), make_psts("abcde", ["abc", "cde"])]
    for p, q in itertools.product(systems, repeat=2):
        ap, aq = psts_to_algebra(p), psts_to_algebra(q)
        morphs = {tuple(h[x] for x in p.point_list) for h in enumerate_psts_morphisms(p, q)}
        for h in enumerate_homs(ap.graph, aq.graph):
            is_alg = bool(is_S_algebra_morphism(h, ap, aq))
            assert is_alg == bool(is_psts_morphism(h, p, q))
            assert is_alg == (h.as_tuple() in morphs)


def test_single_triple_squared():
    t = make_psts("abc", ["abc"])
    prod = product_psts(t, t)
    assert len(prod.points) == 9
    assert len(prod.triples) == 6
    assert prod.triples == product_psts_bruteforce(t, t)


def test_product_matches_brute_force():
    systems = [make_psts("abc", ["abc"]), make_psts("abcd", ["abc"]), make_psts("abcde", ["abc", "cde"]),
               make_psts("ab", [])]
    for p, q in itertools.product(systems, repeat=2):
        prod = product_psts(p, q)
        assert is_psts(prod.points, prod.triples)
        assert prod.triples == product_psts_bruteforce(p, q)


def test_fano_squared(fano_plane):
    prod = product_psts(fano_plane, fano_plane)
    assert len(prod.points) == 49
    assert is_psts(prod.points, prod.triples)
    assert len(prod.triples) == 294 == len(product_psts_bruteforce(fano_plane, fano_plane))
    assert not is_complete_sts(prod)


def test_json_round_trips(fano_plane):
    assert psts_from_json(psts_to_json(fano_plane)) == fano_plane
    alg = psts_to_algebra(fano_plane)
    assert S_algebra_from_json(S_algebra_to_json(alg)) == alg
    assert comb(7, 2) == 3 * len(fano_plane.triples)
