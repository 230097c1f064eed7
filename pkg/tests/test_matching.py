import itertools

import pytest

from graphmonads.category import (
    Hom,
    Monad,
    check_functor_laws,
    check_monad_laws,
    check_naturality,
    compose,
    diagram_commutes,
    enumerate_homs,
    identity,
)
from graphmonads.errors import InvalidMatching, MalformedNestedLabel, NotAnAlgebra, NotEquivariant
from graphmonads.families import (
    complete_graph,
    cycle_graph,
    graphs_up_to,
    k2_swap,
    matched,
    path_graph,
    square_with_chord,
)
from graphmonads.graph import make_graph
from graphmonads.io import parse_edge_list
from graphmonads.labels import Atom, Tagged, parse_label
from graphmonads.matching import (
    T,
    PerfectMatching,
    TAlgebra,
    T_on_morphisms,
    T_on_objects,
    T_algebra_from_json,
    _fold,
    algebra_to_json,
    algebra_to_matching,
    check_monad_laws_T,
    enumerate_matchings,
    enumerate_perf_morphisms,
    enumerate_T_algebras,
    equalizer_perf,
    is_perf_morphism,
    is_perfect_matching,
    is_T_algebra,
    is_T_algebra_morphism,
    matching_from_json,
    matching_to_algebra,
    matching_to_json,
    mu_T,
    product_perf,
)


def L(text):
    return parse_label(text)


def brute_matchings(g):
    """Oracle: every fixed-point-free involution whose pairs are edges."""
    verts = g.vertex_list
    out = set()
    for perm in itertools.permutations(verts):
        m = dict(zip(verts, perm))
        if all(m[m[v]] == v and m[v] != v and g.has_edge(v, m[v]) for v in verts):
            out.add(frozenset(m.items()))
    return out


def test_T_of_k1():
    g = T_on_objects(make_graph("a", []))
    assert g == parse_edge_list("a~0 a~1")


def test_T_of_k2_is_p4():
    g = T_on_objects(complete_graph(2))
    assert g.order == 4 and g.size == 3
    assert g.has_edge(L("a~0"), L("b~0"))
    assert g.degree(L("a~1")) == 1 and g.degree(L("b~1")) == 1


def test_T_sizes():
    g = square_with_chord()
    assert T_on_objects(g).order == 8
    assert T_on_objects(g).size == 5 + 4


def test_mu_examples(k2):
    mu = mu_T(k2)
    assert mu(L("a~1~1")) == L("a~0")
    assert mu(L("a~0~1")) == L("a~1")
    assert mu(L("a~1~0")) == L("a~1")
    assert mu(L("b~0~0")) == L("b~0")
    assert mu.src == T_on_objects(T_on_objects(k2))


def test_mu_rejects_shallow_labels():
    with pytest.raises(MalformedNestedLabel):
        _fold(L("a~0"))


def test_monad_laws_small_graphs():
    for g in graphs_up_to(4):
        report = check_monad_laws_T(g)
        assert report, str(report)


def test_monad_law_detects_broken_mu(k2):
    def bad_mu(a):
        # forget the outer bit: satisfies the right unit law but not the left one
        t2 = T_on_objects(T_on_objects(a))
        return Hom(t2, T_on_objects(a), {v: v.base for v in t2.vertices}, check=False)

    broken = Monad("T'", T.on_objects, T.on_morphisms, T.unit, bad_mu)
    report = check_monad_laws(broken, k2)
    assert not report
    assert report.checks["right unit: mu.eta_T' = id"]
    assert not report.checks["left unit: mu.T'(eta) = id"]
    assert "VIOLATION" in str(report)


def test_functor_and_naturality():
    graphs = [complete_graph(2), path_graph(3), complete_graph(3), cycle_graph(4)]
    for a, b, c in itertools.product(graphs, repeat=3):
        fs = enumerate_homs(a, b)[:4]
        gs = enumerate_homs(b, c)[:4]
        for f in fs:
            assert check_naturality(T, f)
            for g in gs:
                assert check_functor_laws(T, f, g)


def test_T_on_morphisms_is_homomorphism(k3):
    for f in enumerate_homs(path_graph(3), k3):
        tf = T_on_morphisms(f)
        assert Hom(tf.src, tf.dst, tf.mapping)


def test_is_perfect_matching_witness(swc):
    a, b, c, d = (Atom(x) for x in "abcd")
    assert is_perfect_matching(swc, {a: b, b: a, c: d, d: c})
    res = is_perfect_matching(swc, {a: d, d: a, b: c, c: b})
    assert not res and res.witness == a
    res = is_perfect_matching(swc, {a: b, b: c, c: d, d: c})
    assert not res
    with pytest.raises(InvalidMatching):
        PerfectMatching(swc, {a: a, b: b, c: d, d: c})


def test_square_with_chord_matchings(swc):
    found = enumerate_matchings(swc)
    assert [pm.edges for pm in found] == [
        ((Atom("a"), Atom("b")), (Atom("c"), Atom("d"))),
        ((Atom("a"), Atom("c")), (Atom("b"), Atom("d"))),
    ]


def test_square_with_chord_algebra_table(swc):
    algs = enumerate_T_algebras(swc)
    tables = sorted(
        tuple(str(alg.alpha(Tagged(Atom(x), i))) for x in "abcd" for i in (0, 1)) for alg in algs
    )
    assert tables == [
        ("a", "b", "b", "a", "c", "d", "d", "c"),
        ("a", "c", "b", "d", "c", "a", "d", "b"),
    ]


def test_matching_counts_against_brute_force():
    for g in [complete_graph(4), cycle_graph(6), complete_graph(6), path_graph(4), cycle_graph(5)]:
        got = {frozenset(pm.m.items()) for pm in enumerate_matchings(g)}
        assert got == brute_matchings(g)
    assert len(enumerate_matchings(complete_graph(4))) == 3
    assert len(enumerate_matchings(complete_graph(6))) == 15


def test_algebra_round_trips():
    for g in graphs_up_to(4):
        for pm in enumerate_matchings(g):
            alg = matching_to_algebra(pm)
            assert is_T_algebra(g, alg.alpha)
            assert algebra_to_matching(alg) == pm


def test_non_algebra_rejected(swc):
    ta = T_on_objects(swc)
    a, b, c, d = (Atom(x) for x in "abcd")
    # alpha on leaves chooses b for both a and d: a homomorphism but not an algebra
    mapping = {Tagged(x, 0): x for x in (a, b, c, d)}
    mapping.update({Tagged(a, 1): b, Tagged(b, 1): a, Tagged(c, 1): b, Tagged(d, 1): b})
    alpha = Hom(ta, swc, mapping)
    assert not is_T_algebra(swc, alpha)
    with pytest.raises(NotAnAlgebra):
        TAlgebra(swc, alpha)


def test_perf_morphisms_are_algebra_morphisms():
    pms = [k2_swap(), matched(cycle_graph(4), [("a", "b"), ("c", "d")]),
           matched(complete_graph(4), [("a", "c"), ("b", "d")])]
    for p, q in itertools.product(pms, repeat=2):
        perf = {h.as_tuple() for h in enumerate_perf_morphisms(p, q)}
        alg_p, alg_q = matching_to_algebra(p), matching_to_algebra(q)
        for h in enumerate_homs(p.graph, q.graph):
            assert bool(is_perf_morphism(h, p, q)) == bool(is_T_algebra_morphism(h, alg_p, alg_q))
            assert bool(is_perf_morphism(h, p, q)) == (h.as_tuple() in perf)


def test_product_perf_k2():
    prod = product_perf(k2_swap(), k2_swap())
    assert prod.graph.order == 4 and len(prod.edges) == 2
    assert set(prod.edges) <= {tuple(sorted(e)) for e in prod.graph.edges}
    assert is_perfect_matching(prod.graph, prod.m)


def test_equalizer_of_swap_and_identity():
    pm = matched(cycle_graph(4), [("a", "b"), ("c", "d")])
    swap = Hom(pm.graph, pm.graph, {Atom("a"): Atom("b"), Atom("b"): Atom("a"),
                                    Atom("c"): Atom("d"), Atom("d"): Atom("c")})
    assert is_perf_morphism(swap, pm, pm)
    eq, inc = equalizer_perf(swap, identity(pm.graph), pm, pm)
    assert eq.graph.order == 0
    eq, inc = equalizer_perf(identity(pm.graph), identity(pm.graph), pm, pm)
    assert eq == pm
    assert diagram_commutes([(compose(swap, inc), compose(swap, inc))])


def test_equalizer_rejects_non_equivariant():
    pm = matched(cycle_graph(4), [("a", "b"), ("c", "d")])
    rot = Hom(pm.graph, pm.graph, {Atom("a"): Atom("b"), Atom("b"): Atom("c"),
                                   Atom("c"): Atom("d"), Atom("d"): Atom("a")})
    with pytest.raises(NotEquivariant):
        equalizer_perf(rot, identity(pm.graph), pm, pm)


def test_json_round_trips(swc):
    for pm in enumerate_matchings(swc):
        assert matching_from_json(matching_to_json(pm)) == pm
        alg = matching_to_algebra(pm)
        assert T_algebra_from_json(algebra_to_json(alg)) == alg


def test_matching_json_graph_file(tmp_path, swc):
    (tmp_path / "g.txt").write_text("a b\nb d\nd c\nc a\nb c\n")
    obj = {"graph": {"file": "g.txt"}, "matching": {"a": "b", "b": "a", "c": "d", "d": "c"}}
    pm = matching_from_json(obj, base_dir=tmp_path)
    assert pm.graph == swc
