import pytest

from graphmonads.category import (
    Hom,
    check_search_space,
    compose,
    diagram_commutes,
    enumerate_homs,
    hom_from_json,
    hom_to_json,
    identity,
    is_homomorphism,
    pairing,
    projections,
)
from graphmonads.errors import (
    DomainMismatch,
    ImageOutsideTarget,
    MapNotTotal,
    NotAHomomorphism,
    SearchSpaceTooLarge,
)
from graphmonads.families import complete_graph, cycle_graph, graphs_up_to, path_graph
from graphmonads.graph import graph_product
from graphmonads.labels import Atom, Tagged
from graphmonads.matching import T_on_objects, eta_T

from conftest import brute_force_homs


def A(x):
    return Atom(x)


@pytest.mark.parametrize("src,dst,count", [
    (complete_graph(2), complete_graph(2), 2),
    (complete_graph(3), complete_graph(3), 6),
    (complete_graph(3), complete_graph(2), 0),
])
def test_hom_counts(src, dst, count, backend):
    homs = enumerate_homs(src, dst, backend=backend)
    assert len(homs) == count == len(brute_force_homs(src, dst))


def test_enumeration_matches_oracle_small(backend):
    graphs = [g for g in graphs_up_to(3)]
    for g in graphs:
        for h in graphs:
            got = [hm.as_tuple() for hm in enumerate_homs(g, h, backend=backend)]
            assert got == brute_force_homs(g, h)


def test_path_into_cycle():
    homs = enumerate_homs(path_graph(3), cycle_graph(5))
    assert len(homs) == len(brute_force_homs(path_graph(3), cycle_graph(5))) == 20


def test_search_space_cap():
    with pytest.raises(SearchSpaceTooLarge):
        check_search_space(10, 10, 10**7)
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_homs(complete_graph(8), complete_graph(8), cap=1000)


def test_hom_validation(k2, k3):
    with pytest.raises(NotAHomomorphism):
        Hom(k2, k3, {A("a"): A("a"), A("b"): A("a")})
    with pytest.raises(MapNotTotal):
        Hom(k2, k3, {A("a"): A("a")})
    with pytest.raises(ImageOutsideTarget):
        Hom(k2, k3, {A("a"): A("a"), A("b"): A("z")})


def test_is_homomorphism_witness(k2, k3):
    res = is_homomorphism(k3, k2, {A("a"): A("a"), A("b"): A("b"), A("c"): A("b")})
    assert not res and res.witness == (A("b"), A("c"))


def test_identity_and_compose(k3):
    homs = enumerate_homs(k3, k3)
    ident = identity(k3)
    for f in homs:
        assert compose(f, ident) == f == compose(ident, f)


def test_compose_associative(k3):
    homs = enumerate_homs(k3, k3)
    for f in homs[:3]:
        for g in homs:
            for h in homs[::2]:
                assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_compose_type_mismatch(k2, k3):
    f = enumerate_homs(k2, k3)[0]
    with pytest.raises(DomainMismatch):
        compose(f, f)


def test_diagram_commutes_unit_triangle(k2):
    eta = eta_T(k2)
    assert diagram_commutes([(eta, eta)])
    bad = Hom(k2, T_on_objects(k2), {A("a"): Tagged(A("b"), 0), A("b"): Tagged(A("a"), 0)})
    res = diagram_commutes([(eta, bad)])
    assert not res
    assert res.witness == A("a")


def test_diagram_chain_semantics(k3):
    rot = Hom(k3, k3, {A("a"): A("b"), A("b"): A("c"), A("c"): A("a")})
    assert diagram_commutes([((rot, rot, rot), identity(k3))])
    assert not diagram_commutes([((rot, rot), identity(k3))])
    with pytest.raises(DomainMismatch):
        diagram_commutes([(rot, identity(complete_graph(2)))])


def test_product_projections_and_pairing(k2, k3):
    prod = graph_product(k3, k2)
    pa, pb = projections(k3, k2, prod)
    assert is_homomorphism(prod, k3, pa.mapping)
    assert is_homomorphism(prod, k2, pb.mapping)
    for f in enumerate_homs(k2, k3):
        for g in enumerate_homs(k2, k2):
            h = pairing(f, g, prod)
            assert compose(pa, h) == f and compose(pb, h) == g


def test_product_hom_sets_multiply():
    x, a, b = path_graph(3), complete_graph(3), cycle_graph(4)
    prod = graph_product(a, b)
    n_prod = len(enumerate_homs(x, prod))
    assert n_prod == len(brute_force_homs(x, a)) * len(brute_force_homs(x, b))


def test_hom_json_round_trip(k3):
    for f in enumerate_homs(k3, k3):
        assert hom_from_json(hom_to_json(f), k3, k3) == f
