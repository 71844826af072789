import random

import pytest

from hypermorse.chains import (
    HomologyBasis,
    boundary_matrix,
    coordinate_subcomplex,
    edge_module_matrix,
    embedded_homology,
    incidence,
    inf_complex,
    projection,
    simplicial_homology,
    subcomplex_homology,
    sup_complex,
)
from hypermorse.coeffs import Q, Z, prime_field
from hypermorse.errors import MalformedSubcomplexError
from hypermorse.exact import ExactMatrix, canonical_basis, matmul
from hypermorse.hypercore import Hypergraph, delta_closure, lower_complex

import generators

Z7 = prime_field(7)


def test_incidence_signs():
    assert incidence((0, 1), (1,)) == 1
    assert incidence((0, 1), (0,)) == -1
    assert incidence((0, 1, 2), (0, 2)) == -1
    assert incidence((0, 1, 2), (1, 2)) == 1
    assert incidence((0, 1, 2), (0, 1)) == 1
    assert incidence((0, 1), (2,)) == 0
    assert incidence((0, 1, 2), (3, 4)) == 0
    assert incidence((0, 1), (0, 1)) == 0


def test_boundary_of_edge_and_triangle():
    k = delta_closure(Hypergraph.from_labels(["a", "b", "c"], [["a", "b", "c"]]))
    d1 = boundary_matrix(k, 1, Z)
    # columns: (0,1), (0,2), (1,2); rows: (0,), (1,), (2,)
    assert d1.column(0) == (-1, 1, 0)
    d2 = boundary_matrix(k, 2, Z)
    assert d2.column(0) == (1, -1, 1)
    assert matmul(d1, d2, Z).is_zero()


def test_boundary_squared_zero_tetrahedron(h_224):
    delta = delta_closure(h_224)
    for n in range(1, 4):
        a = boundary_matrix(delta, n, Z)
        b = boundary_matrix(delta, n + 1, Z)
        assert matmul(a, b, Z).is_zero()


def test_boundary_squared_zero_random():
    rng = random.Random(21)
    for _ in range(60):
        delta = delta_closure(generators.random_hypergraph(rng, 6, 10))
        for n in range(1, delta.max_dimension() + 1):
            a = boundary_matrix(delta, n, Z)
            b = boundary_matrix(delta, n + 1, Z)
            assert matmul(a, b, Z).is_zero()


def test_inf_sup_section6(h_section6):
    delta = delta_closure(h_section6)
    inf = inf_complex(h_section6, Z, delta)
    sup = sup_complex(h_section6, Z, delta)
    # degree 1 basis of C_1(delta): (0,1),(0,2),(0,3),(1,2),(1,3)
    assert inf.basis[0] == ExactMatrix.identity(4)
    assert inf.basis[1].columns() == [
        (1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1),
    ]
    assert inf.basis[2].cols == 0
    assert sup.basis[2].columns() == [(1,)]
    expected_sup1 = canonical_basis(
        ExactMatrix.from_columns(
            [(1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 0, 1), (0, -1, 0, 1, 0)], 5
        ),
        Z,
    )
    assert sup.basis[1] == expected_sup1


def test_inf_sup_of_simplicial_complex_is_everything():
    k = delta_closure(Hypergraph.from_labels(["a", "b", "c"], [["a", "b", "c"]]))
    inf = inf_complex(k, Z)
    sup = sup_complex(k, Z)
    for n in range(k.max_dimension() + 1):
        size = len(k.edges_of_dim(n))
        assert canonical_basis(inf.basis[n], Z) == ExactMatrix.identity(size)
        assert canonical_basis(sup.basis[n], Z) == ExactMatrix.identity(size)


def test_inf_sup_lone_edge():
    h = Hypergraph.from_labels(["a", "b"], [["a", "b"]])
    inf = inf_complex(h, Z)
    sup = sup_complex(h, Z)
    assert inf.basis[1].cols == 0
    assert inf.basis[0].cols == 0
    # boundary image spans (b - a)
    assert sup.basis[0].columns() == [(-1, 1)] or sup.basis[0].columns() == [(1, -1)]
    assert sup.basis[1].cols == 1


def test_homology_hollow_triangle_and_tetrahedron(h_226, h_224):
    circle = delta_closure(h_226)
    res = simplicial_homology(circle, Z)
    assert res.betti == (1, 1)
    assert res.torsion == ((), ())
    solid = delta_closure(h_224)
    res = simplicial_homology(solid, Z)
    assert res.betti == (1, 0, 0, 0)


def test_embedded_homology_fixture_values(h_224, hp_224, h_225, hp_225, h_226, hp_226):
    assert embedded_homology(h_224, Z).betti == (1, 0, 0, 0)
    assert embedded_homology(hp_224, Z).betti == (1, 3, 0, 0)
    assert embedded_homology(h_225, Z).betti == (6, 0, 0)
    assert embedded_homology(hp_225, Z).betti == (6, 0, 0)
    assert embedded_homology(h_226, Z).betti == (0, 1)
    assert embedded_homology(hp_226, Z).betti == (0, 0, 0)


def test_embedded_homology_section6_all_coefficients(h_section6):
    for coeff in (Z, Q, Z7):
        assert embedded_homology(h_section6, coeff).betti == (2, 1, 0)


def test_inf_homology_section6(h_section6):
    res = subcomplex_homology(inf_complex(h_section6, Z))
    assert res.betti == (2, 1, 0)
    assert all(t == () for t in res.torsion)


def test_torsion_visible_in_quotient_complex():
    # span{b-a} in degree 0, span{2*edge} in degree 1: the restricted
    # boundary is multiplication by 2, so H_0 of the subcomplex is Z/2
    k = delta_closure(Hypergraph.from_labels(["a", "b"], [["a", "b"]]))
    diff = ExactMatrix.from_columns([(-1, 1)], 2)
    twice_edge = ExactMatrix.from_columns([(2,)], 1)
    from hypermorse.chains import SubChainComplex

    sub = SubChainComplex(k, Z, [diff, twice_edge])
    assert sub.restricted[1].data == ((2,),)
    res = subcomplex_homology(sub)
    assert res.groups[0] == (0, (2,))


def test_malformed_subcomplex_rejected():
    k = delta_closure(Hypergraph.from_labels(["a", "b"], [["a", "b"]]))
    from hypermorse.chains import SubChainComplex

    only_a = ExactMatrix.from_columns([(1, 0)], 2)
    edge = ExactMatrix.from_columns([(1,)], 1)
    with pytest.raises(MalformedSubcomplexError):
        SubChainComplex(k, Z, [only_a, edge])


def test_projection(h_section6):
    low = lower_complex(h_section6)
    delta = delta_closure(h_section6)
    chain = {(0, 1): 1, (0,): 2}
    assert projection(h_section6, h_section6, chain) == chain
    assert projection(delta, h_section6, {(0, 2): 1}) == {}
    assert projection(h_section6, low, {(0, 1): 1, (0,): 2}) == {(0, 1): 1, (0,): 2}
    assert projection(h_section6, low, {(0, 1, 2): 5, (0,): 2}) == {(0,): 2}
    with pytest.raises(ValueError):
        projection(low, low, {(0, 1, 2): 1})


def test_inclusion_chain_inf_inside_sup():
    rng = random.Random(33)
    for _ in range(40):
        h = generators.random_hypergraph(rng, 6, 10)
        delta = delta_closure(h)
        inf = inf_complex(h, Z, delta)
        sup = sup_complex(h, Z, delta)
        for n in range(delta.max_dimension() + 1):
            for j in range(inf.basis[n].cols):
                assert sup.contains(n, inf.basis[n].column(j))
            for j in range(sup.basis[n].cols):
                assert len(sup.basis[n].column(j)) == len(delta.edges_of_dim(n))


def test_embedded_equals_simplicial_on_complexes():
    rng = random.Random(34)
    for _ in range(30):
        k = generators.random_simplicial_complex(rng, 6, 8)
        a = embedded_homology(k, Z)
        b = simplicial_homology(k, Z)
        assert a == b


def test_euler_characteristic_matches_betti_over_field():
    rng = random.Random(35)
    for _ in range(30):
        h = generators.random_hypergraph(rng, 6, 10)
        inf = inf_complex(h, Q)
        res = subcomplex_homology(inf)
        chi_chain = sum((-1) ** n * inf.rank_at(n) for n in range(inf.top + 1))
        chi_homology = sum((-1) ** n * b for n, b in enumerate(res.betti))
        assert chi_chain == chi_homology


def test_homology_basis_reduction_roundtrip(h_section6):
    inf = inf_complex(h_section6, Q)
    hb = HomologyBasis(inf)
    assert [hb.betti(n) for n in range(3)] == [2, 1, 0]
    for n in range(3):
        for rep in hb.representatives(n):
            coords = hb.reduce(n, rep)
            assert len(coords) == hb.betti(n)
    # a boundary reduces to zero
    cycle = hb.representatives(0)[0]
    im = inf.restricted[1]
    if im.cols:
        boundary_vec = [im.data[i][0] for i in range(im.rows)]
        assert all(x == 0 for x in hb.reduce(0, boundary_vec))


def test_coordinate_subcomplex_lower(h_section6):
    # the same complex computed in two ambients agrees degree by degree
    # (the larger ambient reports extra trailing zero degrees)
    delta = delta_closure(h_section6)
    low = lower_complex(h_section6)
    res = subcomplex_homology(coordinate_subcomplex(delta, low, Z))
    direct = simplicial_homology(low, Z)
    for n in range(max(len(res.groups), len(direct.groups))):
        assert res.group(n) == direct.group(n)


def test_edge_module_matrix(h_section6):
    delta = delta_closure(h_section6)
    m = edge_module_matrix(h_section6, delta, 1)
    assert m.cols == 3
    assert m.rows == 5


RP2_TRIANGLES = [
    [0, 1, 4],
    [0, 1, 5],
    [0, 2, 3],
    [0, 2, 5],
    [0, 3, 4],
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 5],
    [2, 4, 5],
    [3, 4, 5],
]


def _rp2_hypergraph():
    labels = ["v%d" % i for i in range(6)]
    return Hypergraph.from_labels(labels, [[labels[i] for i in t] for t in RP2_TRIANGLES])


def test_projective_plane_torsion():
    k = delta_closure(_rp2_hypergraph())
    res = simplicial_homology(k, Z)
    assert res.betti == (1, 0, 0)
    assert res.torsion == ((), (2,), ())
    assert embedded_homology(k, Z) == res
    # mod 2 the torsion class becomes a Betti number in two degrees
    from hypermorse.coeffs import prime_field

    assert simplicial_homology(k, prime_field(2)).betti == (1, 1, 1)
    assert simplicial_homology(k, Q).betti == (1, 0, 0)


def test_embedded_cross_check_on_torsion_carrying_hypergraphs():
    # deleting cells from a torsion-carrying complex still keeps the
    # infimum- and supremum-derived homologies equal (checked internally)
    rng = random.Random(88)
    full = delta_closure(_rp2_hypergraph())
    for _ in range(15):
        kept = [e for e in full.edges if len(e) == 3 or rng.random() < 0.75]
        h = Hypergraph(full.vertex_set, kept)
        embedded_homology(h, Z)


def test_preimage_of_edge_module_section6(h_section6):
    # within the degree-2 hyperedge module, nothing has a boundary landing in
    # the degree-1 hyperedge module
    from hypermorse.exact import module_intersection, preimage_module

    delta = delta_closure(h_section6)
    bnd = boundary_matrix(delta, 2, Z)
    pre = preimage_module(bnd, edge_module_matrix(h_section6, delta, 1), Z)
    inside = module_intersection(edge_module_matrix(h_section6, delta, 2), pre, Z)
    assert inside.cols == 0
