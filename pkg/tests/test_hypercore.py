import json
import random

import pytest

from hypermorse.hypercore import (
    DuplicateEdgeWarning,
    Hypergraph,
    SimplicialComplex,
    VertexSet,
    delta_closure,
    dimension,
    is_simplicial,
    is_subhypergraph,
    lower_complex,
    power_complex,
)

import generators
import oracles


V4 = VertexSet(["v0", "v1", "v2", "v3"])


def test_dimension():
    assert dimension((0,)) == 0
    assert dimension((0, 1, 2, 3)) == 3
    assert dimension((0, 2)) == 1


def test_power_complex_small():
    assert power_complex(V4, (0,)).edges == ((0,),)
    assert power_complex(V4, (0, 1)).edges == ((0,), (1,), (0, 1))


def test_power_complex_matches_bitmask_enumeration():
    edge = (0, 1, 2)
    got = set(power_complex(V4, edge).edges)
    expected = set()
    for mask in range(1, 8):
        expected.add(tuple(edge[i] for i in range(3) if mask >> i & 1))
    assert got == expected
    assert len(got) == 7


def test_power_complex_count():
    rng = random.Random(7)
    for _ in range(40):
        nv = rng.randint(1, 6)
        vs = VertexSet(["v%d" % i for i in range(nv)])
        edge = tuple(sorted(rng.sample(range(nv), rng.randint(1, nv))))
        assert len(power_complex(vs, edge)) == 2 ** len(edge) - 1


def test_delta_closure_tetrahedron(h_224):
    delta = delta_closure(h_224)
    assert len(delta) == 15
    assert isinstance(delta, SimplicialComplex)


def test_delta_closure_fixed_point():
    k = Hypergraph.from_labels(["a", "b"], [["a"], ["b"], ["a", "b"]])
    assert delta_closure(k).edges == k.edges
    assert lower_complex(k).edges == k.edges


def test_delta_closure_hollow_triangle(h_226):
    delta = delta_closure(h_226)
    assert delta.edges == ((0,), (1,), (2,), (0, 1), (0, 2), (1, 2))
    assert lower_complex(h_226).edges == ()


def test_lower_complex_224(h_224, hp_224):
    assert lower_complex(h_224).edges == ((0,),)
    assert lower_complex(hp_224).edges == ((0,),)


def test_is_simplicial(h_section6):
    assert is_simplicial(Hypergraph.from_labels(["a", "b"], [["a"], ["b"], ["a", "b"]]))
    assert not is_simplicial(Hypergraph.from_labels(["a", "b"], [["a", "b"]]))
    assert not is_simplicial(h_section6)


def test_is_subhypergraph(h_section6):
    low = lower_complex(h_section6)
    assert is_subhypergraph(low, h_section6)
    a = Hypergraph.from_labels(["v0", "v1"], [["v0", "v1"]])
    b = Hypergraph.from_labels(["v0", "v1"], [["v0", "v1"], ["v0"]])
    assert is_subhypergraph(a, b)
    c = Hypergraph.from_labels(["v0", "v1", "v2"], [["v0", "v2"]])
    d = Hypergraph.from_labels(["v0", "v1", "v2"], [["v0", "v1"]])
    assert not is_subhypergraph(c, d)


def test_is_subhypergraph_unknown_label():
    a = Hypergraph.from_labels(["x"], [["x"]])
    b = Hypergraph.from_labels(["y"], [["y"]])
    with pytest.raises(ValueError):
        is_subhypergraph(a, b)


def test_closures_idempotent_and_sandwich():
    rng = random.Random(11)
    for _ in range(120):
        h = generators.random_hypergraph(rng, max_vertices=6, max_edges=10)
        delta = delta_closure(h)
        low = lower_complex(h)
        assert set(low.edges) <= set(h.edges) <= set(delta.edges)
        assert delta_closure(delta).edges == delta.edges
        assert lower_complex(low).edges == low.edges
        simp = is_simplicial(h)
        assert (low.edges == h.edges) == simp
        assert (delta.edges == h.edges) == simp


def test_monotonicity_against_subset_oracle():
    rng = random.Random(13)
    for _ in range(120):
        big = generators.random_hypergraph(rng, max_vertices=5, max_edges=10)
        small = generators.random_subhypergraph(rng, big)
        assert set(delta_closure(small).edges) <= set(delta_closure(big).edges)
        assert set(lower_complex(small).edges) <= set(lower_complex(big).edges)
        assert set(delta_closure(big).edges) == oracles.delta_closure_oracle(big)
        assert set(lower_complex(big).edges) == oracles.lower_complex_oracle(big)


def test_duplicate_edges_merged_with_warning():
    with pytest.warns(DuplicateEdgeWarning):
        h = Hypergraph.from_labels(["a", "b"], [["a", "b"], ["b", "a"]])
    assert h.edges == ((0, 1),)


def test_empty_hypergraph_legal():
    h = Hypergraph.from_labels(["a", "b"], [])
    assert h.is_empty()
    assert delta_closure(h).edges == ()
    assert lower_complex(h).edges == ()
    assert is_simplicial(h)


def test_invalid_edges_rejected():
    with pytest.raises(ValueError):
        Hypergraph(V4, [()])
    with pytest.raises(ValueError):
        Hypergraph(V4, [(1, 0)])
    with pytest.raises(ValueError):
        Hypergraph(V4, [(0, 9)])
    with pytest.raises(ValueError):
        VertexSet(["a", "a"])


def test_serialization_deterministic(h_section6):
    a = h_section6.canonical_json()
    b = Hypergraph.from_labels(
        ["v0", "v1", "v2", "v3"],
        [["v0", "v1", "v2"], ["v1", "v3"], ["v0", "v3"], ["v0", "v1"], ["v3"], ["v2"], ["v1"], ["v0"]],
    ).canonical_json()
    assert a == b
    doc = json.loads(a)
    assert doc["hyperedges"][0] == ["v0"]


def test_vertex_order_is_declaration_order():
    h = Hypergraph.from_labels(["z", "a"], [["z", "a"]])
    assert h.edges == ((0, 1),)
    assert h.edge_labels((0, 1)) == ("z", "a")
    assert h.edge_key((0, 1)) == "z,a"
