"""Hypergraph morphisms and the maps they induce on homology.

A morphism is a vertex map sending every hyperedge, after collapsing repeated
images, to a hyperedge of the target.  It induces simplicial maps between the
associated and between the lower-associated complexes, chain maps with the
usual degenerate-image and orientation-sign conventions, and homomorphisms
between the three homology groups fitting in a commuting diagram with the
inclusion-induced maps.  Induced maps are computed over field coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import chains, exact, hypercore
from .chains import HomologyBasis
from .coeffs import CoeffSpec, Q
from .errors import InternalConsistencyError, MorphismError
from .exact import ExactMatrix


class HypergraphMorphism:
    """A vertex map between hypergraphs; edge images are validated lazily."""

    __slots__ = ("source", "target", "vertex_map")

    def __init__(self, source, target, vertex_map):
        for name in source.vertex_set.names:
            if name not in vertex_map:
                raise MorphismError("vertex map is not total: missing %r" % (name,))
        for name, image in vertex_map.items():
            if name not in source.vertex_set:
                raise MorphismError("unknown source vertex %r" % (name,))
            if image not in target.vertex_set:
                raise MorphismError("unknown target vertex %r" % (image,))
        self.source = source
        self.target = target
        self.vertex_map = dict(vertex_map)

    def index_map(self):
        src = self.source.vertex_set
        dst = self.target.vertex_set
        return [dst.index(self.vertex_map[name]) for name in src.names]

    def image_edge(self, edge):
        """Image of an edge with repeated vertices collapsed, as a sorted tuple."""
        imap = self.index_map()
        return tuple(sorted({imap[i] for i in edge}))


def validate_morphism(phi):
    """True iff every edge's collapsed image is a target edge; on failure the
    offending source edge is returned."""
    imap = phi.index_map()
    for edge in phi.source.edges:
        image = tuple(sorted({imap[i] for i in edge}))
        if not phi.target.contains_edge(image):
            return (False, edge)
    return (True, None)


def compose(psi, phi):
    """The composite morphism psi ∘ phi."""
    if phi.target.vertex_set != psi.source.vertex_set:
        raise MorphismError("composition mismatch")
    vm = {name: psi.vertex_map[phi.vertex_map[name]] for name in phi.source.vertex_set.names}
    return HypergraphMorphism(phi.source, psi.target, vm)


@dataclass(frozen=True)
class SimplicialMap:
    source: object  # SimplicialComplex
    target: object  # SimplicialComplex
    vertex_map: tuple  # index map, source vertex index -> target vertex index

    def image_simplex(self, simplex):
        return tuple(sorted({self.vertex_map[i] for i in simplex}))


def _as_simplicial_map(phi, source_complex, target_complex):
    imap = tuple(phi.index_map())
    sm = SimplicialMap(source_complex, target_complex, imap)
    for simplex in source_complex.edges:
        if not target_complex.contains_edge(sm.image_simplex(simplex)):
            raise InternalConsistencyError(
                "induced map is not simplicial at %r" % (simplex,)
            )
    return sm


def induced_assoc_map(phi):
    """The simplicial map between the associated complexes."""
    ok, bad = validate_morphism(phi)
    if not ok:
        raise MorphismError("not a morphism: edge %r has no image" % (bad,), bad)
    return _as_simplicial_map(
        phi, hypercore.delta_closure(phi.source), hypercore.delta_closure(phi.target)
    )


def induced_lower_map(phi):
    """The simplicial map between the lower-associated complexes."""
    ok, bad = validate_morphism(phi)
    if not ok:
        raise MorphismError("not a morphism: edge %r has no image" % (bad,), bad)
    return _as_simplicial_map(
        phi, hypercore.lower_complex(phi.source), hypercore.lower_complex(phi.target)
    )


def _permutation_sign(seq):
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def chain_map(sm, coeff):
    """Per-degree matrices of the chain map of a simplicial map: a simplex
    goes to zero when vertex images repeat, else to the image simplex with
    the sign of the sorting permutation.  The boundary-commutation identity
    is verified and a failure raises (it would be a bug)."""
    src, dst = sm.source, sm.target
    top = src.max_dimension()
    mats = []
    for n in range(top + 1):
        dom = src.edges_of_dim(n)
        cod = dst.edges_of_dim(n)
        index = {e: i for i, e in enumerate(cod)}
        data = [[0] * len(dom) for _ in cod]
        for j, simplex in enumerate(dom):
            images = [sm.vertex_map[i] for i in simplex]
            if len(set(images)) != len(images):
                continue
            data[index[tuple(sorted(images))]][j] = coeff.normalize(
                _permutation_sign(images)
            )
        mats.append(ExactMatrix(len(cod), len(dom), data))
    for n in range(1, top + 1):
        left = exact.matmul(chains.boundary_matrix(dst, n, coeff), mats[n], coeff)
        right = exact.matmul(mats[n - 1], chains.boundary_matrix(src, n, coeff), coeff)
        if left != right:
            raise InternalConsistencyError("chain map does not commute with the boundary")
    return mats


@dataclass(frozen=True)
class HomologyMap:
    """Induced map on homology with the bases it is written in."""

    which: str
    coeff: CoeffSpec
    matrices: tuple  # per degree
    source_basis: tuple  # per degree: representatives as {edge: coefficient}
    target_basis: tuple

    def betti_source(self):
        return tuple(m.cols for m in self.matrices)

    def betti_target(self):
        return tuple(m.rows for m in self.matrices)


def _chain_dicts(scc, hb, n):
    edges = scc.ambient_basis.degree(n)
    out = []
    for vec in hb.representatives_ambient(n):
        out.append({edges[i]: vec[i] for i in range(len(edges)) if vec[i]})
    return out


def _paired_objects(phi, which, coeff):
    if which == "assoc":
        src = chains.full_complex(hypercore.delta_closure(phi.source), coeff)
        dst = chains.full_complex(hypercore.delta_closure(phi.target), coeff)
    elif which == "lower":
        src_delta = hypercore.delta_closure(phi.source)
        dst_delta = hypercore.delta_closure(phi.target)
        src = chains.coordinate_subcomplex(src_delta, hypercore.lower_complex(phi.source), coeff)
        dst = chains.coordinate_subcomplex(dst_delta, hypercore.lower_complex(phi.target), coeff)
    elif which == "embedded":
        src = chains.inf_complex(phi.source, coeff)
        dst = chains.inf_complex(phi.target, coeff)
    else:
        raise ValueError("unknown induced-map kind %r" % (which,))
    return src, dst


def induced_homology_map(phi, which, coeff=Q):
    """Matrix of the induced homology map for 'lower', 'embedded' or 'assoc'.

    The embedded case restricts the associated-complex chain map to the
    infimum complexes; that the image stays inside the target infimum complex
    is verified at runtime."""
    if not coeff.is_field:
        raise ValueError("induced homology maps need field coefficients")
    ok, bad = validate_morphism(phi)
    if not ok:
        raise MorphismError("not a morphism: edge %r has no image" % (bad,), bad)
    sm = induced_assoc_map(phi)
    ambient_mats = chain_map(sm, coeff)
    src, dst = _paired_objects(phi, which, coeff)
    padded = _pad_chain_map(ambient_mats, src, dst)
    src_hb = HomologyBasis(src)
    dst_hb = HomologyBasis(dst)
    top = max(src.top, dst.top, -1)
    mats = chains.induced_on_homology(src_hb, dst_hb, padded, top=top)
    return HomologyMap(
        which,
        coeff,
        tuple(mats),
        tuple(tuple(_chain_dicts(src, src_hb, n)) for n in range(top + 1)),
        tuple(tuple(_chain_dicts(dst, dst_hb, n)) for n in range(top + 1)),
    )


def _pad_chain_map(ambient_mats, src, dst):
    """Extend chain-map matrices with zero blocks so every degree of the
    source ambient has a matrix into the target ambient."""
    out = []
    for n in range(src.top + 1):
        dom = len(src.ambient_basis.degree(n))
        cod = len(dst.ambient_basis.degree(n))
        if n < len(ambient_mats):
            m = ambient_mats[n]
            if m.rows == cod and m.cols == dom:
                out.append(m)
                continue
        out.append(ExactMatrix.zeros(cod, dom))
    return out


def check_commuting_diagram(phi, coeff=Q):
    """Verify both squares relating the induced maps and the inclusion-induced
    maps on homology; returns (True, None) or (False, (square, degree))."""
    if not coeff.is_field:
        raise ValueError("the diagram check needs field coefficients")
    ok, bad = validate_morphism(phi)
    if not ok:
        raise MorphismError("not a morphism: edge %r has no image" % (bad,), bad)
    sm = induced_assoc_map(phi)
    ambient_mats = chain_map(sm, coeff)

    def objects(h):
        delta = hypercore.delta_closure(h)
        lower = chains.coordinate_subcomplex(delta, hypercore.lower_complex(h), coeff)
        inf = chains.inf_complex(h, coeff, delta)
        full = chains.full_complex(delta, coeff)
        return lower, inf, full

    s_lower, s_inf, s_full = objects(phi.source)
    t_lower, t_inf, t_full = objects(phi.target)
    hb = {
        "s_lower": HomologyBasis(s_lower),
        "s_inf": HomologyBasis(s_inf),
        "s_full": HomologyBasis(s_full),
        "t_lower": HomologyBasis(t_lower),
        "t_inf": HomologyBasis(t_inf),
        "t_full": HomologyBasis(t_full),
    }
    top = max(s_full.top, t_full.top, -1)
    incl_src_lo = chains.induced_on_homology(hb["s_lower"], hb["s_inf"], None, top=top)
    incl_src_hi = chains.induced_on_homology(hb["s_inf"], hb["s_full"], None, top=top)
    incl_dst_lo = chains.induced_on_homology(hb["t_lower"], hb["t_inf"], None, top=top)
    incl_dst_hi = chains.induced_on_homology(hb["t_inf"], hb["t_full"], None, top=top)
    map_lower = chains.induced_on_homology(
        hb["s_lower"], hb["t_lower"], _pad_chain_map(ambient_mats, s_lower, t_lower), top=top
    )
    map_embedded = chains.induced_on_homology(
        hb["s_inf"], hb["t_inf"], _pad_chain_map(ambient_mats, s_inf, t_inf), top=top
    )
    map_assoc = chains.induced_on_homology(
        hb["s_full"], hb["t_full"], _pad_chain_map(ambient_mats, s_full, t_full), top=top
    )
    for n in range(top + 1):
        left = exact.matmul(incl_dst_lo[n], map_lower[n], coeff)
        right = exact.matmul(map_embedded[n], incl_src_lo[n], coeff)
        if left != right:
            return (False, ("lower-embedded", n))
        left = exact.matmul(incl_dst_hi[n], map_embedded[n], coeff)
        right = exact.matmul(map_assoc[n], incl_src_hi[n], coeff)
        if left != right:
            return (False, ("embedded-assoc", n))
    return (True, None)
