"""Hypergraphs, their associated and lower-associated simplicial complexes.

A hypergraph is a set of non-empty subsets (hyperedges) of a totally ordered
finite vertex set.  The vertex order is the declaration order of the labels.
Hyperedges are stored as strictly increasing tuples of vertex indices and the
edge list is kept sorted by (dimension, lexicographic order), so iteration and
serialization are deterministic.  All types are immutable after construction
and every operation here is a pure function.
"""

from __future__ import annotations

import itertools
import json
import warnings


class DuplicateEdgeWarning(UserWarning):
    """Emitted when duplicate hyperedges in the input are merged."""


def edge_dimension(edge):
    """Dimension of a hyperedge: one less than its number of vertices."""
    return len(edge) - 1


def edge_sort_key(edge):
    """Canonical (dimension, lexicographic) sort key used everywhere."""
    return (len(edge), edge)


def codim1_faces(edge):
    """The codimension-1 faces of an edge, each obtained by dropping one vertex."""
    if len(edge) == 1:
        return []
    return [edge[:i] + edge[i + 1 :] for i in range(len(edge))]


def nonempty_subsets(edge):
    """All non-empty subsets of an edge as sorted index tuples."""
    out = []
    for k in range(1, len(edge) + 1):
        out.extend(itertools.combinations(edge, k))
    return out


class VertexSet:
    """An ordered set of distinct vertex labels; list order is the total order."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise ValueError("vertex labels must be pairwise distinct")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError("unknown vertex label %r" % (name,)) from None

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, VertexSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "VertexSet(%r)" % (list(self.names),)


def _validate_edge(edge, nvertices):
    t = tuple(edge)
    if not t:
        raise ValueError("hyperedges must be non-empty")
    for v in t:
        if not isinstance(v, int) or v < 0 or v >= nvertices:
            raise ValueError("vertex index %r out of range" % (v,))
    if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
        raise ValueError("hyperedge %r is not strictly increasing" % (t,))
    return t


class Hypergraph:
    """A collection of hyperedges over a fixed ordered vertex set.

    Isolated vertices (present in the vertex set but in no hyperedge) are
    allowed and are not implicit 0-hyperedges.  Duplicate edges in the input
    are merged with a DuplicateEdgeWarning.  The empty hypergraph is legal.
    """

    __slots__ = ("vertex_set", "edges", "_edge_set", "_by_dim")

    def __init__(self, vertex_set, edges):
        if not isinstance(vertex_set, VertexSet):
            vertex_set = VertexSet(vertex_set)
        self.vertex_set = vertex_set
        seen = set()
        dups = []
        canonical = []
        for e in edges:
            t = _validate_edge(e, len(vertex_set))
            if t in seen:
                dups.append(t)
            else:
                seen.add(t)
                canonical.append(t)
        if dups:
            warnings.warn(
                "merged %d duplicate hyperedge(s): %s" % (len(dups), sorted(dups)),
                DuplicateEdgeWarning,
                stacklevel=2,
            )
        canonical.sort(key=edge_sort_key)
        self.edges = tuple(canonical)
        self._edge_set = frozenset(canonical)
        by_dim = {}
        for t in canonical:
            by_dim.setdefault(len(t) - 1, []).append(t)
        self._by_dim = {d: tuple(es) for d, es in by_dim.items()}

    @classmethod
    def from_labels(cls, vertex_labels, edge_label_lists):
        vs = VertexSet(vertex_labels)
        edges = [tuple(sorted(vs.index(l) for l in e)) for e in edge_label_lists]
        return cls(vs, edges)

    def contains_edge(self, edge):
        return tuple(edge) in self._edge_set

    def edges_of_dim(self, n):
        return self._by_dim.get(n, ())

    def max_dimension(self):
        """Largest edge dimension, or -1 for the empty hypergraph."""
        return max(self._by_dim) if self._by_dim else -1

    def is_empty(self):
        return not self.edges

    def edge_labels(self, edge):
        return tuple(self.vertex_set.names[i] for i in edge)

    def edge_key(self, edge):
        """Canonical string key: labels in vertex order joined by a comma."""
        return ",".join(self.edge_labels(edge))

    def to_document(self):
        return {
            "vertices": list(self.vertex_set.names),
            "hyperedges": [list(self.edge_labels(e)) for e in self.edges],
        }

    def canonical_json(self):
        return json.dumps(self.to_document(), sort_keys=True, indent=2) + "\n"

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and self.vertex_set == other.vertex_set
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_set, self.edges))

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __repr__(self):
        return "%s(%d vertices, %d edges)" % (
            type(self).__name__,
            len(self.vertex_set),
            len(self.edges),
        )


class SimplicialComplex(Hypergraph):
    """A downward-closed hypergraph.  Closure is validated at construction."""

    __slots__ = ()

    def __init__(self, vertex_set, edges, _closed=False):
        super().__init__(vertex_set, edges)
        if not _closed:
            for e in self.edges:
                for tau in nonempty_subsets(e):
                    if tau not in self._edge_set:
                        raise ValueError(
                            "not downward closed: %r misses face %r" % (e, tau)
                        )


def dimension(edge):
    """Dimension of a hyperedge: one less than its number of vertices."""
    return edge_dimension(edge)


def power_complex(vertex_set, edge):
    """The simplicial complex of all non-empty subsets of a single edge."""
    edge = _validate_edge(edge, len(vertex_set))
    return SimplicialComplex(vertex_set, nonempty_subsets(edge), _closed=True)


def delta_closure(h):
    """Smallest simplicial complex containing h: the union of the subset
    complexes of its hyperedges."""
    simplices = set()
    for e in h.edges:
        simplices.update(nonempty_subsets(e))
    return SimplicialComplex(h.vertex_set, sorted(simplices, key=edge_sort_key), _closed=True)


def lower_complex(h):
    """Largest simplicial complex contained in h: the edges all of whose
    non-empty subsets are edges of h."""
    keep = [e for e in h.edges if all(t in h._edge_set for t in nonempty_subsets(e))]
    return SimplicialComplex(h.vertex_set, keep, _closed=True)


def is_simplicial(h):
    """True iff every non-empty subset of every edge is itself an edge."""
    return all(
        t in h._edge_set for e in h.edges for t in nonempty_subsets(e)
    )


def as_simplicial(h):
    """View a downward-closed hypergraph as a SimplicialComplex."""
    if isinstance(h, SimplicialComplex):
        return h
    return SimplicialComplex(h.vertex_set, h.edges)


def is_subhypergraph(inner, outer):
    """True iff every edge of inner, matched by vertex labels, is an edge of
    outer.  Raises ValueError if an inner label does not exist in outer."""
    if inner.vertex_set == outer.vertex_set:
        return inner._edge_set <= outer._edge_set
    mapping = [outer.vertex_set.index(name) for name in inner.vertex_set.names]
    for e in inner.edges:
        image = tuple(sorted(mapping[i] for i in e))
        if image not in outer._edge_set:
            return False
    return True
