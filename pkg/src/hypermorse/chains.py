"""Boundary matrices, infimum/supremum sub-chain complexes, and homology.

Everything here works inside the chain complex of an associated simplicial
complex.  Sub-modules are represented by canonical basis matrices (columns in
the ambient degree basis), so module equality is matrix equality.  Homology
over Z uses Smith normal form (Betti numbers and torsion coefficients); over
Q and Z/p it uses ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exact, hypercore
from .coeffs import CoeffSpec, Z
from .errors import InternalConsistencyError, MalformedSubcomplexError
from .exact import ColumnSolver, ExactMatrix


def incidence(beta, alpha):
    """Coefficient of alpha in the boundary of beta: 0 unless alpha is a
    codimension-1 face, else (-1)^i with i the position of the omitted vertex."""
    if len(beta) != len(alpha) + 1:
        return 0
    omitted = -1
    j = 0
    for i, v in enumerate(beta):
        if j < len(alpha) and alpha[j] == v:
            j += 1
        elif omitted < 0:
            omitted = i
        else:
            return 0
    if j != len(alpha):
        return 0
    return -1 if omitted % 2 else 1


@dataclass(frozen=True)
class GradedBasis:
    """Per-degree ordered edge lists: the canonical basis of the chain groups."""

    by_degree: tuple

    @classmethod
    def of(cls, h, top_degree=None):
        if top_degree is None:
            top_degree = h.max_dimension()
        return cls(tuple(h.edges_of_dim(n) for n in range(top_degree + 1)))

    def degree(self, n):
        if 0 <= n < len(self.by_degree):
            return self.by_degree[n]
        return ()

    @property
    def top(self):
        return len(self.by_degree) - 1


def boundary_matrix(complex_, n, coeff):
    """Matrix of the degree-n boundary map of a simplicial complex, from the
    canonical n-simplex basis to the (n-1)-simplex basis."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    cols = complex_.edges_of_dim(n)
    rows = complex_.edges_of_dim(n - 1) if n >= 1 else ()
    index = {e: i for i, e in enumerate(rows)}
    data = [[0] * len(cols) for _ in rows]
    for j, e in enumerate(cols):
        for i, v in enumerate(e):
            face = e[:i] + e[i + 1 :]
            if face:
                data[index[face]][j] = coeff.normalize(-1 if i % 2 else 1)
    return ExactMatrix(len(rows), len(cols), data)


def _inclusion_matrix(ambient_edges, sub_edges):
    index = {e: i for i, e in enumerate(ambient_edges)}
    cols = []
    for e in sub_edges:
        col = [0] * len(ambient_edges)
        col[index[e]] = 1
        cols.append(col)
    return ExactMatrix.from_columns(cols, len(ambient_edges))


class SubChainComplex:
    """A sub-chain complex of C_*(ΔH), given by per-degree basis matrices.

    basis[n] has the chosen degree-n generators as columns in the ambient
    basis; restricted[n] expresses the boundary of each generator in the
    degree-(n-1) generators.  Construction fails with
    MalformedSubcomplexError when a boundary leaves the span below.
    """

    __slots__ = ("ambient", "coeff", "ambient_basis", "basis", "restricted", "_solvers")

    def __init__(self, ambient, coeff, basis):
        self.ambient = ambient
        self.coeff = coeff
        self.ambient_basis = GradedBasis.of(ambient)
        top = self.ambient_basis.top
        basis = list(basis)
        while len(basis) < top + 1:
            basis.append(ExactMatrix.zeros(len(self.ambient_basis.degree(len(basis))), 0))
        self.basis = tuple(basis)
        self._solvers = [None] * (top + 1)
        restricted = []
        for n in range(top + 1):
            if n == 0:
                restricted.append(ExactMatrix.zeros(0, self.basis[0].cols))
                continue
            bnd = boundary_matrix(ambient, n, coeff)
            image = exact.matmul(bnd, self.basis[n], coeff)
            solver = self._solver(n - 1)
            cols = []
            for j in range(image.cols):
                x = solver.solve(image.column(j))
                if x is None:
                    raise MalformedSubcomplexError(
                        "boundary of degree-%d generator %d leaves the span below" % (n, j)
                    )
                cols.append(x)
            restricted.append(
                ExactMatrix.from_columns(cols, self.basis[n - 1].cols)
                if cols
                else ExactMatrix.zeros(self.basis[n - 1].cols, 0)
            )
        self.restricted = tuple(restricted)

    @property
    def top(self):
        return self.ambient_basis.top

    def rank_at(self, n):
        if 0 <= n <= self.top:
            return self.basis[n].cols
        return 0

    def _solver(self, n):
        if self._solvers[n] is None:
            self._solvers[n] = ColumnSolver(self.basis[n], self.coeff)
        return self._solvers[n]

    def contains(self, n, ambient_vector):
        """Membership of an ambient degree-n vector in the degree-n module."""
        if not 0 <= n <= self.top:
            return not any(ambient_vector)
        return self._solver(n).solve(list(ambient_vector)) is not None

    def to_internal(self, n, ambient_vector):
        return self._solver(n).solve(list(ambient_vector))

    def to_ambient(self, n, internal_vector):
        return exact.matvec(self.basis[n], internal_vector, self.coeff)


def full_complex(k, coeff):
    """C_*(K) of a simplicial complex as a sub-chain complex of itself."""
    k = hypercore.as_simplicial(k)
    basis = [
        ExactMatrix.identity(len(k.edges_of_dim(n))) for n in range(k.max_dimension() + 1)
    ]
    return SubChainComplex(k, coeff, basis)


def coordinate_subcomplex(ambient, sub, coeff):
    """C_*(sub) inside C_*(ambient) for a subcomplex given by its simplices."""
    basis = []
    for n in range(ambient.max_dimension() + 1):
        basis.append(_inclusion_matrix(ambient.edges_of_dim(n), sub.edges_of_dim(n)))
    return SubChainComplex(ambient, coeff, basis)


def edge_module_matrix(h, delta, n):
    """Inclusion matrix of the degree-n hyperedge module of h into C_n(ΔH)."""
    return _inclusion_matrix(delta.edges_of_dim(n), h.edges_of_dim(n))


def inf_complex(h, coeff=Z, delta=None):
    """Largest sub-chain complex of C_*(ΔH) contained in the hyperedge modules:
    degree n is the intersection of the degree-n module with the boundary
    preimage of the degree-(n-1) module."""
    if delta is None:
        delta = hypercore.delta_closure(h)
    basis = []
    for n in range(delta.max_dimension() + 1):
        edges_n = edge_module_matrix(h, delta, n)
        if n == 0:
            basis.append(exact.canonical_basis(edges_n, coeff))
            continue
        bnd = boundary_matrix(delta, n, coeff)
        pre = exact.preimage_module(bnd, edge_module_matrix(h, delta, n - 1), coeff)
        basis.append(exact.module_intersection(edges_n, pre, coeff))
    return SubChainComplex(delta, coeff, basis)


def sup_complex(h, coeff=Z, delta=None):
    """Smallest sub-chain complex of C_*(ΔH) containing the hyperedge modules:
    degree n is the degree-n module plus the boundaries of the degree-(n+1)
    module."""
    if delta is None:
        delta = hypercore.delta_closure(h)
    top = delta.max_dimension()
    basis = []
    for n in range(top + 1):
        edges_n = edge_module_matrix(h, delta, n)
        if n == top:
            basis.append(exact.canonical_basis(edges_n, coeff))
            continue
        bnd = boundary_matrix(delta, n + 1, coeff)
        image = exact.matmul(bnd, edge_module_matrix(h, delta, n + 1), coeff)
        basis.append(exact.module_sum(edges_n, image, coeff))
    return SubChainComplex(delta, coeff, basis)


@dataclass(frozen=True)
class HomologyResult:
    """Per-degree Betti number and torsion coefficients (empty over a field)."""

    coeff: CoeffSpec
    groups: tuple  # tuple of (betti, torsion-tuple), degree 0 upward

    @property
    def betti(self):
        return tuple(b for b, _ in self.groups)

    @property
    def torsion(self):
        return tuple(t for _, t in self.groups)

    def group(self, n):
        if 0 <= n < len(self.groups):
            return self.groups[n]
        return (0, ())


def subcomplex_homology(scc):
    """Homology of a sub-chain complex from its restricted boundary matrices."""
    coeff = scc.coeff
    top = scc.top
    ranks = [0] * (top + 2)
    torsions = [()] * (top + 2)
    for n in range(1, top + 1):
        mat = scc.restricted[n]
        if n >= 2 and not exact.matmul(scc.restricted[n - 1], mat, coeff).is_zero():
            raise MalformedSubcomplexError("restricted boundaries do not compose to zero")
        if coeff.kind == "Z":
            diag = exact.snf_diagonal(mat)
            ranks[n] = len(diag)
            torsions[n] = tuple(d for d in diag if d > 1)
        else:
            ranks[n] = exact.rank(mat, coeff)
    groups = []
    for n in range(top + 1):
        betti = scc.rank_at(n) - ranks[n] - ranks[n + 1]
        groups.append((betti, torsions[n + 1]))
    return HomologyResult(coeff, tuple(groups))


def simplicial_homology(k, coeff=Z):
    """Homology of a simplicial complex via its full chain complex."""
    return subcomplex_homology(full_complex(k, coeff))


def embedded_homology(h, coeff=Z):
    """Embedded homology of a hypergraph: homology of the infimum complex,
    cross-checked against the supremum complex (they must agree)."""
    delta = hypercore.delta_closure(h)
    via_inf = subcomplex_homology(inf_complex(h, coeff, delta))
    via_sup = subcomplex_homology(sup_complex(h, coeff, delta))
    if via_inf != via_sup:
        raise InternalConsistencyError(
            "infimum- and supremum-derived homology disagree: %r vs %r"
            % (via_inf, via_sup)
        )
    return via_inf


def projection(ambient_h, sub_h, chain):
    """Canonical projection of a hyperedge chain: keep coefficients of edges
    of the sub-hypergraph, kill the rest."""
    for e in chain:
        if not ambient_h.contains_edge(e):
            raise ValueError("chain references an edge outside the ambient: %r" % (e,))
    return {e: c for e, c in chain.items() if sub_h.contains_edge(e) and c}


# ---------------------------------------------------------------------------
# homology with explicit bases (field coefficients; feeds induced maps)


class HomologyBasis:
    """Deterministic homology representatives of a sub-chain complex over a
    field, with reduction of cycles to class coordinates."""

    def __init__(self, scc):
        if not scc.coeff.is_field:
            raise ValueError("homology bases require field coefficients")
        self.scc = scc
        coeff = scc.coeff
        self._levels = []
        for n in range(scc.top + 1):
            ker = exact.kernel_basis(scc.restricted[n], coeff)
            if n < scc.top:
                im = exact.canonical_basis(scc.restricted[n + 1], coeff)
            else:
                im = ExactMatrix.zeros(scc.rank_at(n), 0)
            reps = []
            current = im
            current_rank = current.cols
            for j in range(ker.cols):
                cand = ker.column(j)
                trial = current.hstack(ExactMatrix.from_columns([cand], ker.rows))
                if exact.rank(trial, coeff) > current_rank:
                    reps.append(list(cand))
                    current = trial
                    current_rank += 1
            stacked = im.hstack(ExactMatrix.from_columns(reps, scc.rank_at(n)))
            solver = ColumnSolver(stacked, coeff) if stacked.cols else None
            self._levels.append(
                {
                    "im_cols": im.cols,
                    "reps": reps,
                    "solver": solver,
                    "dim": scc.rank_at(n),
                }
            )

    def betti(self, n):
        if 0 <= n < len(self._levels):
            return len(self._levels[n]["reps"])
        return 0

    def representatives(self, n):
        """Class representatives as internal coordinate vectors."""
        if 0 <= n < len(self._levels):
            return [list(r) for r in self._levels[n]["reps"]]
        return []

    def representatives_ambient(self, n):
        return [self.scc.to_ambient(n, r) for r in self.representatives(n)]

    def reduce(self, n, internal_cycle):
        """Class coordinates of an internal cycle in the chosen basis."""
        if not 0 <= n < len(self._levels):
            if any(internal_cycle):
                raise ValueError("non-zero cycle in an empty degree")
            return []
        level = self._levels[n]
        if level["solver"] is None:
            if any(internal_cycle):
                raise InternalConsistencyError("cycle outside the zero homology space")
            return []
        sol = level["solver"].solve(list(internal_cycle))
        if sol is None:
            raise InternalConsistencyError("vector is not a cycle of the subcomplex")
        return sol[level["im_cols"] :]


def induced_on_homology(src, dst, ambient_map=None, top=None):
    """Matrices of the map induced on homology by a chain map of ambients.

    src and dst are HomologyBasis objects; ambient_map gives per-degree
    matrices C_n(src ambient) -> C_n(dst ambient) (None means the identity,
    for inclusion-induced maps within one ambient complex).  Raises
    InternalConsistencyError when an image leaves the target subcomplex.
    """
    coeff = src.scc.coeff
    if top is None:
        top = max(src.scc.top, dst.scc.top)
    mats = []
    for n in range(top + 1):
        b_src = src.betti(n)
        b_dst = dst.betti(n)
        cols = []
        for rep in src.representatives_ambient(n):
            # representatives only exist up to the source top degree, where
            # the (padded) chain map always has a matrix
            image = rep if ambient_map is None else exact.matvec(ambient_map[n], rep, coeff)
            if n > dst.scc.top:
                if any(image):
                    raise InternalConsistencyError("image lands above the target complex")
                cols.append([])
                continue
            internal = dst.scc.to_internal(n, image)
            if internal is None:
                raise InternalConsistencyError(
                    "chain image leaves the target sub-chain complex in degree %d" % n
                )
            cols.append(dst.reduce(n, internal))
        mats.append(
            ExactMatrix.from_columns(cols, b_dst) if cols else ExactMatrix.zeros(b_dst, b_src)
        )
    return mats
