"""Discrete Morse functions on hypergraphs and their gradient vector fields.

A discrete Morse function assigns an exact rational to every hyperedge such
that each edge has at most one coface with a value not above its own and at
most one face with a value not below its own, counted inside the hypergraph.
Gradient fields pair faces with cofaces; properness, semi-properness and the
no-closed-path condition are checked combinatorially and cross-validated
against the induced degree-raising linear map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import chains, exact, hypercore
from .coeffs import CoeffSpec, Z
from .errors import (
    InternalConsistencyError,
    NotMorseError,
    SizeCapExceeded,
)
from .exact import ExactMatrix
from .hypercore import edge_sort_key


def _adjacency(h):
    """faces[e] and cofaces[e]: codimension-1 neighbours inside h."""
    faces = {e: [] for e in h.edges}
    cofaces = {e: [] for e in h.edges}
    for e in h.edges:
        for f in hypercore.codim1_faces(e):
            if h.contains_edge(f):
                faces[e].append(f)
                cofaces[f].append(e)
    for e in h.edges:
        faces[e].sort(key=edge_sort_key)
        cofaces[e].sort(key=edge_sort_key)
    return faces, cofaces


class MorseFunction:
    """A total assignment of exact rationals to the hyperedges of a host."""

    __slots__ = ("host", "values")

    def __init__(self, host, values):
        missing = [e for e in host.edges if e not in values]
        if missing:
            raise ValueError("no value for hyperedge(s) %s" % (missing,))
        extra = [e for e in values if not host.contains_edge(e)]
        if extra:
            raise ValueError("value for unknown hyperedge(s) %s" % (sorted(extra),))
        self.host = host
        self.values = {e: Fraction(values[e]) for e in host.edges}

    def __call__(self, edge):
        return self.values[edge]

    def __eq__(self, other):
        return (
            isinstance(other, MorseFunction)
            and self.host == other.host
            and self.values == other.values
        )

    def __repr__(self):
        return "MorseFunction(on %d edges)" % len(self.values)


@dataclass(frozen=True)
class MorseViolation:
    alpha: tuple
    kind: str  # "low_cofaces" or "high_faces"
    witnesses: tuple


def is_morse(f):
    """Check the discrete Morse conditions; returns (ok, violations).

    A violation records an edge with two or more cofaces at values not above
    it, or two or more faces at values not below it.
    """
    faces, cofaces = _adjacency(f.host)
    violations = []
    for alpha in f.host.edges:
        fa = f.values[alpha]
        low = tuple(b for b in cofaces[alpha] if f.values[b] <= fa)
        if len(low) > 1:
            violations.append(MorseViolation(alpha, "low_cofaces", low))
        high = tuple(g for g in faces[alpha] if f.values[g] >= fa)
        if len(high) > 1:
            violations.append(MorseViolation(alpha, "high_faces", high))
    return (not violations, tuple(violations))


def _require_morse(f):
    ok, violations = is_morse(f)
    if not ok:
        raise NotMorseError(violations)


@dataclass(frozen=True)
class CriticalReport:
    critical: tuple
    witnesses: dict  # non-critical edge -> {"low_cofaces": (...), "high_faces": (...)}


def critical_set(f):
    """Critical hyperedges: no coface at a value not above, no face at a value
    not below.  Witnesses explain every non-critical edge."""
    _require_morse(f)
    faces, cofaces = _adjacency(f.host)
    critical = []
    witnesses = {}
    for alpha in f.host.edges:
        fa = f.values[alpha]
        low = tuple(b for b in cofaces[alpha] if f.values[b] <= fa)
        high = tuple(g for g in faces[alpha] if f.values[g] >= fa)
        if low or high:
            witnesses[alpha] = {"low_cofaces": low, "high_faces": high}
        else:
            critical.append(alpha)
    return CriticalReport(tuple(critical), witnesses)


def restrict(f, sub):
    """Restriction of a Morse function to a sub-hypergraph (Morse again)."""
    if sub.vertex_set != f.host.vertex_set:
        raise ValueError("restriction requires the same vertex set")
    if not all(f.host.contains_edge(e) for e in sub.edges):
        raise ValueError("sub-hypergraph has edges outside the host")
    return MorseFunction(sub, {e: f.values[e] for e in sub.edges})


class GradientField:
    """A set of face/coface pairs (alpha, beta) with dim beta = dim alpha + 1."""

    __slots__ = ("host", "pairs")

    def __init__(self, host, pairs):
        canon = set()
        for a, b in pairs:
            a, b = tuple(a), tuple(b)
            if len(b) != len(a) + 1 or incidence_nonzero(b, a) == 0:
                raise ValueError("pair %r < %r is not a codimension-1 face pair" % (a, b))
            if not (host.contains_edge(a) and host.contains_edge(b)):
                raise ValueError("pair %r < %r uses edges outside the host" % (a, b))
            canon.add((a, b))
        self.host = host
        self.pairs = tuple(sorted(canon, key=lambda p: (edge_sort_key(p[0]), edge_sort_key(p[1]))))

    def __eq__(self, other):
        return (
            isinstance(other, GradientField)
            and self.host == other.host
            and self.pairs == other.pairs
        )

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return "GradientField(%d pairs)" % len(self.pairs)


def incidence_nonzero(beta, alpha):
    return chains.incidence(beta, alpha)


def gradient(f):
    """The gradient field of a Morse function: all pairs alpha < beta with
    the coface's value not above the face's value."""
    _require_morse(f)
    _, cofaces = _adjacency(f.host)
    pairs = []
    for alpha in f.host.edges:
        fa = f.values[alpha]
        for beta in cofaces[alpha]:
            if f.values[beta] <= fa:
                pairs.append((alpha, beta))
    return GradientField(f.host, pairs)


@dataclass(frozen=True)
class GradedLinearMap:
    """Per-degree matrices of the degree-raising map induced by a field."""

    host: object
    coeff: CoeffSpec
    matrices: tuple  # matrices[n]: degree-n edge basis -> degree-(n+1) edge basis

    def square_is_zero(self):
        for n in range(len(self.matrices) - 1):
            if not exact.matmul(self.matrices[n + 1], self.matrices[n], self.coeff).is_zero():
                return False
        return True


def linear_map(v, coeff=Z):
    """Matrix family of the induced map: a matched face goes to minus the
    incidence number times its coface, summed over all pairs containing it."""
    host = v.host
    top = host.max_dimension()
    by_pair = {}
    for a, b in v.pairs:
        by_pair.setdefault(a, []).append(b)
    mats = []
    for n in range(top + 1):
        dom = host.edges_of_dim(n)
        cod = host.edges_of_dim(n + 1)
        index = {e: i for i, e in enumerate(cod)}
        data = [[0] * len(dom) for _ in cod]
        for j, alpha in enumerate(dom):
            for beta in by_pair.get(alpha, ()):
                data[index[beta]][j] = coeff.normalize(
                    data[index[beta]][j] - chains.incidence(beta, alpha)
                )
        mats.append(ExactMatrix(len(cod), len(dom), data))
    return GradedLinearMap(host, coeff, tuple(mats))


def apply_linear_map(glm, chain):
    """Apply a graded linear map to a chain given as {edge: coefficient}."""
    host = glm.host
    out = {}
    for alpha, c in chain.items():
        if not c:
            continue
        n = hypercore.edge_dimension(alpha)
        if n >= len(glm.matrices):
            continue
        mat = glm.matrices[n]
        dom = host.edges_of_dim(n)
        cod = host.edges_of_dim(n + 1)
        j = dom.index(alpha)
        for i, beta in enumerate(cod):
            x = mat.data[i][j]
            if x:
                out[beta] = glm.coeff.normalize(out.get(beta, 0) + c * x)
    return {e: c for e, c in out.items() if c}


def is_proper(v):
    """Each hyperedge occurs in at most one pair."""
    seen = set()
    for a, b in v.pairs:
        if a in seen or b in seen:
            return False
        seen.add(a)
        seen.add(b)
    return True


def is_acyclic(v):
    """No non-trivial closed path: returns (ok, witness).

    A closed path chains steps alpha_i, beta_i, alpha_{i+1} where the upper
    edge beta_i is matched with both alpha_i and alpha_{i+1} != alpha_i; the
    minimal cycle walks one doubly-matched upper edge back and forth.  The
    witness is the lexicographically least such minimal cycle.
    """
    matched_faces = {}
    for a, b in v.pairs:
        matched_faces.setdefault(b, []).append(a)
    best = None
    for b, alphas in matched_faces.items():
        if len(alphas) < 2:
            continue
        alphas = sorted(alphas, key=edge_sort_key)
        a0, a1 = alphas[0], alphas[1]
        cand = (a0, b, a1, b, a0)
        key = tuple(edge_sort_key(e) for e in cand)
        if best is None or key < best[0]:
            best = (key, cand)
    if best is None:
        return (True, None)
    return (False, best[1])


def is_semi_proper(v):
    """No chained pairs gamma < alpha < beta with both pairs in the field;
    cross-validated against the square of the induced linear map being zero
    whenever the field is acyclic."""
    uppers = {b for _, b in v.pairs}
    lowers = {a for a, _ in v.pairs}
    combinatorial = not (uppers & lowers)
    if is_acyclic(v)[0]:
        algebraic = linear_map(v, Z).square_is_zero()
        if combinatorial != algebraic:
            raise InternalConsistencyError(
                "semi-properness check disagrees with the squared linear map"
            )
    return combinatorial


def satisfies_condition_C(h):
    """Every chain beta > alpha > gamma (beta, gamma hyperedges, alpha any
    middle cell) admits an alternative middle hyperedge; returns (ok, witness
    triple (gamma, alpha, beta)) with the lexicographically least violation."""
    best = None
    for beta in h.edges:
        if len(beta) < 3:
            continue
        for gamma in itertools.combinations(beta, len(beta) - 2):
            if not h.contains_edge(gamma):
                continue
            extra = [x for x in beta if x not in gamma]
            middles = [tuple(sorted(gamma + (x,))) for x in extra]
            middles.sort(key=edge_sort_key)
            for alpha in middles:
                others = [m for m in middles if m != alpha and h.contains_edge(m)]
                if not others:
                    key = (edge_sort_key(gamma), edge_sort_key(alpha), edge_sort_key(beta))
                    if best is None or key < best[0]:
                        best = (key, (gamma, alpha, beta))
    if best is None:
        return (True, None)
    return (False, best[1])


def extension_obstruction(f):
    """Edges carrying both a low coface and a high face inside the host; a
    non-empty set proves the function extends to no Morse function on the
    associated complex."""
    _require_morse(f)
    faces, cofaces = _adjacency(f.host)
    out = []
    for alpha in f.host.edges:
        fa = f.values[alpha]
        has_low = any(f.values[b] <= fa for b in cofaces[alpha])
        has_high = any(f.values[g] >= fa for g in faces[alpha])
        if has_low and has_high:
            out.append(alpha)
    return tuple(out)


def dim_function(h):
    """The dimension function: always Morse, every hyperedge critical."""
    return MorseFunction(h, {e: Fraction(len(e) - 1) for e in h.edges})


def _candidate_levels(values, per_gap):
    """Existing values plus per_gap fresh levels inside every gap and beyond
    both ends; complete for order-based conditions."""
    distinct = sorted(set(values))
    levels = list(distinct)
    if not distinct:
        return [Fraction(i) for i in range(per_gap)]
    lo, hi = distinct[0], distinct[-1]
    for i in range(1, per_gap + 1):
        levels.append(lo - i)
        levels.append(hi + i)
    for a, b in zip(distinct, distinct[1:]):
        step = Fraction(b - a, per_gap + 1)
        for i in range(1, per_gap + 1):
            levels.append(a + i * step)
    return sorted(set(levels))


def search_extension(f, grid_levels=None, max_unknowns=6):
    """Exhaustive search for a Morse extension to the associated complex.

    Unknown cells get values from a grid of candidate levels; because the
    Morse conditions only compare values, the grid realizes every weak order
    of the unknowns against the fixed values, so the search is complete.
    Returns the extension with host the associated complex, or None.
    """
    _require_morse(f)
    delta = hypercore.delta_closure(f.host)
    unknowns = sorted((e for e in delta.edges if not f.host.contains_edge(e)), key=edge_sort_key)
    if not unknowns:
        return MorseFunction(delta, dict(f.values))
    k = len(unknowns)
    if k > max_unknowns:
        raise SizeCapExceeded(
            "%d unknown cells exceed the configured cap of %d" % (k, max_unknowns)
        )
    per_gap = grid_levels if grid_levels is not None else k
    levels = _candidate_levels(f.values.values(), per_gap)

    faces_d, cofaces_d = _adjacency(delta)
    values = dict(f.values)

    def violates(cell):
        # Morse conditions on the sub-hypergraph of currently valued cells,
        # checked only where the new assignment can change counts.
        fc = values[cell]
        low = 0
        for b in cofaces_d[cell]:
            if b in values and values[b] <= fc:
                low += 1
                if low > 1:
                    return True
        high = 0
        for g in faces_d[cell]:
            if g in values and values[g] >= fc:
                high += 1
                if high > 1:
                    return True
        for g in faces_d[cell]:
            if g in values and fc <= values[g]:
                cnt = 0
                for b in cofaces_d[g]:
                    if b in values and values[b] <= values[g]:
                        cnt += 1
                        if cnt > 1:
                            return True
        for b in cofaces_d[cell]:
            if b in values and fc >= values[b]:
                cnt = 0
                for g in faces_d[b]:
                    if g in values and values[g] >= values[b]:
                        cnt += 1
                        if cnt > 1:
                            return True
        return False

    def dfs(i):
        if i == len(unknowns):
            return True
        cell = unknowns[i]
        for level in levels:
            values[cell] = level
            if not violates(cell) and dfs(i + 1):
                return True
            del values[cell]
        return False

    if not dfs(0):
        return None
    extension = MorseFunction(delta, values)
    ok, violations = is_morse(extension)
    if not ok:
        raise InternalConsistencyError("extension search produced a non-Morse function")
    return extension


def critical_via_gradient(f):
    """Critical edges read off the induced linear map of the gradient: edges
    with zero column that are not (up to sign) the image of any edge."""
    _require_morse(f)
    glm = linear_map(gradient(f), Z)
    host = f.host
    image_targets = set()
    zero_column = set()
    for n, mat in enumerate(glm.matrices):
        dom = host.edges_of_dim(n)
        cod = host.edges_of_dim(n + 1)
        for j, alpha in enumerate(dom):
            sig = _column_signature(mat, j)
            if sig is None:
                zero_column.add(alpha)
            else:
                image_targets.add(cod[sig[0]])
    return tuple(e for e in host.edges if e in zero_column and e not in image_targets)


def extend_gradient(v, to):
    """Re-host a proper acyclic field on a larger hypergraph (typically the
    associated complex); the pairs are unchanged and the result stays proper
    and acyclic."""
    if not is_proper(v):
        raise ValueError("extend_gradient requires a proper field")
    if not is_acyclic(v)[0]:
        raise ValueError("extend_gradient requires an acyclic field")
    if to.vertex_set != v.host.vertex_set:
        raise ValueError("target must share the vertex set")
    if not all(to.contains_edge(e) for e in v.host.edges):
        raise ValueError("target must contain the host")
    return GradientField(to, v.pairs)


def _column_signature(mat, j):
    """(edge_row_index, sign) when the column is plus/minus a unit vector,
    None when zero; anything else is impossible for Morse-derived fields."""
    nonzero = [(i, mat.data[i][j]) for i in range(mat.rows) if mat.data[i][j]]
    if not nonzero:
        return None
    if len(nonzero) == 1 and nonzero[0][1] in (1, -1):
        return nonzero[0]
    raise InternalConsistencyError("gradient column is not a signed unit vector")


def critical_discrepancy(f_bar, h):
    """Critical edges of the restriction that are not critical upstairs,
    classified by the behaviour of the ambient gradient map.

    Cases: (i) the edge is matched into the complement and nothing maps onto
    it; (ii) matched into the complement and some complement cell maps onto
    it; (iii) unmatched but some complement cell maps onto it.  The set is
    computed both from the definitions and from this classification; any
    disagreement raises.
    """
    delta = hypercore.delta_closure(h)
    if f_bar.host != delta:
        raise ValueError("the Morse function must live on exactly the associated complex")
    f = restrict(f_bar, h)
    m_bar = set(critical_set(f_bar).critical)
    m_low = set(critical_set(f).critical)
    definition_side = m_low - (m_bar & set(h.edges))

    glm = linear_map(gradient(f_bar), Z)
    in_h = set(h.edges)
    col_of = {}
    for n, mat in enumerate(glm.matrices):
        dom = delta.edges_of_dim(n)
        cod = delta.edges_of_dim(n + 1)
        for j, alpha in enumerate(dom):
            sig = _column_signature(mat, j)
            col_of[alpha] = None if sig is None else cod[sig[0]]
    preimages = {}
    for tau, target in col_of.items():
        if target is not None:
            preimages.setdefault(target, []).append(tau)

    classified = {}
    for sigma in h.edges:
        target = col_of[sigma]
        outside_preimages = [
            tau for tau in preimages.get(sigma, ()) if tau not in in_h
        ]
        any_preimage = bool(preimages.get(sigma))
        if target is not None and target not in in_h:
            if not any_preimage:
                classified[sigma] = "i"
            elif outside_preimages:
                classified[sigma] = "ii"
        elif target is None and outside_preimages:
            classified[sigma] = "iii"

    if set(classified) != definition_side:
        raise InternalConsistencyError(
            "discrepancy classification %r does not match the definition side %r"
            % (sorted(classified), sorted(definition_side))
        )
    return tuple(sorted(classified.items(), key=lambda kv: edge_sort_key(kv[0])))
