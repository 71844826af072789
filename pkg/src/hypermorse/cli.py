"""Command-line front end: JSON documents in, deterministic reports out.

Subcommands: complex, homology, morse, map, discrepancy.  Reports are JSON by
default (sorted keys, fixed layout, byte-deterministic) or a plain text
rendering with --format text.  Exit codes: 0 success, 2 parse error, 3
invalid document, 4 invalid morphism, 5 size cap exceeded.
"""

from __future__ import annotations

import argparse
import datetime
import hashlib
import json
import re
import sys
from fractions import Fraction

from . import __version__, chains, hypercore, morphisms, morse
from .coeffs import CoeffSpec, Z
from .errors import (
    InvalidDocumentError,
    MorphismError,
    NotMorseError,
    SizeCapExceeded,
)
from .hypercore import Hypergraph, edge_sort_key

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BAD_DOCUMENT = 3
EXIT_BAD_MORPHISM = 4
EXIT_SIZE_CAP = 5

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _parse_rational(value, where):
    if isinstance(value, bool):
        raise InvalidDocumentError("%s: boolean is not a rational" % where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.match(value.strip()):
        return Fraction(value.strip())
    raise InvalidDocumentError(
        "%s: rationals must be integers or 'p/q' strings, got %r" % (where, value)
    )


def _format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_hypergraph_document(doc, where="document"):
    """Validate a HypergraphDocument and return (hypergraph, morse values or None)."""
    if not isinstance(doc, dict):
        raise InvalidDocumentError("%s: expected a JSON object" % where)
    unknown = set(doc) - {"vertices", "hyperedges", "morse"}
    if unknown:
        raise InvalidDocumentError("%s: unknown fields %s" % (where, sorted(unknown)))
    vertices = doc.get("vertices")
    edges = doc.get("hyperedges")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InvalidDocumentError("%s: 'vertices' must be a list of strings" % where)
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise InvalidDocumentError("%s: 'hyperedges' must be a list of lists" % where)
    try:
        h = Hypergraph.from_labels(vertices, edges)
    except ValueError as exc:
        raise InvalidDocumentError("%s: %s" % (where, exc)) from exc
    values = None
    if "morse" in doc:
        block = doc["morse"]
        if not isinstance(block, dict):
            raise InvalidDocumentError("%s: 'morse' must be an object" % where)
        delta = hypercore.delta_closure(h)
        values = {}
        for key, raw in block.items():
            labels = key.split(",")
            try:
                edge = tuple(sorted(h.vertex_set.index(l) for l in labels))
            except ValueError as exc:
                raise InvalidDocumentError("%s: morse key %r: %s" % (where, key, exc)) from exc
            if h.edge_key(edge) != key:
                raise InvalidDocumentError(
                    "%s: morse key %r is not in canonical vertex order" % (where, key)
                )
            if not delta.contains_edge(edge):
                raise InvalidDocumentError(
                    "%s: morse key %r is outside the associated complex" % (where, key)
                )
            if edge in values:
                raise InvalidDocumentError("%s: duplicate morse key %r" % (where, key))
            values[edge] = _parse_rational(raw, "%s: morse[%r]" % (where, key))
        for e in h.edges:
            if e not in values:
                raise InvalidDocumentError(
                    "%s: morse block misses hyperedge %r" % (where, h.edge_key(e))
                )
    return h, values


def _load_json(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InvalidDocumentError("cannot read %s: %s" % (path, exc)) from exc
    try:
        return json.loads(raw.decode("utf-8")), raw
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise _ParseFailure("parse error in %s: %s" % (path, exc)) from exc


class _ParseFailure(Exception):
    pass


def _digest(raw):
    return "sha256:" + hashlib.sha256(raw).hexdigest()


def _edge_keys(h, edges):
    return [h.edge_key(e) for e in sorted(edges, key=edge_sort_key)]


def _chain_to_json(h, chain):
    items = sorted(chain.items(), key=lambda kv: edge_sort_key(kv[0]))
    return [[_format_rational(c), h.edge_key(e)] for e, c in items if c]


def _vector_chain(h, edges, vec):
    return {e: x for e, x in zip(edges, vec) if x}


def _matrix_to_json(mat):
    return [[_format_rational(x) for x in row] for row in mat.data]


def _notes_for(h):
    notes = []
    if h.is_empty():
        notes.append("empty hypergraph")
    return notes


def _report(command, raw, coeff, result, notes, timestamp):
    report = {
        "tool": "hypermorse",
        "version": __version__,
        "command": command,
        "input_digest": _digest(raw),
        "coefficients": coeff.label() if coeff is not None else None,
        "notes": notes,
        "result": result,
    }
    if timestamp:
        report["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return report


def _emit(report, fmt, out):
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        _emit_text(report, out)


def _emit_text(report, out):
    def walk(value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            for k in sorted(value):
                v = value[k]
                if isinstance(v, (dict, list)):
                    out.write("%s%s:\n" % (pad, k))
                    walk(v, indent + 1)
                else:
                    out.write("%s%s: %s\n" % (pad, k, v))
        elif isinstance(value, list):
            for v in value:
                if isinstance(v, (dict, list)):
                    walk(v, indent)
                else:
                    out.write("%s- %s\n" % (pad, v))
        else:
            out.write("%s%s\n" % (pad, value))

    out.write("hypermorse %s (%s)\n" % (report["version"], report["command"]))
    walk({k: v for k, v in report.items() if k not in ("tool", "version", "command")}, 0)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_complex(args, out):
    doc, raw = _load_json(args.file)
    h, _ = parse_hypergraph_document(doc)
    complex_ = (
        hypercore.delta_closure(h) if args.mode == "assoc" else hypercore.lower_complex(h)
    )
    counts = {}
    for n in range(complex_.max_dimension() + 1):
        counts[str(n)] = len(complex_.edges_of_dim(n))
    result = {
        "mode": args.mode,
        "complex": {
            "vertices": list(complex_.vertex_set.names),
            "hyperedges": _edge_keys(complex_, complex_.edges),
        },
        "simplex_counts": counts,
    }
    return _report("complex", raw, None, result, _notes_for(h), args.timestamp)


def _homology_to_json(res):
    return {
        "betti": list(res.betti),
        "torsion": [list(t) for t in res.torsion],
    }


def _cmd_homology(args, out):
    doc, raw = _load_json(args.file)
    h, _ = parse_hypergraph_document(doc)
    coeff = CoeffSpec.parse(args.coeff)
    which = args.which
    delta = hypercore.delta_closure(h)
    result = {"which": which}
    if which == "embedded":
        result.update(_homology_to_json(chains.embedded_homology(h, coeff)))
    elif which == "assoc":
        result.update(_homology_to_json(chains.simplicial_homology(delta, coeff)))
    elif which == "lower":
        result.update(_homology_to_json(chains.simplicial_homology(hypercore.lower_complex(h), coeff)))
    else:
        builder = chains.inf_complex if which == "inf" else chains.sup_complex
        scc = builder(h, coeff, delta)
        result.update(_homology_to_json(chains.subcomplex_homology(scc)))
        bases = {}
        for n in range(scc.top + 1):
            edges = scc.ambient_basis.degree(n)
            cols = [
                _chain_to_json(delta, _vector_chain(delta, edges, scc.basis[n].column(j)))
                for j in range(scc.basis[n].cols)
            ]
            bases[str(n)] = cols
        result["bases"] = bases
    return _report("homology", raw, coeff, result, _notes_for(h), args.timestamp)


def _morse_host(args, h, values):
    delta = hypercore.delta_closure(h)
    if args.on == "assoc":
        missing = [e for e in delta.edges if e not in values]
        if missing:
            raise InvalidDocumentError(
                "morse block must cover the associated complex; missing %s"
                % [delta.edge_key(e) for e in missing]
            )
        return morse.MorseFunction(delta, {e: values[e] for e in delta.edges})
    if args.on == "lower":
        lower = hypercore.lower_complex(h)
        return morse.MorseFunction(lower, {e: values[e] for e in lower.edges})
    return morse.MorseFunction(h, {e: values[e] for e in h.edges})


def _violations_to_json(h, violations):
    return [
        {
            "alpha": h.edge_key(v.alpha),
            "kind": v.kind,
            "witnesses": _edge_keys(h, v.witnesses),
        }
        for v in violations
    ]


def _cmd_morse(args, out):
    doc, raw = _load_json(args.file)
    h, values = parse_hypergraph_document(doc)
    if values is None:
        raise InvalidDocumentError("this command needs a 'morse' block")
    f = _morse_host(args, h, values)
    host = f.host
    result = {"on": args.on}
    if args.sub == "check":
        ok, violations = morse.is_morse(f)
        result["is_morse"] = ok
        result["violations"] = _violations_to_json(host, violations)
    elif args.sub == "critical":
        report = morse.critical_set(f)
        result["critical"] = _edge_keys(host, report.critical)
        result["witnesses"] = {
            host.edge_key(e): {
                "low_cofaces": _edge_keys(host, w["low_cofaces"]),
                "high_faces": _edge_keys(host, w["high_faces"]),
            }
            for e, w in sorted(report.witnesses.items(), key=lambda kv: edge_sort_key(kv[0]))
        }
    elif args.sub == "gradient":
        field = morse.gradient(f)
        glm = morse.linear_map(field, Z)
        ok, cycle = morse.is_acyclic(field)
        result["pairs"] = [
            [host.edge_key(a), host.edge_key(b)] for a, b in field.pairs
        ]
        result["proper"] = morse.is_proper(field)
        result["semi_proper"] = morse.is_semi_proper(field)
        result["acyclic"] = ok
        result["linear_map"] = {
            str(n): [[x for x in row] for row in glm.matrices[n].data]
            for n in range(len(glm.matrices))
        }
    else:  # extend
        obstruction = morse.extension_obstruction(f)
        result["obstruction"] = _edge_keys(host, obstruction)
        try:
            extension = morse.search_extension(f, grid_levels=args.grid)
        except SizeCapExceeded:
            result["verdict"] = "size-capped"
            result["extension"] = None
            report = _report("morse", raw, Z, result, _notes_for(h), args.timestamp)
            _emit(report, args.format, out)
            return EXIT_SIZE_CAP
        if extension is None:
            result["verdict"] = "none"
            result["extension"] = None
        else:
            result["verdict"] = "extended"
            result["extension"] = {
                extension.host.edge_key(e): _format_rational(x)
                for e, x in sorted(extension.values.items(), key=lambda kv: edge_sort_key(kv[0]))
            }
    return _report("morse", raw, Z, result, _notes_for(h), args.timestamp)


def _load_morphism(args):
    doc, raw = _load_json(args.file)
    if not isinstance(doc, dict):
        raise InvalidDocumentError("morphism document must be a JSON object")
    unknown = set(doc) - {"source", "target", "map"}
    if unknown:
        raise InvalidDocumentError("morphism document: unknown fields %s" % sorted(unknown))

    def side(which):
        value = doc.get(which)
        if isinstance(value, str):
            inner, _ = _load_json(value)
            return parse_hypergraph_document(inner, where=which)[0]
        return parse_hypergraph_document(value, where=which)[0]

    source = side("source")
    target = side("target")
    vmap = doc.get("map")
    if not isinstance(vmap, dict):
        raise InvalidDocumentError("morphism document: 'map' must be an object")
    try:
        phi = morphisms.HypergraphMorphism(source, target, vmap)
    except MorphismError as exc:
        raise InvalidDocumentError(str(exc)) from exc
    return phi, raw


def _cmd_map(args, out):
    phi, raw = _load_morphism(args)
    _require_valid(phi)
    coeff = CoeffSpec.parse(args.coeff)
    result = {"valid": True}
    kinds = ["lower", "embedded", "assoc"] if args.induced == "all" else [args.induced]
    induced = {}
    for kind in kinds:
        hm = morphisms.induced_homology_map(phi, kind, coeff)
        induced[kind] = {
            "degrees": {
                str(n): {
                    "matrix": _matrix_to_json(hm.matrices[n]),
                    "source_betti": hm.matrices[n].cols,
                    "target_betti": hm.matrices[n].rows,
                }
                for n in range(len(hm.matrices))
            },
            "source_basis": [
                [_chain_to_json(hypercore.delta_closure(phi.source), dict(rep)) for rep in level]
                for level in hm.source_basis
            ],
            "target_basis": [
                [_chain_to_json(hypercore.delta_closure(phi.target), dict(rep)) for rep in level]
                for level in hm.target_basis
            ],
        }
    result["induced"] = induced
    if args.check_diagram:
        commutes, failing = morphisms.check_commuting_diagram(phi, coeff)
        result["diagram_commutes"] = commutes
        result["failing_square"] = list(failing) if failing else None
    return _report("map", raw, coeff, result, [], args.timestamp)


def _require_valid(phi):
    ok, bad = morphisms.validate_morphism(phi)
    if not ok:
        raise MorphismError(
            "not a morphism: edge %r has no image" % (phi.source.edge_key(bad),), bad
        )


def _cmd_discrepancy(args, out):
    doc, raw = _load_json(args.file)
    h, values = parse_hypergraph_document(doc)
    if values is None:
        raise InvalidDocumentError("this command needs a 'morse' block")
    delta = hypercore.delta_closure(h)
    missing = [e for e in delta.edges if e not in values]
    if missing:
        raise InvalidDocumentError(
            "morse block must cover the associated complex; missing %s"
            % [delta.edge_key(e) for e in missing]
        )
    f_bar = morse.MorseFunction(delta, {e: values[e] for e in delta.edges})
    f = morse.restrict(f_bar, h)
    m_bar = morse.critical_set(f_bar).critical
    m_low = morse.critical_set(f).critical
    tagged = morse.critical_discrepancy(f_bar, h)
    inter = [e for e in m_bar if h.contains_edge(e)]
    result = {
        "critical_assoc": _edge_keys(delta, m_bar),
        "critical_hyper": _edge_keys(h, m_low),
        "intersection": _edge_keys(h, inter),
        "discrepancy": [
            {"edge": h.edge_key(e), "case": case} for e, case in tagged
        ],
    }
    return _report("discrepancy", raw, Z, result, _notes_for(h), args.timestamp)


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hypermorse",
        description="Hypergraph homology and discrete Morse analysis over exact arithmetic.",
    )
    parser.add_argument("--version", action="version", version="hypermorse " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument(
            "--timestamp", action="store_true", help="include a timestamp field (breaks byte determinism)"
        )

    p = sub.add_parser("complex", help="associated or lower-associated complex")
    p.add_argument("file")
    p.add_argument("--mode", choices=["assoc", "lower"], required=True)
    common(p)

    p = sub.add_parser("homology", help="Betti numbers and torsion")
    p.add_argument("file")
    p.add_argument("--coeff", default="z", help="z, q, or zp:<prime>")
    p.add_argument(
        "--which",
        choices=["embedded", "assoc", "lower", "inf", "sup"],
        default="embedded",
    )
    common(p)

    p = sub.add_parser("morse", help="discrete Morse analysis")
    p.add_argument("file")
    p.add_argument("sub", choices=["check", "critical", "gradient", "extend"])
    p.add_argument("--on", choices=["hyper", "assoc", "lower"], default="hyper")
    p.add_argument("--grid", type=int, default=None, help="levels per value gap for extend")
    common(p)

    p = sub.add_parser("map", help="induced homology maps of a morphism")
    p.add_argument("file")
    p.add_argument("--induced", choices=["lower", "assoc", "embedded", "all"], default="all")
    p.add_argument("--coeff", default="q", help="q or zp:<prime>")
    p.add_argument("--check-diagram", action="store_true")
    common(p)

    p = sub.add_parser("discrepancy", help="critical sets downstairs vs upstairs")
    p.add_argument("file")
    common(p)

    return parser


_DISPATCH = {
    "complex": _cmd_complex,
    "homology": _cmd_homology,
    "morse": _cmd_morse,
    "map": _cmd_map,
    "discrepancy": _cmd_discrepancy,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        outcome = _DISPATCH[args.command](args, out)
    except _ParseFailure as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except InvalidDocumentError as exc:
        print("invalid document: %s" % exc, file=sys.stderr)
        return EXIT_BAD_DOCUMENT
    except NotMorseError as exc:
        print("invalid document: %s" % exc, file=sys.stderr)
        return EXIT_BAD_DOCUMENT
    except MorphismError as exc:
        print("invalid morphism: %s" % exc, file=sys.stderr)
        return EXIT_BAD_MORPHISM
    except SizeCapExceeded as exc:
        print("size cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_SIZE_CAP
    except ValueError as exc:
        print("invalid document: %s" % exc, file=sys.stderr)
        return EXIT_BAD_DOCUMENT
    if isinstance(outcome, int):
        return outcome
    _emit(outcome, args.format, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
