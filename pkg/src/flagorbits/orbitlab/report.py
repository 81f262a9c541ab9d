"""JSON report of an orbitlab run: orbit records, raisings and per-field statistics."""

import json

REPORT_SCHEMA_ID = "flagorbits.orbitlab/1"

_WORD = {"type": "string", "pattern": "^(e|[0-9]+)$"}
_MATRIX = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": REPORT_SCHEMA_ID,
    "type": "object",
    "required": ["schema", "group", "type", "p1", "p2", "q", "points", "classes", "double_cosets",
                 "orbits", "edges"],
    "properties": {
        "schema": {"const": REPORT_SCHEMA_ID},
        "group": {"enum": ["gl", "sp"]},
        "n": {"type": "integer"},
        "type": {"type": "string"},
        "p1": {"type": "integer"},
        "p2": {"type": "integer"},
        "q": {"type": "array", "items": {"type": "integer"}},
        "points": {"type": "object"},
        "classes": {"type": "object"},
        "double_cosets": {"type": "array", "items": _WORD},
        "orbits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "gorbit_word", "u_word", "v_word", "dim", "rank", "counts", "reps"],
                "properties": {
                    "name": {"type": "string"},
                    "gorbit_word": _WORD,
                    "u_word": _WORD,
                    "v_word": _WORD,
                    "dim": {"type": "integer", "minimum": 0},
                    "rank": {"type": "integer", "minimum": 0},
                    "counts": {"type": "object", "additionalProperties": {"type": "integer"}},
                    "classes": {"type": "object", "additionalProperties": {"type": "integer"}},
                    "reps": {"type": "object", "additionalProperties": {"type": "array", "items": _MATRIX}},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["src", "dst", "gamma", "type", "witness"],
                "properties": {
                    "src": {"type": "string"},
                    "dst": {"type": "string"},
                    "gamma": {"type": "integer", "minimum": 1},
                    "type": {"enum": ["U", "N", "T"]},
                    "witness": {"type": "array", "items": {"type": "string"}},
                    "stabiliser_orbit_sizes": {"type": "object"},
                    "stabiliser_type": {"type": "object"},
                },
            },
        },
    },
}


def _gamma(root):
    return next(i for i, c in enumerate(root.coords, 1) if c)


def report_dict(lab):
    spec = lab.spec
    orbits = []
    for O in lab.orbits:
        orbits.append({
            "name": O.name,
            "gorbit_word": O.gorbit.word_str(),
            "u_word": O.u.element.word_str(),
            "v_word": O.v.element.word_str(),
            "dim": O.dim,
            "rank": O.rank,
            "counts": {str(q): c for q, c in sorted(O.counts.items())},
            "classes": {str(q): c for q, c in sorted(O.classes.items())},
            "reps": {str(q): x.tolist() for q, x in sorted(O.reps.items())},
        })
    edges = []
    for e in lab.edges:
        edges.append({
            "src": e.source.name,
            "dst": e.target.name,
            "gamma": _gamma(e.gamma),
            "type": e.etype,
            "witness": [w.name for w in e.witness],
            "stabiliser_orbit_sizes": {str(q): list(s) for q, s in sorted(e.stabiliser_sizes.items())},
            "stabiliser_type": {str(q): t for q, t in sorted(e.route2.items())},
        })
    return {
        "schema": REPORT_SCHEMA_ID,
        "group": spec.kind,
        "n": spec.n,
        "type": lab.P1.system.name,
        "p1": lab.P1.node + 1,
        "p2": lab.P2.node + 1,
        "q": sorted(spec.q),
        "points": {str(q): n for q, n in sorted(lab.points.items())},
        "classes": {str(q): n for q, n in sorted(lab.classes.items())},
        "double_cosets": [w.word_str() for w in lab.double_cosets],
        "orbits": orbits,
        "edges": edges,
    }


def report_json(lab):
    return json.dumps(report_dict(lab), indent=1, sort_keys=True) + "\n"


def validate_report(doc):
    import jsonschema

    jsonschema.validate(doc, REPORT_SCHEMA)
