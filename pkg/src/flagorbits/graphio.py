"""Graph documents for shadow and orbitlab results: versioned JSON and DOT emission."""

import json

GRAPH_SCHEMA_ID = "flagorbits.graph/1"

_WORD = {"type": "string", "pattern": "^(e|[0-9]+)$"}

GRAPH_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": GRAPH_SCHEMA_ID,
    "type": "object",
    "required": ["schema", "source", "type", "p1", "p2", "gorbits", "nodes", "edges"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": GRAPH_SCHEMA_ID},
        "source": {"enum": ["shadow", "orbitlab"]},
        "type": {"type": "string", "pattern": "^[A-G][0-9]+$"},
        "p1": {"type": "integer", "minimum": 1},
        "p2": {"type": "integer", "minimum": 1},
        "q": {"type": "array", "items": {"type": "integer", "minimum": 2}, "minItems": 1},
        "gorbits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["word", "rank"],
                "additionalProperties": False,
                "properties": {"word": _WORD, "rank": {"type": ["integer", "null"], "minimum": 0}},
            },
        },
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "gorbit_word", "u_word", "v_word", "rank"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "gorbit_word": _WORD,
                    "u_word": _WORD,
                    "v_word": _WORD,
                    "rank": {"type": "integer", "minimum": 0},
                    "dim": {"type": "integer", "minimum": 0},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["src", "dst", "gamma", "type"],
                "additionalProperties": False,
                "properties": {
                    "src": {"type": "string"},
                    "dst": {"type": "string"},
                    "gamma": {"type": "integer", "minimum": 1},
                    "type": {"enum": ["U", "N", "T"]},
                },
            },
        },
    },
}

EDGE_STYLE = {
    "U": 'style=solid',
    "T": 'style=bold, color="black:black"',
    "N": 'style=dashed',
}


def _w(x):
    return x.word_str() if hasattr(x, "word_str") else x.element.word_str()


def shadow_document(P1, P2, graphs):
    R = P1.system
    nodes, edges, gorbits = [], [], []
    for g in graphs:
        gw = g.gorbit.word_str()
        gorbits.append({"word": gw, "rank": g.orbit_rank})
        ids = {}
        for n in g.nodes:
            ids[n] = f"{gw}:{n.label()}"
            nodes.append({"id": ids[n], "gorbit_word": gw, "u_word": _w(n.u), "v_word": _w(n.v), "rank": n.rank})
        for e in g.edges:
            edges.append({"src": ids[e.source], "dst": ids[e.target], "gamma": e.gamma + 1,
                          "type": e.predicted_type})
    return {"schema": GRAPH_SCHEMA_ID, "source": "shadow", "type": R.name, "p1": P1.node + 1,
            "p2": P2.node + 1, "gorbits": gorbits, "nodes": nodes, "edges": edges}


def orbitlab_document(lab, gorbits=None):
    """Graph of an OrbitLabResult, optionally restricted to some double-coset representatives."""
    keep = set(lab.double_cosets if gorbits is None else gorbits)
    ranks = {}
    for O in lab.orbits:
        if O.gorbit in keep:
            ranks[O.gorbit] = max(ranks.get(O.gorbit, 0), O.rank)
    nodes = [{"id": O.name, "gorbit_word": O.gorbit.word_str(), "u_word": _w(O.u), "v_word": _w(O.v),
              "rank": O.rank, "dim": O.dim} for O in lab.orbits if O.gorbit in keep]
    edges = [{"src": e.source.name, "dst": e.target.name, "gamma": sum(i for i, c in enumerate(e.gamma.coords, 1) if c),
              "type": e.etype} for e in lab.edges if e.source.gorbit in keep]
    return {"schema": GRAPH_SCHEMA_ID, "source": "orbitlab", "type": lab.P1.system.name,
            "p1": lab.P1.node + 1, "p2": lab.P2.node + 1, "q": sorted(lab.spec.q),
            "gorbits": [{"word": w.word_str(), "rank": ranks[w]} for w in lab.double_cosets if w in keep],
            "nodes": nodes, "edges": edges}


def validate_graph(doc):
    import jsonschema

    jsonschema.validate(doc, GRAPH_SCHEMA)
    ids = {n["id"] for n in doc["nodes"]}
    if len(ids) != len(doc["nodes"]):
        raise ValueError("duplicate node ids")
    for e in doc["edges"]:
        if e["src"] not in ids or e["dst"] not in ids:
            raise ValueError(f"edge {e['src']} -> {e['dst']} uses an unknown node")


def to_json(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _q(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(doc):
    """One digraph per G-orbit; U solid, T doubled bold, N dashed."""
    out = []
    for g in doc["gorbits"]:
        gw = g["word"]
        nodes = [n for n in doc["nodes"] if n["gorbit_word"] == gw]
        ids = {n["id"] for n in nodes}
        out.append(f"digraph {_q('gorbit_' + gw)} {{")
        title = "%s P%d x P%d, G-orbit %s, rank %s" % (doc["type"], doc["p1"], doc["p2"], gw, g["rank"])
        out.append(f"  label={_q(title)};")
        out.append("  rankdir=BT;")
        out.append("  node [shape=box, fontsize=10];")
        for n in nodes:
            label = f"{n['u_word']}|{n['v_word']}\\nrank {n['rank']}"
            if "dim" in n:
                label += f", dim {n['dim']}"
            out.append(f"  {_q(n['id'])} [label=\"{label}\"];")
        for e in doc["edges"]:
            if e["src"] in ids:
                out.append(f"  {_q(e['src'])} -> {_q(e['dst'])} [label=\"{e['gamma']}\", {EDGE_STYLE[e['type']]}];")
        out.append("}")
    return "\n".join(out) + "\n"
