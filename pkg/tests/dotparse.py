"""A minimal DOT reader: enough to check the structure of emitted graphs."""

import re

_TOKEN = re.compile(r'"(?:[^"\\]|\\.)*"|->|[{}\[\];=,]|[A-Za-z_][A-Za-z0-9_]*|-?[0-9.]+|\s+')


def tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad DOT at offset {pos}: {text[pos:pos + 20]!r}")
        if not m.group(0).isspace():
            out.append(m.group(0))
        pos = m.end()
    return out


def _unq(t):
    return t[1:-1].replace('\\"', '"').replace("\\\\", "\\") if t.startswith('"') else t


def _attrs(toks, i):
    out = {}
    if toks[i] != "[":
        raise ValueError(f"expected '[' got {toks[i]!r}")
    i += 1
    while toks[i] != "]":
        if toks[i + 1] != "=":
            raise ValueError(f"expected '=' after {toks[i]!r}")
        out[_unq(toks[i])] = _unq(toks[i + 2])
        i += 3
        if toks[i] == ",":
            i += 1
    return out, i + 1


def parse(text):
    """List of graphs {name, attrs, nodes: {id: attrs}, edges: [(src, dst, attrs)]}."""
    toks = tokens(text)
    graphs = []
    i = 0
    while i < len(toks):
        if toks[i] != "digraph" or toks[i + 2] != "{":
            raise ValueError(f"expected 'digraph NAME {{' at token {i}")
        g = {"name": _unq(toks[i + 1]), "attrs": {}, "nodes": {}, "edges": []}
        i += 3
        while toks[i] != "}":
            if toks[i + 1] == "=":
                g["attrs"][toks[i]] = _unq(toks[i + 2])
                i += 3
            elif toks[i] in ("node", "edge"):
                _, i = _attrs(toks, i + 1)
            elif toks[i + 1] == "->":
                a, j = _attrs(toks, i + 3)
                g["edges"].append((_unq(toks[i]), _unq(toks[i + 2]), a))
                i = j
            else:
                a, j = _attrs(toks, i + 1)
                g["nodes"][_unq(toks[i])] = a
                i = j
            if toks[i] != ";":
                raise ValueError(f"statement not terminated by ';' at token {i}")
            i += 1
        graphs.append(g)
        i += 1
    return graphs
