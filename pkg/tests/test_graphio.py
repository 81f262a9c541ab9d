import json

import pytest

from dotparse import parse
from flagorbits.graphio import (
    EDGE_STYLE, GRAPH_SCHEMA_ID, orbitlab_document, shadow_document, to_dot, to_json, validate_graph,
)
from flagorbits.orbitlab import GroupSpec, run_orbitlab
from flagorbits.parabolics import ParabolicDatum
from flagorbits.roots import build_root_system
from flagorbits.shadow import all_shadow_graphs


@pytest.fixture(scope="module")
def shadow_doc():
    R = build_root_system("A3")
    P1, P2 = ParabolicDatum.of(R, 2), ParabolicDatum.of(R, 2)
    return shadow_document(P1, P2, all_shadow_graphs(P1, P2))


@pytest.fixture(scope="module")
def lab_doc():
    return orbitlab_document(run_orbitlab(GroupSpec("sp", 2, (3,)), 2, 2))


def test_shadow_document(shadow_doc):
    validate_graph(shadow_doc)
    assert shadow_doc["schema"] == GRAPH_SCHEMA_ID
    assert [g["word"] for g in shadow_doc["gorbits"]] == ["e", "2", "2132"]
    doc = json.loads(to_json(shadow_doc))
    assert doc == shadow_doc
    assert to_json(shadow_doc) == to_json(json.loads(to_json(shadow_doc)))


def test_orbitlab_document(lab_doc):
    validate_graph(lab_doc)
    assert lab_doc["source"] == "orbitlab" and lab_doc["q"] == [3]
    assert all("dim" in n for n in lab_doc["nodes"])


def test_dot_structure(shadow_doc, lab_doc):
    for doc in (shadow_doc, lab_doc):
        graphs = parse(to_dot(doc))
        assert [g["name"] for g in graphs] == ["gorbit_" + g["word"] for g in doc["gorbits"]]
        total_nodes = sum(len(g["nodes"]) for g in graphs)
        assert total_nodes == len(doc["nodes"])
        for g in graphs:
            for src, dst, a in g["edges"]:
                assert src in g["nodes"] and dst in g["nodes"]
                assert a["style"] in ("solid", "bold", "dashed")
        assert sum(len(g["edges"]) for g in graphs) == len(doc["edges"])


def test_edge_styles():
    assert "dashed" in EDGE_STYLE["N"] and "solid" in EDGE_STYLE["U"] and "black:black" in EDGE_STYLE["T"]
    lab = run_orbitlab(GroupSpec("sp", 3, (3,)), 3, 3)
    doc = orbitlab_document(lab)
    styles = [a["style"] for g in parse(to_dot(doc)) for _, _, a in g["edges"]]
    assert styles.count("dashed") == 10


def test_validation_rejects_bad_documents(shadow_doc):
    import jsonschema

    bad = json.loads(json.dumps(shadow_doc))
    bad["edges"][0]["type"] = "X"
    with pytest.raises(jsonschema.ValidationError):
        validate_graph(bad)
    bad = json.loads(json.dumps(shadow_doc))
    bad["edges"][0]["dst"] = "nowhere"
    with pytest.raises(ValueError, match="unknown node"):
        validate_graph(bad)
    bad = json.loads(json.dumps(shadow_doc))
    bad["nodes"].append(bad["nodes"][0])
    with pytest.raises(ValueError, match="duplicate"):
        validate_graph(bad)
