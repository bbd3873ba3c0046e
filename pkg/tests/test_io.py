import pytest

from gkmgraph import (
    axial_group_basis,
    document_from_gkm,
    emit_dot,
    emit_gkm,
    gen_grassmannian,
    gen_projective,
    gen_s6,
    gkm_from_document,
    load_gkm,
    parse_gkm,
)
from gkmgraph.io import ParseError, SchemaError

MINIMAL = """
{
  "torus_rank": 2,
  "vertices": ["p", "q", "r"],
  "edges": [
    {"id": "pq", "endpoints": ["p", "q"], "weight": [1, 0]},
    {"id": "qr", "endpoints": ["q", "r"], "weight": [-1, 1]},
    {"id": "rp", "endpoints": ["r", "p"], "weight": [0, -1]}
  ]
}
"""


def test_parse_and_emit_round_trip():
    for gkm in (gen_s6(), gen_projective(2), gen_grassmannian(2)):
        doc = document_from_gkm(gkm)
        assert parse_gkm(emit_gkm(doc)) == doc


def test_document_reconstructs_the_same_gkm():
    for gkm in (gen_s6(), gen_projective(3), gen_grassmannian(2)):
        rebuilt = gkm_from_document(document_from_gkm(gkm))
        assert rebuilt.graph == gkm.graph
        assert rebuilt.axial == gkm.axial
        assert rebuilt.connection == gkm.connection


def test_minimal_document_infers_connection():
    gkm = load_gkm(MINIMAL)
    assert gkm.m == 2
    assert axial_group_basis(gkm).rank == 2


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_gkm("{ not json }")
    assert "line 1" in str(err.value)


def test_weight_arity_mismatch_is_a_schema_error():
    bad = MINIMAL.replace('"weight": [1, 0]', '"weight": [1, 0, 0]')
    with pytest.raises(SchemaError) as err:
        parse_gkm(bad)
    assert "weight" in str(err.value)


def test_missing_field_is_a_schema_error():
    with pytest.raises(SchemaError):
        parse_gkm('{"torus_rank": 2, "vertices": ["p"]}')
    with pytest.raises(SchemaError):
        parse_gkm('{"torus_rank": 2, "vertices": ["p"], "edges": [{"id": "e"}]}')


def test_unknown_vertex_is_a_schema_error():
    bad = MINIMAL.replace('["p", "q", "r"]', '["p", "q"]')
    with pytest.raises(SchemaError):
        parse_gkm(bad)


def test_partial_connection_completed_by_inversion():
    doc = document_from_gkm(gen_s6())
    forward_only = doc.__class__(
        torus_rank=doc.torus_rank,
        vertices=doc.vertices,
        edges=doc.edges,
        connection=tuple(c for c in doc.connection if not c.dart.endswith("~")),
        orderings=doc.orderings,
    )
    rebuilt = gkm_from_document(forward_only)
    assert rebuilt.connection == gen_s6().connection


def test_connection_missing_both_directions_is_a_schema_error():
    doc = document_from_gkm(gen_s6())
    broken = doc.__class__(
        torus_rank=doc.torus_rank,
        vertices=doc.vertices,
        edges=doc.edges,
        connection=doc.connection[:2],
        orderings=doc.orderings,
    )
    with pytest.raises(SchemaError):
        gkm_from_document(broken)


def test_dot_output_shape():
    dot = emit_dot(gen_grassmannian(2))
    lines = dot.splitlines()
    assert lines[0] == "graph gkm {"
    assert lines[-1] == "}"
    assert sum(1 for ln in lines if ln.endswith('";') and " -- " not in ln) == 6
    assert sum(1 for ln in lines if " -- " in ln) == 12


def test_dot_annotations():
    plain = emit_dot(gen_s6())
    weights = emit_dot(gen_s6(), annotate="weights")
    congruence = emit_dot(gen_s6(), annotate="congruence")
    assert "label" not in plain
    assert 'label="e1: (1, 0)"' in weights
    assert "(-2, 1, 1) / (-2, 1, 1)" in congruence
    # deterministic output
    assert emit_dot(gen_s6(), annotate="congruence") == congruence
    with pytest.raises(ValueError):
        emit_dot(gen_s6(), annotate="bogus")
