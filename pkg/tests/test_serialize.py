import pytest

from atomlat.algebra import subdirect_decomposition, embed_in_free
from atomlat.core import Signature
from atomlat.errors import CapExceeded
from atomlat.serialize import (
    decomposition_to_dict,
    embedding_to_dict,
    model_from_dict,
    model_from_json,
    model_to_dict,
    model_to_dot,
    model_to_json,
    rename_map_from_json,
)

from conftest import mk, random_model, seeded


def test_json_round_trip_on_randoms():
    rng = seeded(61)
    for _ in range(30):
        m = random_model(rng, "a b c d e")
        assert model_from_json(model_to_json(m)) == m


def test_model_document_is_canonical():
    doc = model_to_dict(mk("a b c", "c", "a b c"))
    assert doc == {"constants": ["a", "b", "c"], "atoms": [["a", "b", "c"], ["c"]]}


def test_model_document_rejects_other_shapes():
    with pytest.raises(ValueError):
        model_from_dict({"constants": ["a"]})
    with pytest.raises(ValueError):
        model_from_dict({"constants": ["a"], "atoms": [], "extra": 1})
    with pytest.raises(ValueError):
        model_from_dict(["a"])


def test_rename_map_document():
    rmap = rename_map_from_json(
        '{"map": {"c1": ["g1", "g3"], "c3": []}, "targets": ["g1", "g2", "g3"]}'
    )
    assert rmap.target.names == ("g1", "g2", "g3")
    assert rmap.mapping["c1"] == ("g1", "g3")
    assert rmap.mapping["c3"] == ()
    with pytest.raises(ValueError):
        rename_map_from_json('{"map": {}}')


def test_decomposition_document():
    doc = decomposition_to_dict(subdirect_decomposition(mk("a b c", "c", "a b c")))
    assert doc == {
        "constants": ["a", "b", "c"],
        "components": [{"atom": ["c"], "top": "z1", "bottom": "zb1"}],
        "generators": {"a": ["zb1"], "b": ["zb1"], "c": ["z1"]},
    }


def test_embedding_document():
    m = mk("a b", "a", "b")
    free_sig, terms = embed_in_free(m)
    doc = embedding_to_dict(m, free_sig, terms)
    assert doc == {
        "constants": ["z1", "z2"],
        "generators": {"a": ["z1"], "b": ["z2"]},
    }


def test_dot_free_pair():
    out = model_to_dot(mk("a b", "a", "b"))
    assert out == (
        "digraph {\n"
        '  "a" [atoms="{a}"];\n'
        '  "a b" [atoms="{a}, {b}"];\n'
        '  "b" [atoms="{b}"];\n'
        '  "a" -> "a b";\n'
        '  "b" -> "a b";\n'
        "}\n"
    )


def test_dot_chain_collapses_classes():
    out = model_to_dot(mk("a b c", "c", "a b c"))
    assert out == (
        "digraph {\n"
        '  "a b" [atoms="{a b c}"];\n'
        '  "a b c" [atoms="{a b c}, {c}"];\n'
        '  "a b" -> "a b c";\n'
        "}\n"
    )


def test_dot_skips_transitive_edges():
    # atoms give c <= b <= a, so classes collapse upward and the chain
    # must not contain the transitive bottom-to-top edge
    m = mk("a b c", "a", "a b", "a b c")
    out = model_to_dot(m)
    assert '"c" -> "b c";' in out
    assert '"b c" -> "a b c";' in out
    assert '"c" -> "a b c";' not in out


def test_dot_respects_cap():
    sig_names = " ".join(f"c{i}" for i in range(11))
    m = mk(sig_names, *[f"c{i}" for i in range(11)])
    with pytest.raises(CapExceeded):
        model_to_dot(m)


def test_dot_escapes_quotes():
    sig = Signature.of(['a"x', "b"])
    m = mk(['a"x', "b"], 'a"x', "b")
    out = model_to_dot(m)
    assert '\\"' in out
