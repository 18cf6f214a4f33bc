import json

import pytest

from tfmn.build import (
    MultiplexLexicalNetwork,
    add_synonym_layer,
    build_network,
    extract_syntactic_edges,
    network_from_json,
    network_to_json,
    read_graphml,
    summary,
    write_graphml,
)
from tfmn.ingest import ParsedSentence, Token, heuristic_parse
from tfmn.lexicons import SynonymLexicon

from conftest import make_network


def edges_of(sentence: str) -> set[tuple[str, str]]:
    return extract_syntactic_edges(heuristic_parse(sentence))


# ---------------------------------------------------------------------------
# function-word contraction, worked examples


def test_copula_contraction():
    assert edges_of("love is weakness") == {("love", "weak")}


def test_preposition_contraction():
    assert edges_of("the cat sat on the chair") == {("cat", "sit"), ("chair", "sit")}


def test_negation_kept_as_node():
    assert edges_of("man is not god") == {("man", "not"), ("god", "not")}


def test_contraction_is_transitive():
    # two function words in a row still connect their content neighbours
    sent = ParsedSentence(
        doc_id="t",
        tokens=(
            Token(1, "cat", "cat", "NOUN", 4, "nsubj"),
            Token(2, "may", "may", "AUX", 4, "aux"),
            Token(3, "have", "have", "AUX", 4, "aux"),
            Token(4, "slept", "sleep", "VERB", 0, "root"),
        ),
    )
    assert extract_syntactic_edges(sent) == {("cat", "sleep")}


def test_self_loop_after_stemming_dropped():
    # distinct surface forms with a shared stem never yield a self-loop
    sent = ParsedSentence(
        doc_id="t",
        tokens=(
            Token(1, "runner", "runner", "NOUN", 2, "nsubj"),
            Token(2, "runs", "run", "VERB", 0, "root"),
            Token(3, "running", "running", "NOUN", 2, "obj"),
        ),
    )
    assert extract_syntactic_edges(sent) == {("run", "runner")}


def test_function_only_sentence_yields_no_edges():
    sent = ParsedSentence(
        doc_id="t",
        tokens=(
            Token(1, "is", "be", "AUX", 0, "root"),
            Token(2, "the", "the", "DET", 1, "det"),
        ),
    )
    assert extract_syntactic_edges(sent) == set()


def test_punctuation_contracted():
    sent = ParsedSentence(
        doc_id="t",
        tokens=(
            Token(1, "cats", "cat", "NOUN", 2, "nsubj"),
            Token(2, "sleep", "sleep", "VERB", 0, "root"),
            Token(3, ".", ".", "PUNCT", 2, "punct"),
        ),
    )
    assert extract_syntactic_edges(sent) == {("cat", "sleep")}


# ---------------------------------------------------------------------------
# synonym layer


def test_synonym_layer_restricted_to_text():
    lex = SynonymLexicon(pairs=frozenset({("famou", "notabl"), ("big", "larg")}))
    assert add_synonym_layer({"famou", "notabl", "big"}, lex) == {("famou", "notabl")}


def test_synonym_layer_never_adds_nodes():
    lex = SynonymLexicon(pairs=frozenset({("big", "larg")}))
    assert add_synonym_layer({"cat", "dog"}, lex) == set()


# ---------------------------------------------------------------------------
# full build


def build_small(valence, emotions, synonyms):
    sentences = [
        heuristic_parse("love is pain"),
        heuristic_parse("love is joy"),
        heuristic_parse("man is not god"),
    ]
    return build_network(sentences, valence, emotions, synonyms, corpus_id="small")


def test_build_counts_repeated_edges(valence, emotions, synonyms):
    sentences = [heuristic_parse("love is weakness")] * 3
    net = build_network(sentences, valence, emotions, synonyms)
    assert net.syntactic_edges[("love", "weak")] == 3


def test_build_merges_stems_across_sentences(valence, emotions, synonyms):
    net = build_small(valence, emotions, synonyms)
    assert set(net.nodes) == {"love", "pain", "joi", "man", "god", "not"}
    assert ("joi", "love") in net.syntactic_edges
    assert ("love", "pain") in net.syntactic_edges


def test_negation_marker_flagged(valence, emotions, synonyms):
    net = build_small(valence, emotions, synonyms)
    assert net.nodes["not"].is_negation_marker
    assert not net.nodes["love"].is_negation_marker


def test_valence_labels_attached(valence, emotions, synonyms):
    net = build_small(valence, emotions, synonyms)
    assert net.nodes["love"].valence_label == "positive"
    assert net.nodes["pain"].valence_label == "negative"
    assert net.nodes["man"].valence_label == "unrated"


def test_emotions_attached(valence, emotions, synonyms):
    net = build_small(valence, emotions, synonyms)
    assert "joy" in net.nodes["joi"].emotions


def test_empty_corpus_rejected(valence, emotions, synonyms):
    with pytest.raises(ValueError):
        build_network([], valence, emotions, synonyms)


def test_provenance_recorded(valence, emotions, synonyms):
    net = build_network(
        [heuristic_parse("love is weakness")],
        valence, emotions, synonyms,
        corpus_id="c1", config={"seed": 5},
    )
    assert net.provenance["corpus_id"] == "c1"
    assert net.provenance["config"] == {"seed": 5}
    assert len(net.provenance["config_hash"]) == 16


def test_config_hash_depends_on_config(valence, emotions, synonyms):
    sents = [heuristic_parse("love is weakness")]
    a = build_network(sents, valence, emotions, synonyms, config={"seed": 1})
    b = build_network(sents, valence, emotions, synonyms, config={"seed": 2})
    assert a.provenance["config_hash"] != b.provenance["config_hash"]


def test_validate_rejects_dangling_edge():
    net = make_network({("a", "b"): 1})
    net.syntactic_edges[("a", "zz")] = 1
    with pytest.raises(ValueError, match="missing node"):
        net.validate()


def test_summary_counts(valence, emotions, synonyms):
    net = build_small(valence, emotions, synonyms)
    s = summary(net)
    assert s["nodes"] == 6
    assert s["syntactic_edges"] == len(net.syntactic_edges)
    assert s["positive"] + s["negative"] + s["neutral"] + s["unrated"] == 6


# ---------------------------------------------------------------------------
# graph views


def test_aggregate_graph_merges_layers():
    net = make_network({("a", "b"): 1}, synonym={("b", "c")})
    g = net.aggregate_graph()
    assert set(g.edges()) == {("a", "b"), ("b", "c")}


def test_layer_graphs_keep_all_nodes():
    net = make_network({("a", "b"): 1}, synonym={("b", "c")})
    syn = net.layer_graph("synonym")
    assert set(syn.nodes()) == {"a", "b", "c"}
    assert set(syn.edges()) == {("b", "c")}
    assert set(net.layer_graph("syntactic").edges()) == {("a", "b")}


def test_unknown_layer_rejected():
    net = make_network({("a", "b"): 1})
    with pytest.raises(ValueError):
        net.layer_graph("semantic")


# ---------------------------------------------------------------------------
# serialization


def test_json_roundtrip(valence, emotions, synonyms):
    net = build_small(valence, emotions, synonyms)
    again = network_from_json(network_to_json(net))
    assert again == net


def test_json_deterministic(valence, emotions, synonyms):
    a = network_to_json(build_small(valence, emotions, synonyms))
    b = network_to_json(build_small(valence, emotions, synonyms))
    assert a == b


def test_json_is_sorted(valence, emotions, synonyms):
    payload = json.loads(network_to_json(build_small(valence, emotions, synonyms)))
    stems = [n["stem"] for n in payload["nodes"]]
    assert stems == sorted(stems)
    assert payload["syntactic_edges"] == sorted(payload["syntactic_edges"])


def test_invalid_json_rejected():
    with pytest.raises(ValueError, match="invalid network file"):
        network_from_json('{"nodes": [{"stem": "a"}]}')


def test_graphml_roundtrip(tmp_path, valence, emotions, synonyms):
    net = build_network(
        [heuristic_parse("love is weakness"), heuristic_parse("man is not god")],
        valence, emotions, synonyms, corpus_id="g",
    )
    net.synonym_edges.add(("love", "weak"))  # overlapping layers survive
    path = tmp_path / "net.graphml"
    write_graphml(net, path)
    again = read_graphml(path)
    assert again.syntactic_edges == net.syntactic_edges
    assert again.synonym_edges == net.synonym_edges
    assert again.nodes == net.nodes
    assert again.provenance == net.provenance
