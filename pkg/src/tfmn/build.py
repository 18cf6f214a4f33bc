"""Multiplex lexical network construction.

Dependency trees are reduced to content-word graphs by contracting
function words (each removed node's tree neighbours are clique-connected),
stems are merged across the corpus into a syntactic layer, a synonym layer
is added from the lexicon, and every node is labelled with valence and
emotions.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from .ingest import ParsedSentence, word_classes
from .lexicons import (
    AntonymLexicon,
    EmotionLexicon,
    SynonymLexicon,
    ValenceLexicon,
)
from .stemmer import stem

__all__ = [
    "Concept",
    "MultiplexLexicalNetwork",
    "extract_syntactic_edges",
    "add_synonym_layer",
    "build_network",
    "network_to_json",
    "network_from_json",
    "write_graphml",
    "read_graphml",
]

_CONTENT_UPOS = frozenset({"NOUN", "PROPN", "VERB", "ADJ", "ADV", "PRON"})


@dataclass(frozen=True)
class Concept:
    stem: str
    valence_label: str  # positive | neutral | negative | unrated
    valence_score: float | None
    emotions: frozenset[str]
    is_negation_marker: bool = False


@dataclass
class MultiplexLexicalNetwork:
    nodes: dict[str, Concept]
    syntactic_edges: dict[tuple[str, str], int]  # ordered pair (min, max) -> count
    synonym_edges: set[tuple[str, str]]
    provenance: dict

    def aggregate_graph(self) -> nx.Graph:
        """Simple graph over both layers; used by all unweighted analyses."""
        g = nx.Graph()
        g.add_nodes_from(sorted(self.nodes))
        g.add_edges_from(sorted(self.syntactic_edges))
        g.add_edges_from(sorted(self.synonym_edges))
        return g

    def layer_graph(self, layer: str) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(sorted(self.nodes))
        if layer == "syntactic":
            g.add_edges_from(sorted(self.syntactic_edges))
        elif layer == "synonym":
            g.add_edges_from(sorted(self.synonym_edges))
        else:
            raise ValueError(f"unknown layer {layer!r}")
        return g

    def validate(self) -> None:
        for pair in set(self.syntactic_edges) | self.synonym_edges:
            a, b = pair
            if a == b:
                raise ValueError(f"self-loop {pair}")
            if a not in self.nodes or b not in self.nodes:
                raise ValueError(f"edge {pair} references missing node")


def _ordered(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


def _is_content(token, negations: frozenset[str]) -> bool:
    if token.surface.lower() in negations or token.lemma.lower() in negations:
        return True
    return token.upos in _CONTENT_UPOS and token.deprel != "cop"


def _token_stem(token, negations: frozenset[str]) -> str | None:
    word = token.lemma.lower() if token.lemma else token.surface.lower()
    if word in negations:
        return word
    word = "".join(ch for ch in word if ch.isalpha())
    if not word:
        return None
    return stem(word)


def extract_syntactic_edges(sentence: ParsedSentence) -> set[tuple[str, str]]:
    """Contract function words out of the dependency tree and return the
    remaining edges as undirected stem pairs.

    Each function node (adposition, auxiliary, copula, determiner,
    conjunction, punctuation, non-negation particle) is removed and its
    tree neighbours clique-connected, iterated to a fixed point, so content
    words connected through function words stay connected.
    """
    negations = word_classes().negations
    g = nx.Graph()
    for tok in sentence.tokens:
        g.add_node(tok.index)
        if tok.head != 0:
            g.add_edge(tok.index, tok.head)

    function_nodes = [
        tok.index for tok in sentence.tokens if not _is_content(tok, negations)
    ]
    for node in function_nodes:
        neighbors = list(g.neighbors(node))
        g.remove_node(node)
        for i, u in enumerate(neighbors):
            for v in neighbors[i + 1 :]:
                g.add_edge(u, v)

    by_index = {tok.index: tok for tok in sentence.tokens}
    edges: set[tuple[str, str]] = set()
    for u, v in g.edges():
        su = _token_stem(by_index[u], negations)
        sv = _token_stem(by_index[v], negations)
        if su is None or sv is None or su == sv:
            continue
        edges.add(_ordered(su, sv))
    return edges


def add_synonym_layer(
    node_stems: set[str], lexicon: SynonymLexicon
) -> set[tuple[str, str]]:
    """Synonym edges between stems that both occur in the text; the lexicon
    never introduces nodes."""
    return {
        (a, b)
        for a, b in lexicon.pairs
        if a in node_stems and b in node_stems
    }


def build_network(
    sentences: list[ParsedSentence],
    valence: ValenceLexicon,
    emotions: EmotionLexicon,
    synonyms: SynonymLexicon,
    corpus_id: str = "corpus",
    config: dict | None = None,
) -> MultiplexLexicalNetwork:
    """Assemble the full multiplex network from parsed sentences."""
    if not sentences:
        raise ValueError("no sentences")
    negations = word_classes().negations

    edge_counts: dict[tuple[str, str], int] = {}
    skipped_sentences = 0
    for sentence in sentences:
        edges = extract_syntactic_edges(sentence)
        if not edges:
            skipped_sentences += 1
        for pair in edges:
            edge_counts[pair] = edge_counts.get(pair, 0) + 1

    node_stems = {s for pair in edge_counts for s in pair}
    synonym_edges = add_synonym_layer(node_stems, synonyms)

    nodes = {}
    for s in sorted(node_stems):
        nodes[s] = Concept(
            stem=s,
            valence_label=valence.label(s),
            valence_score=valence.score(s),
            emotions=emotions.emotions(s),
            is_negation_marker=s in negations,
        )

    config = dict(config or {})
    config_hash = hashlib.sha256(
        json.dumps(config, sort_keys=True).encode("utf-8")
    ).hexdigest()[:16]
    provenance = {
        "corpus_id": corpus_id,
        "config": config,
        "config_hash": config_hash,
        "sentence_count": len(sentences),
        "edgeless_sentences": skipped_sentences,
        "edge_direction": "discarded (undirected analyses)",
    }
    net = MultiplexLexicalNetwork(
        nodes=nodes,
        syntactic_edges=edge_counts,
        synonym_edges=synonym_edges,
        provenance=provenance,
    )
    net.validate()
    return net


def summary(net: MultiplexLexicalNetwork) -> dict:
    labels = [c.valence_label for c in net.nodes.values()]
    return {
        "nodes": len(net.nodes),
        "syntactic_edges": len(net.syntactic_edges),
        "synonym_edges": len(net.synonym_edges),
        "positive": labels.count("positive"),
        "negative": labels.count("negative"),
        "neutral": labels.count("neutral"),
        "unrated": labels.count("unrated"),
        "provenance": net.provenance,
    }


# ---------------------------------------------------------------------------
# serialization

def network_to_json(net: MultiplexLexicalNetwork) -> str:
    payload = {
        "nodes": [
            {
                "stem": c.stem,
                "valence_label": c.valence_label,
                "valence_score": c.valence_score,
                "emotions": sorted(c.emotions),
                "is_negation_marker": c.is_negation_marker,
            }
            for c in (net.nodes[s] for s in sorted(net.nodes))
        ],
        "syntactic_edges": [
            [a, b, count] for (a, b), count in sorted(net.syntactic_edges.items())
        ],
        "synonym_edges": [[a, b] for a, b in sorted(net.synonym_edges)],
        "provenance": net.provenance,
    }
    return json.dumps(payload, sort_keys=True, indent=1)


def network_from_json(text: str) -> MultiplexLexicalNetwork:
    payload = json.loads(text)
    try:
        nodes = {
            n["stem"]: Concept(
                stem=n["stem"],
                valence_label=n["valence_label"],
                valence_score=n["valence_score"],
                emotions=frozenset(n["emotions"]),
                is_negation_marker=n["is_negation_marker"],
            )
            for n in payload["nodes"]
        }
        syntactic = {(a, b): count for a, b, count in payload["syntactic_edges"]}
        synonym = {(a, b) for a, b in payload["synonym_edges"]}
        provenance = payload["provenance"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"invalid network file: {exc}") from exc
    net = MultiplexLexicalNetwork(
        nodes=nodes,
        syntactic_edges=syntactic,
        synonym_edges=synonym,
        provenance=provenance,
    )
    net.validate()
    return net


def load_network(path: str | Path) -> MultiplexLexicalNetwork:
    return network_from_json(Path(path).read_text(encoding="utf-8"))


def save_network(net: MultiplexLexicalNetwork, path: str | Path) -> None:
    Path(path).write_text(network_to_json(net), encoding="utf-8")


def write_graphml(net: MultiplexLexicalNetwork, path: str | Path) -> None:
    g = nx.Graph()
    g.graph["provenance"] = json.dumps(net.provenance, sort_keys=True)
    for s in sorted(net.nodes):
        c = net.nodes[s]
        g.add_node(
            s,
            valence_label=c.valence_label,
            valence_score=-999.0 if c.valence_score is None else c.valence_score,
            emotions=",".join(sorted(c.emotions)),
            is_negation_marker=c.is_negation_marker,
        )
    for (a, b), count in sorted(net.syntactic_edges.items()):
        g.add_edge(a, b, layer="syntactic", count=count)
    for a, b in sorted(net.synonym_edges):
        if g.has_edge(a, b):
            g[a][b]["layer"] = "syntactic+synonym"
        else:
            g.add_edge(a, b, layer="synonym", count=0)
    nx.write_graphml(g, str(path))


def read_graphml(path: str | Path) -> MultiplexLexicalNetwork:
    g = nx.read_graphml(str(path))
    nodes = {}
    for s, data in g.nodes(data=True):
        score = data.get("valence_score", -999.0)
        nodes[s] = Concept(
            stem=s,
            valence_label=data["valence_label"],
            valence_score=None if score == -999.0 else float(score),
            emotions=frozenset(e for e in data.get("emotions", "").split(",") if e),
            is_negation_marker=bool(data.get("is_negation_marker", False)),
        )
    syntactic: dict[tuple[str, str], int] = {}
    synonym: set[tuple[str, str]] = set()
    for a, b, data in g.edges(data=True):
        pair = _ordered(a, b)
        layer = data["layer"]
        if "syntactic" in layer:
            syntactic[pair] = int(data.get("count", 1))
        if "synonym" in layer:
            synonym.add(pair)
    provenance = json.loads(
        g.graph.get("provenance", '{"corpus_id": "graphml", "config": {}, "config_hash": ""}')
    )
    return MultiplexLexicalNetwork(
        nodes=nodes,
        syntactic_edges=syntactic,
        synonym_edges=synonym,
        provenance=provenance,
    )
