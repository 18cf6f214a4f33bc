from pathlib import Path

import pytest

import tfmn
from tfmn.build import MultiplexLexicalNetwork, Concept
from tfmn.lexicons import (
    load_antonyms,
    load_emotion_lexicon,
    load_synonyms,
    load_valence_norms,
)

DATA = Path(tfmn.__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def lexicon_dir() -> Path:
    return DATA / "lexicons"


@pytest.fixture(scope="session")
def valence(lexicon_dir):
    return load_valence_norms(lexicon_dir / "valence.csv")


@pytest.fixture(scope="session")
def emotions(lexicon_dir):
    return load_emotion_lexicon(lexicon_dir / "emotions.tsv")


@pytest.fixture(scope="session")
def synonyms(lexicon_dir):
    return load_synonyms(lexicon_dir / "synonyms.tsv")


@pytest.fixture(scope="session")
def antonyms(lexicon_dir):
    return load_antonyms(lexicon_dir / "antonyms.tsv")


def make_network(
    syntactic: dict[tuple[str, str], int] | set,
    synonym: set | None = None,
    labels: dict[str, str] | None = None,
    emotions_by_stem: dict[str, set[str]] | None = None,
    negations: set[str] = frozenset({"not", "no", "never"}),
) -> MultiplexLexicalNetwork:
    """Hand-build a small network for unit tests."""
    if isinstance(syntactic, set):
        syntactic = {pair: 1 for pair in syntactic}
    synonym = synonym or set()
    labels = labels or {}
    emotions_by_stem = emotions_by_stem or {}
    stems = {s for pair in list(syntactic) + list(synonym) for s in pair}
    nodes = {
        s: Concept(
            stem=s,
            valence_label=labels.get(s, "unrated"),
            valence_score=None,
            emotions=frozenset(emotions_by_stem.get(s, set())),
            is_negation_marker=s in negations,
        )
        for s in stems
    }
    net = MultiplexLexicalNetwork(
        nodes=nodes,
        syntactic_edges={(min(a, b), max(a, b)): c for (a, b), c in syntactic.items()},
        synonym_edges={(min(a, b), max(a, b)) for a, b in synonym},
        provenance={"corpus_id": "test", "config": {}, "config_hash": "test"},
    )
    net.validate()
    return net
