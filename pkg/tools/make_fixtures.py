"""Regenerate the bundled data fixtures.

Deterministic: running this script twice produces identical files. Outputs
go to src/tfmn/data/. The free-association oracle is derived from
sentence-level co-occurrence in the benchmark paragraphs (a stand-in for
behavioural association data, which is not redistributable); the synthetic
corpus plants triangles, positive hubs and sparse negative concepts so the
null tests have known structure to detect.
"""

from __future__ import annotations

import random
import sys
from itertools import combinations
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from tfmn.ingest import heuristic_parse, split_sentences, UnparsedSentence, word_classes  # noqa: E402
from tfmn.build import extract_syntactic_edges  # noqa: E402
from tfmn.stemmer import stem  # noqa: E402

DATA = ROOT / "src" / "tfmn" / "data"

POSITIVE_WORDS = [
    "hope", "joy", "success", "friend", "love", "trust", "courage", "wisdom",
    "honor", "glory", "triumph", "delight", "comfort", "kindness", "warmth",
    "beauty", "grace", "freedom", "peace", "wealth", "health", "strength",
    "laughter", "sunshine", "music", "harmony", "gift", "treasure", "pride",
    "honesty", "loyalty", "mercy", "charity", "bliss", "cheer", "fortune",
    "merit", "praise", "reward", "virtue", "wonder", "victory", "paradise",
    "happiness", "appreciation",
]
POSITIVE_HUBS = ["hope", "success", "trust", "friend", "wisdom"]
NEGATIVE_WORDS = [
    "failure", "fear", "doubt", "crisis", "threat", "anger", "grief", "pain",
    "sorrow", "shame", "guilt", "hatred", "misery", "despair", "dread",
    "panic", "cruelty", "betrayal", "poison", "ruin", "decay", "plague",
    "famine", "torment", "agony", "malice", "spite", "venom", "wrath",
    "gloom", "burden", "debt", "loss", "harm", "disgust",
]
NEUTRAL_WORDS = [
    "table", "window", "paper", "road", "stone", "river", "city", "market",
    "letter", "machine", "number", "office", "street", "corner", "bridge",
    "garden", "door", "wall", "field", "forest", "mountain", "valley",
    "harbor", "station", "engine", "signal", "circle", "square", "surface",
    "bottle", "basket", "ladder", "mirror", "carpet", "curtain", "shelf",
    "drawer", "pencil", "notebook", "journal", "chapter", "sentence",
    "syllable", "margin", "column", "panel", "switch", "cable", "filter",
    "lens", "frame", "hinge", "bolt", "washer", "gasket", "valve", "pipe",
    "duct", "vent", "beam",
]

EMOTION_WORDS = {
    "joy": ["joy", "delight", "laughter", "sunshine", "bliss", "cheer", "happiness", "victory", "paradise", "music"],
    "trust": ["trust", "friend", "honesty", "loyalty", "wisdom", "comfort", "health", "appreciation", "mercy", "harmony"],
    "anticipation": ["hope", "fortune", "treasure", "gift", "reward", "wonder"],
    "surprise": ["wonder", "gift", "laughter", "triumph"],
    "anger": ["anger", "wrath", "hatred", "malice", "spite", "venom", "cruelty"],
    "fear": ["fear", "dread", "panic", "threat", "terror" , "crisis"],
    "sadness": ["sorrow", "grief", "misery", "despair", "gloom", "loss", "pain"],
    "disgust": ["disgust", "poison", "decay", "plague", "venom", "filth"],
}

SYNONYM_PAIRS = [
    ("famous", "notable"),
    ("joy", "delight"),
    ("fear", "dread"),
    ("sorrow", "grief"),
    ("anger", "wrath"),
    ("wealth", "fortune"),
    ("triumph", "victory"),
    ("happiness", "bliss"),
    ("road", "street"),
    ("method", "procedure"),
    ("change", "alteration"),
    ("part", "component"),
    ("study", "research"),
    ("emerge", "arise"),
    ("pattern", "structure"),
    ("damage", "harm"),
    ("whole", "entirety"),
    ("forecast", "prediction"),
]

ANTONYM_PAIRS = [
    ("appreciation", "disgust"),
    ("hope", "despair"),
    ("success", "failure"),
    ("trust", "doubt"),
    ("joy", "sorrow"),
    ("love", "hatred"),
    ("courage", "fear"),
    ("peace", "wrath"),
    ("wealth", "debt"),
    ("health", "plague"),
    ("comfort", "torment"),
    ("friend", "threat"),
    ("triumph", "loss"),
    ("kindness", "cruelty"),
    ("honesty", "betrayal"),
    ("god", "man"),
]


def make_valence_csv() -> None:
    rng = random.Random(11)
    rows = [("word", "valence")]
    for i, w in enumerate(POSITIVE_WORDS):
        rows.append((w, f"{7.0 + 1.6 * rng.random():.3f}"))
    for w in NEGATIVE_WORDS:
        rows.append((w, f"{1.4 + 1.6 * rng.random():.3f}"))
    for w in NEUTRAL_WORDS:
        rows.append((w, f"{4.2 + 1.4 * rng.random():.3f}"))
    # benchmark vocabulary, mildly varied around neutral
    bench_words = set()
    for path in sorted((DATA / "benchmark").glob("*.txt")):
        for sent in split_sentences(path.read_text(encoding="utf-8")):
            for word in sent.replace(",", " ").replace(".", " ").split():
                word = "".join(ch for ch in word.lower() if ch.isalpha())
                if len(word) > 2:
                    bench_words.add(word)
    existing = {w for w, _ in rows}
    for w in sorted(bench_words - existing):
        rows.append((w, f"{3.8 + 2.2 * rng.random():.3f}"))
    out = "\n".join(f"{w},{v}" for w, v in rows) + "\n"
    (DATA / "lexicons" / "valence.csv").write_text(out, encoding="utf-8")


def make_emotion_tsv() -> None:
    rows = []
    vocabulary = sorted({w for ws in EMOTION_WORDS.values() for w in ws})
    for w in vocabulary:
        for emotion in sorted(EMOTION_WORDS):
            flag = 1 if w in EMOTION_WORDS[emotion] else 0
            rows.append(f"{w}\t{emotion}\t{flag}")
        # polarity rows mirror the common lexicon layout; loader skips them
        rows.append(f"{w}\tpositive\t0")
        rows.append(f"{w}\tnegative\t0")
    (DATA / "lexicons" / "emotions.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def make_pair_tsvs() -> None:
    syn = "\n".join(f"{a}\t{b}" for a, b in SYNONYM_PAIRS) + "\n"
    ant = "\n".join(f"{a}\t{b}" for a, b in ANTONYM_PAIRS) + "\n"
    (DATA / "lexicons" / "synonyms.tsv").write_text(syn, encoding="utf-8")
    (DATA / "lexicons" / "antonyms.tsv").write_text(ant, encoding="utf-8")


def make_synthetic_corpus() -> None:
    rng = random.Random(7)
    docs: list[str] = []
    triangle_pool = POSITIVE_WORDS + NEUTRAL_WORDS
    # triangles are planted inside small word groups so they overlap and
    # the corpus ends up far more clustered than its degree sequence implies
    groups = [triangle_pool[i : i + 7] for i in range(0, len(triangle_pool) - 6, 7)]
    for _ in range(200):
        group = rng.choice(groups)
        a, b, c = rng.sample(group, 3)
        docs.append(f"{a} is {b}. {b} is {c}. {c} is {a}.")
    for _ in range(150):
        hub = rng.choice(POSITIVE_HUBS)
        a, b = rng.sample([w for w in POSITIVE_WORDS if w != hub], 2)
        docs.append(f"{hub} is {a}. {hub} is {b}.")
    for _ in range(80):
        a, b, c, d = rng.sample(NEUTRAL_WORDS, 4)
        docs.append(f"the {a} is a {b}. the {c} is a {d}.")
    for _ in range(50):
        a, b = rng.sample(NEGATIVE_WORDS, 2)
        docs.append(f"{a} is {b}.")
    for _ in range(20):
        a = rng.choice(POSITIVE_WORDS)
        b = rng.choice(NEGATIVE_WORDS)
        docs.append(f"{a} is not {b}.")
    assert len(docs) == 500
    lines = [f"doc{n:04d}\t{text}" for n, text in enumerate(docs)]
    (DATA / "synthetic" / "corpus.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def make_free_association_oracle() -> None:
    """Edges between content stems co-occurring in a benchmark sentence."""
    negations = word_classes().negations
    edges: set[tuple[str, str]] = set()
    for path in sorted((DATA / "benchmark").glob("*.txt")):
        for i, sent in enumerate(split_sentences(path.read_text(encoding="utf-8"))):
            try:
                parsed = heuristic_parse(sent, doc_id=f"{path.stem}-{i}")
            except UnparsedSentence:
                continue
            stems = set()
            for tok in parsed.tokens:
                word = tok.lemma.lower()
                if word in negations or not word.isalpha():
                    continue
                if tok.upos in ("NOUN", "PROPN", "VERB", "ADJ", "ADV"):
                    stems.add(stem(word))
            for a, b in combinations(sorted(stems), 2):
                edges.add((a, b))
    out = "\n".join(f"{a}\t{b}" for a, b in sorted(edges)) + "\n"
    (DATA / "benchmark" / "free_associations.tsv").write_text(out, encoding="utf-8")


if __name__ == "__main__":
    make_valence_csv()
    make_emotion_tsv()
    make_pair_tsvs()
    make_synthetic_corpus()
    make_free_association_oracle()
    print("fixtures written to", DATA)
