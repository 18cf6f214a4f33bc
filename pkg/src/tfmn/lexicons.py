"""Affect and semantic lexicon loaders.

Loads the three external resources backing network enrichment: valence
norms (CSV of word ratings), an emotion association lexicon (word/emotion/
flag TSV) and synonym/antonym pair tables. All entries are keyed by Porter
stem; words sharing a stem are merged at load time.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .stemmer import stem

EMOTIONS = (
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "sadness",
    "surprise",
    "trust",
)

VALENCE_LABELS = ("positive", "neutral", "negative", "unrated")


class LexiconError(ValueError):
    """Raised when a lexicon file cannot be loaded."""


def _safe_stem(word: str) -> str | None:
    word = word.strip().lower()
    if not word or not word.isalpha():
        return None
    return stem(word)


@dataclass(frozen=True)
class ValenceLexicon:
    """Stem-level valence scores with quartile bounds over the stem distribution."""

    entries: dict[str, tuple[float, int]]  # stem -> (mean score, word count)
    q1: float
    q3: float
    scale: tuple[float, float] = (1.0, 9.0)

    def score(self, s: str) -> float | None:
        entry = self.entries.get(s)
        return entry[0] if entry else None

    def label(self, s: str) -> str:
        """Quartile-based label: positive above q3, negative below q1,
        neutral inside the closed interquartile interval, unrated if absent."""
        entry = self.entries.get(s)
        if entry is None:
            return "unrated"
        score = entry[0]
        if score > self.q3:
            return "positive"
        if score < self.q1:
            return "negative"
        return "neutral"


@dataclass(frozen=True)
class EmotionLexicon:
    """Stem -> set of basic emotions; words sharing a stem are unioned."""

    entries: dict[str, frozenset[str]]
    skipped_rows: int = 0

    def emotions(self, s: str) -> frozenset[str]:
        return self.entries.get(s, frozenset())


@dataclass(frozen=True)
class SynonymLexicon:
    """Unordered synonymous stem pairs."""

    pairs: frozenset[tuple[str, str]]

    def __contains__(self, pair: tuple[str, str]) -> bool:
        a, b = pair
        return (min(a, b), max(a, b)) in self.pairs

    def partners(self, s: str) -> set[str]:
        out = set()
        for a, b in self.pairs:
            if a == s:
                out.add(b)
            elif b == s:
                out.add(a)
        return out


@dataclass(frozen=True)
class AntonymLexicon:
    """Unordered antonymous stem pairs with a deterministic preferred lookup."""

    pairs: frozenset[tuple[str, str]]
    lookup: dict[str, str] = field(default_factory=dict)

    def antonym(self, s: str) -> str | None:
        return self.lookup.get(s)


def load_valence_norms(
    path: str | Path,
    scale: tuple[float, float] = (1.0, 9.0),
    word_column: str = "word",
    score_column: str = "valence",
) -> ValenceLexicon:
    """Load a valence-norms CSV, averaging scores over words that share a stem.

    Quartiles are computed over the distribution of stem-level scores with
    linear interpolation between order statistics.
    """
    path = Path(path)
    scale_min, scale_max = scale
    by_stem: dict[str, list[float]] = {}
    bad_rows: list[str] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or word_column not in reader.fieldnames or score_column not in reader.fieldnames:
            raise LexiconError(
                f"{path}: missing required columns {word_column!r}/{score_column!r} "
                f"(found {reader.fieldnames})"
            )
        for lineno, row in enumerate(reader, start=2):
            word = (row.get(word_column) or "").strip().lower()
            raw = (row.get(score_column) or "").strip()
            try:
                score = float(raw)
            except ValueError:
                bad_rows.append(f"line {lineno}: unparsable score {raw!r}")
                continue
            if not scale_min <= score <= scale_max:
                bad_rows.append(f"line {lineno}: score {score} outside scale {scale}")
                continue
            s = _safe_stem(word)
            if s is None:
                bad_rows.append(f"line {lineno}: unusable word {word!r}")
                continue
            by_stem.setdefault(s, []).append(score)
    if bad_rows:
        raise LexiconError(f"{path}: {len(bad_rows)} bad rows: " + "; ".join(bad_rows[:5]))
    if not by_stem:
        raise LexiconError(f"{path}: no entries")
    entries = {s: (float(np.mean(v)), len(v)) for s, v in by_stem.items()}
    scores = np.array([v[0] for v in entries.values()])
    q1, q3 = np.percentile(scores, [25.0, 75.0])
    return ValenceLexicon(entries=entries, q1=float(q1), q3=float(q3), scale=scale)


def load_emotion_lexicon(path: str | Path) -> EmotionLexicon:
    """Load a word/emotion/flag TSV; flag=1 rows are unioned per stem.

    Rows naming a value outside the eight-emotion universe (e.g. the raw
    positive/negative polarity rows) are skipped and counted.
    """
    path = Path(path)
    by_stem: dict[str, set[str]] = {}
    skipped = 0
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise LexiconError(f"{path}: line {lineno}: expected 3 fields, got {len(fields)}")
            word, emotion, flag = fields
            if flag not in ("0", "1"):
                raise LexiconError(f"{path}: line {lineno}: bad flag {flag!r}")
            emotion = emotion.strip().lower()
            if emotion not in EMOTIONS:
                skipped += 1
                continue
            s = _safe_stem(word)
            if s is None:
                raise LexiconError(f"{path}: line {lineno}: unusable word {word!r}")
            by_stem.setdefault(s, set())
            if flag == "1":
                by_stem[s].add(emotion)
    entries = {s: frozenset(v) for s, v in by_stem.items()}
    return EmotionLexicon(entries=entries, skipped_rows=skipped)


def _load_pairs(path: str | Path, pre_stemmed: bool) -> tuple[frozenset[tuple[str, str]], int]:
    path = Path(path)
    pairs: set[tuple[str, str]] = set()
    dropped_self = 0
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise LexiconError(f"{path}: line {lineno}: expected 2 fields, got {len(fields)}")
            if pre_stemmed:
                a, b = fields[0].strip().lower(), fields[1].strip().lower()
            else:
                a_s, b_s = _safe_stem(fields[0]), _safe_stem(fields[1])
                if a_s is None or b_s is None:
                    raise LexiconError(f"{path}: line {lineno}: unusable pair {fields!r}")
                a, b = a_s, b_s
            if a == b:
                dropped_self += 1
                continue
            pairs.add((min(a, b), max(a, b)))
    return frozenset(pairs), dropped_self


def load_synonyms(path: str | Path, pre_stemmed: bool = False) -> SynonymLexicon:
    """Load a stem-pair TSV of synonyms; symmetric, deduplicated, self-pairs dropped."""
    pairs, _ = _load_pairs(path, pre_stemmed)
    return SynonymLexicon(pairs=pairs)


def load_antonyms(path: str | Path, pre_stemmed: bool = False) -> AntonymLexicon:
    """Load a stem-pair TSV of antonyms; per-stem lookup prefers the
    lexicographically smallest antonym."""
    pairs, _ = _load_pairs(path, pre_stemmed)
    lookup: dict[str, str] = {}
    for a, b in sorted(pairs):
        for x, y in ((a, b), (b, a)):
            if x not in lookup or y < lookup[x]:
                lookup[x] = y
    return AntonymLexicon(pairs=pairs, lookup=lookup)
