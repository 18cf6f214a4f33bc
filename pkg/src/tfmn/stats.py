"""Null models and nonparametric testing.

Configuration-model nulls are produced by degree-preserving double edge
swaps on simple graphs (self-loops and duplicate edges rejected and
retried), applied independently per layer. Location differences between
empirical and null samples use the Mann-Whitney U test with midrank ties
and a tie-corrected normal approximation.
"""

from __future__ import annotations

import math
import random
import statistics
import warnings
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from .build import MultiplexLexicalNetwork, _ordered
from .metrics import mean_clustering
from .stemmer import stem

__all__ = [
    "NullEnsemble",
    "MannWhitneyResult",
    "FreeAssociationNetwork",
    "configuration_rewire",
    "rewire_graph",
    "mann_whitney_u",
    "benchmark_topic_relevance",
    "clustering_null_test",
    "load_free_associations",
]


# ---------------------------------------------------------------------------
# degree-preserving rewiring

def _rewire_edge_set(
    edges: set[tuple[str, str]], rng: random.Random, swaps_per_edge: int
) -> tuple[set[tuple[str, str]], int]:
    """Double edge swaps on an undirected simple edge set. Returns the
    rewired edges and the number of swaps performed."""
    edge_list = sorted(edges)
    m = len(edge_list)
    if m < 2:
        return set(edge_list), 0
    edge_set = set(edge_list)
    target = swaps_per_edge * m
    performed = 0
    attempts = 0
    max_attempts = 100 * target
    while performed < target and attempts < max_attempts:
        attempts += 1
        i = rng.randrange(m)
        j = rng.randrange(m)
        if i == j:
            continue
        a, b = edge_list[i]
        c, d = edge_list[j]
        # choose swap orientation: (a,c)+(b,d) or (a,d)+(b,c)
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4:
            continue
        new1, new2 = _ordered(a, c), _ordered(b, d)
        if new1 in edge_set or new2 in edge_set:
            continue
        edge_set.discard(_ordered(a, b))
        edge_set.discard(_ordered(c, d))
        edge_set.add(new1)
        edge_set.add(new2)
        edge_list[i] = new1
        edge_list[j] = new2
        performed += 1
    return edge_set, performed


def configuration_rewire(
    net: MultiplexLexicalNetwork, seed: int, swaps_per_edge: int = 10
) -> MultiplexLexicalNetwork:
    """One configuration-model realization: each layer rewired
    independently, per-layer degree sequences preserved exactly."""
    rng = random.Random(seed)
    syn_edges, syn_swaps = _rewire_edge_set(set(net.syntactic_edges), rng, swaps_per_edge)
    sem_edges, sem_swaps = _rewire_edge_set(set(net.synonym_edges), rng, swaps_per_edge)
    if len(net.syntactic_edges) >= 2 and syn_swaps == 0:
        warnings.warn("syntactic layer admitted no swaps; returned unchanged")
    if len(net.synonym_edges) >= 2 and sem_swaps == 0:
        warnings.warn("synonym layer admitted no swaps; returned unchanged")
    return MultiplexLexicalNetwork(
        nodes=dict(net.nodes),
        syntactic_edges={pair: 1 for pair in syn_edges},
        synonym_edges=sem_edges,
        provenance={
            **net.provenance,
            "null_model": {"seed": seed, "swaps": [syn_swaps, sem_swaps]},
        },
    )


def rewire_graph(g: nx.Graph, seed: int, swaps_per_edge: int = 10) -> nx.Graph:
    """Degree-preserving rewire of a plain simple graph."""
    rng = random.Random(seed)
    edges = {_ordered(str(u), str(v)) for u, v in g.edges()}
    rewired, _ = _rewire_edge_set(edges, rng, swaps_per_edge)
    h = nx.Graph()
    h.add_nodes_from(str(n) for n in g.nodes())
    h.add_edges_from(rewired)
    return h


@dataclass(frozen=True)
class NullEnsemble:
    realizations: list[MultiplexLexicalNetwork]
    seeds: list[int]
    swaps_per_edge: int


def null_ensemble(
    net: MultiplexLexicalNetwork,
    n_realizations: int,
    seed: int,
    swaps_per_edge: int = 10,
) -> NullEnsemble:
    if n_realizations < 2:
        raise ValueError("need at least 2 realizations")
    seeds = [seed + k for k in range(n_realizations)]
    realizations = [configuration_rewire(net, s, swaps_per_edge) for s in seeds]
    return NullEnsemble(realizations=realizations, seeds=seeds, swaps_per_edge=swaps_per_edge)


# ---------------------------------------------------------------------------
# Mann-Whitney U

@dataclass(frozen=True)
class MannWhitneyResult:
    U: float
    p_value: float
    n1: int
    n2: int
    median1: float
    median2: float

    def to_dict(self) -> dict:
        return {
            "U": self.U,
            "p_value": self.p_value,
            "n1": self.n1,
            "n2": self.n2,
            "median1": self.median1,
            "median2": self.median2,
        }


def _midranks(values: list[float]) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        mid = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = mid
        i = j + 1
    return ranks


def mann_whitney_u(sample_a: list[float], sample_b: list[float]) -> MannWhitneyResult:
    """Two-sided Mann-Whitney U (U of the first sample), normal
    approximation with continuity and tie correction."""
    if not sample_a or not sample_b:
        raise ValueError("both samples must be nonempty")
    n1, n2 = len(sample_a), len(sample_b)
    pooled = list(sample_a) + list(sample_b)
    ranks = _midranks(pooled)
    r1 = sum(ranks[:n1])
    u1 = n1 * n2 + n1 * (n1 + 1) / 2 - r1
    n = n1 + n2
    tie_term = 0.0
    seen: dict[float, int] = {}
    for v in pooled:
        seen[v] = seen.get(v, 0) + 1
    for t in seen.values():
        tie_term += t**3 - t
    sigma_sq = n1 * n2 / 12 * ((n + 1) - tie_term / (n * (n - 1)))
    mu = n1 * n2 / 2
    if sigma_sq <= 0:
        p = 1.0
    else:
        diff = u1 - mu
        correction = 0.5 if diff > 0 else (-0.5 if diff < 0 else 0.0)
        z = (diff - correction) / math.sqrt(sigma_sq)
        p = 2 * (1 - _norm_cdf(abs(z)))
        p = min(max(p, 1e-300), 1.0)
    return MannWhitneyResult(
        U=u1,
        p_value=p,
        n1=n1,
        n2=n2,
        median1=float(statistics.median(sample_a)),
        median2=float(statistics.median(sample_b)),
    )


def _norm_cdf(x: float) -> float:
    return 0.5 * (1 + math.erf(x / math.sqrt(2)))


# ---------------------------------------------------------------------------
# free-association benchmark

@dataclass(frozen=True)
class FreeAssociationNetwork:
    graph: nx.Graph
    source: str

    def __post_init__(self):
        if any(u == v for u, v in self.graph.edges()):
            raise ValueError("free-association network must be simple")


def load_free_associations(path: str | Path) -> FreeAssociationNetwork:
    """Load a stem<TAB>stem edge list, normalizing words with the same
    stemmer used for network construction."""
    path = Path(path)
    g = nx.Graph()
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ValueError(f"{path}: line {lineno}: expected 2 fields")
            a = stem(fields[0].strip().lower())
            b = stem(fields[1].strip().lower())
            if a != b:
                g.add_edge(a, b)
    return FreeAssociationNetwork(graph=g, source=str(path))


def _topic_distances(g: nx.Graph, topic: str, stems: list[str]) -> tuple[list[int], int]:
    lengths = nx.single_source_shortest_path_length(g, topic)
    distances, skipped = [], 0
    for s in stems:
        if s == topic:
            continue
        d = lengths.get(s)
        if d is None:
            skipped += 1
        else:
            distances.append(d)
    return distances, skipped


def benchmark_topic_relevance(
    rankings: dict[str, list[str]],
    oracle: FreeAssociationNetwork,
    n_realizations: int = 50,
    seed: int = 0,
    swaps_per_edge: int = 10,
) -> dict:
    """Compare oracle distances from ranked stems to their topics against
    the same distances on degree-preserving rewires of the oracle.

    The oracle (free-association) network is the randomization target,
    since distances are measured on it; this choice is recorded in the
    report header.
    """
    if n_realizations < 2:
        raise ValueError("need at least 2 realizations")
    usable = {t: stems for t, stems in rankings.items() if t in oracle.graph}
    skipped_topics = sorted(set(rankings) - set(usable))
    if not usable:
        raise ValueError("no ranking topic is present in the oracle network")
    if skipped_topics:
        warnings.warn(f"topics absent from oracle skipped: {skipped_topics}")

    empirical: list[float] = []
    per_topic: dict[str, dict] = {}
    absent_stems = 0
    for topic in sorted(usable):
        distances, skipped = _topic_distances(oracle.graph, topic, usable[topic])
        absent_stems += skipped
        per_topic[topic] = {"empirical_distances": distances, "absent_stems": skipped}
        empirical.extend(float(d) for d in distances)

    null: list[float] = []
    seeds = [seed + k for k in range(n_realizations)]
    for s in seeds:
        rewired = rewire_graph(oracle.graph, s, swaps_per_edge)
        for topic in sorted(usable):
            distances, _ = _topic_distances(rewired, topic, usable[topic])
            null.extend(float(d) for d in distances)
    empirical.sort()
    null.sort()
    result = mann_whitney_u(empirical, null)
    return {
        "randomization_target": "free-association oracle network",
        "topics": sorted(usable),
        "skipped_topics": skipped_topics,
        "absent_ranked_stems": absent_stems,
        "n_realizations": n_realizations,
        "seed": seed,
        "seeds": seeds,
        "per_topic": per_topic,
        "empirical_median": result.median1,
        "null_median": result.median2,
        "mann_whitney": result.to_dict(),
    }


def clustering_null_test(
    net: MultiplexLexicalNetwork,
    n_realizations: int = 50,
    seed: int = 0,
    swaps_per_edge: int = 10,
) -> dict:
    """Empirical mean clustering against the configuration-ensemble
    mean +/- standard deviation."""
    ensemble = null_ensemble(net, n_realizations, seed, swaps_per_edge)
    empirical = mean_clustering(net)
    values = [mean_clustering(r) for r in ensemble.realizations]
    mean = statistics.fmean(values)
    std = statistics.pstdev(values)
    z = (empirical - mean) / std if std > 0 else math.inf
    return {
        "empirical_clustering": empirical,
        "ensemble_mean": mean,
        "ensemble_std": std,
        "z_score": z,
        "n_realizations": n_realizations,
        "seed": seed,
        "seeds": ensemble.seeds,
    }
