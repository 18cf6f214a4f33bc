"""Graph measurements on the multiplex network.

Distances treat a link in either layer as length 1. Closeness of a node
is component size divided by the sum of within-component shortest-path
distances (self-distance zero included), so values are only comparable
within a component.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import networkx as nx

from .build import MultiplexLexicalNetwork

__all__ = [
    "DistanceMatrix",
    "CentralityReport",
    "shortest_paths",
    "closeness",
    "rank_concepts",
    "mean_clustering",
]

LAYER_MODES = ("aggregate", "syntactic_only", "synonym_only")


def _view(net: MultiplexLexicalNetwork, layer_mode: str) -> nx.Graph:
    if layer_mode == "aggregate":
        return net.aggregate_graph()
    if layer_mode == "syntactic_only":
        return net.layer_graph("syntactic")
    if layer_mode == "synonym_only":
        return net.layer_graph("synonym")
    raise ValueError(f"unknown layer_mode {layer_mode!r}; expected one of {LAYER_MODES}")


@dataclass(frozen=True)
class DistanceMatrix:
    component_id: dict[str, int]
    distances: dict[str, dict[str, int]]  # source -> {target: d}; absent = unreachable

    def distance(self, a: str, b: str) -> int | None:
        return self.distances.get(a, {}).get(b)


def shortest_paths(
    net: MultiplexLexicalNetwork, layer_mode: str = "aggregate"
) -> DistanceMatrix:
    """Breadth-first distances within each connected component of the chosen
    layer view; cross-component pairs are simply absent."""
    g = _view(net, layer_mode)
    component_id = {}
    for cid, comp in enumerate(sorted(nx.connected_components(g), key=lambda c: (-len(c), min(c)))):
        for node in comp:
            component_id[node] = cid
    distances = {
        source: dict(lengths)
        for source, lengths in nx.all_pairs_shortest_path_length(g)
    }
    return DistanceMatrix(component_id=component_id, distances=distances)


def closeness(net: MultiplexLexicalNetwork, node: str, layer_mode: str = "aggregate") -> float | None:
    """Closeness of one node: N / sum of distances over its component
    (N = component size). None for isolated nodes."""
    g = _view(net, layer_mode)
    if node not in g:
        raise KeyError(f"unknown node {node!r}")
    return _closeness_in_graph(g, node)


def _closeness_in_graph(g: nx.Graph, node: str) -> float | None:
    lengths = nx.single_source_shortest_path_length(g, node)
    if len(lengths) < 2:
        return None
    return len(lengths) / sum(lengths.values())


@dataclass(frozen=True)
class CentralityReport:
    rows: list[tuple[str, float, int, int]]  # (stem, closeness, degree, component size)

    def write_csv(self, path: str | Path) -> None:
        with Path(path).open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["stem", "closeness", "degree", "component_size"])
            writer.writerows(self.rows)


def rank_concepts(
    net: MultiplexLexicalNetwork, top_k: int, layer_mode: str = "aggregate"
) -> list[tuple[str, float]]:
    """Top-k stems of the largest connected component by closeness,
    descending, ties broken lexicographically."""
    if top_k <= 0:
        raise ValueError("top_k must be positive")
    g = _view(net, layer_mode)
    if g.number_of_nodes() == 0:
        raise ValueError("empty network")
    largest = sorted(nx.connected_components(g), key=lambda c: (-len(c), min(c)))[0]
    sub = g.subgraph(largest)
    scored = [(s, _closeness_in_graph(sub, s)) for s in largest]
    scored = [(s, c) for s, c in scored if c is not None]
    scored.sort(key=lambda sc: (-sc[1], sc[0]))
    return scored[:top_k]


def centrality_report(
    net: MultiplexLexicalNetwork, layer_mode: str = "aggregate"
) -> CentralityReport:
    g = _view(net, layer_mode)
    comp_of = {}
    for comp in nx.connected_components(g):
        for node in comp:
            comp_of[node] = len(comp)
    rows = []
    for s in sorted(g.nodes):
        c = _closeness_in_graph(g, s)
        if c is None:
            continue
        rows.append((s, c, g.degree(s), comp_of[s]))
    rows.sort(key=lambda r: (-r[1], r[0]))
    return CentralityReport(rows=rows)


def mean_clustering(net: MultiplexLexicalNetwork) -> float:
    """Mean local clustering on the aggregate simple graph; degree < 2
    nodes contribute zero."""
    g = net.aggregate_graph()
    if g.number_of_nodes() == 0:
        return 0.0
    local = nx.clustering(g)
    return sum(local.values()) / g.number_of_nodes()
