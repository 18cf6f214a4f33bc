import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from tfmn.stats import (
    benchmark_topic_relevance,
    clustering_null_test,
    configuration_rewire,
    load_free_associations,
    mann_whitney_u,
    null_ensemble,
    rewire_graph,
)

from conftest import make_network


def ring_net(n=20, extra=5):
    """A ring plus a few chords: enough edges for swaps to succeed."""
    edges = {(f"n{i:02d}", f"n{(i + 1) % n:02d}"): 1 for i in range(n)}
    edges.update({(f"n{i:02d}", f"n{(i + n // 2) % n:02d}"): 1 for i in range(extra)})
    return make_network({(min(a, b), max(a, b)): 1 for a, b in edges})


def degrees(g: nx.Graph) -> dict:
    return dict(g.degree())


# ---------------------------------------------------------------------------
# rewiring


def test_rewire_preserves_degrees():
    net = ring_net()
    null = configuration_rewire(net, seed=3)
    assert degrees(null.aggregate_graph()) == degrees(net.aggregate_graph())


def test_rewire_preserves_per_layer_degrees():
    net = make_network(
        {(f"a{i}", f"a{(i + 1) % 8}"): 1 for i in range(8)},
        synonym={(f"a{i}", f"a{(i + 3) % 8}") for i in range(8)},
    )
    null = configuration_rewire(net, seed=5)
    for layer in ("syntactic", "synonym"):
        assert degrees(null.layer_graph(layer)) == degrees(net.layer_graph(layer))


def test_rewire_changes_edges():
    net = ring_net()
    null = configuration_rewire(net, seed=3)
    assert set(null.syntactic_edges) != set(net.syntactic_edges)


def test_rewire_stays_simple():
    null = configuration_rewire(ring_net(), seed=9)
    for a, b in null.syntactic_edges:
        assert a != b
        assert (b, a) not in null.syntactic_edges


def test_rewire_deterministic_per_seed():
    net = ring_net()
    a = configuration_rewire(net, seed=4)
    b = configuration_rewire(net, seed=4)
    c = configuration_rewire(net, seed=5)
    assert a.syntactic_edges == b.syntactic_edges
    assert a.syntactic_edges != c.syntactic_edges


def test_rewire_records_provenance():
    null = configuration_rewire(ring_net(), seed=4)
    assert null.provenance["null_model"]["seed"] == 4
    assert null.provenance["null_model"]["swaps"][0] > 0


def test_unswappable_layer_warns():
    net = make_network({("a", "b"): 1, ("a", "c"): 1})  # shared endpoint: no legal swap
    with pytest.warns(UserWarning, match="no swaps"):
        configuration_rewire(net, seed=1)


def test_rewire_graph_plain():
    g = nx.cycle_graph(12)
    h = rewire_graph(g, seed=2)
    assert degrees(h) == {str(n): d for n, d in g.degree()}


def test_null_ensemble_seeds_fan_out():
    ens = null_ensemble(ring_net(), n_realizations=3, seed=10)
    assert ens.seeds == [10, 11, 12]
    assert len(ens.realizations) == 3


def test_null_ensemble_needs_two():
    with pytest.raises(ValueError):
        null_ensemble(ring_net(), n_realizations=1, seed=0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_rewire_degree_property(seed):
    net = ring_net()
    null = configuration_rewire(net, seed=seed)
    assert degrees(null.aggregate_graph()) == degrees(net.aggregate_graph())


# ---------------------------------------------------------------------------
# Mann-Whitney U


def brute_force_u(a, b):
    return sum(1.0 if x > y else (0.5 if x == y else 0.0) for x in a for y in b)


def test_u_known_value():
    # all of a below all of b: U counts every (a, b) pair with a < b
    r = mann_whitney_u([1.0, 2.0], [3.0, 4.0])
    assert r.U == 4.0


def test_u_with_ties():
    a, b = [1.0, 2.0], [2.0, 3.0]
    r = mann_whitney_u(a, b)
    assert r.U == len(a) * len(b) - brute_force_u(a, b)


def test_medians_reported():
    r = mann_whitney_u([1.0, 2.0, 9.0], [4.0, 5.0])
    assert r.median1 == 2.0
    assert r.median2 == 4.5


def test_identical_samples_p_one():
    r = mann_whitney_u([1.0] * 10, [1.0] * 10)
    assert r.p_value == 1.0


def test_separated_samples_small_p():
    a = [float(i) for i in range(30)]
    b = [float(i + 100) for i in range(30)]
    r = mann_whitney_u(a, b)
    assert r.p_value < 1e-6


def test_p_symmetric_in_sample_order():
    a = [1.0, 2.0, 5.0, 7.0]
    b = [3.0, 4.0, 6.0, 8.0, 9.0]
    assert mann_whitney_u(a, b).p_value == pytest.approx(mann_whitney_u(b, a).p_value)


def test_empty_sample_rejected():
    with pytest.raises(ValueError):
        mann_whitney_u([], [1.0])


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(0, 6).map(float), min_size=1, max_size=8),
    st.lists(st.integers(0, 6).map(float), min_size=1, max_size=8),
)
def test_u_matches_pair_counting(a, b):
    r = mann_whitney_u(a, b)
    # U1 + U2 = n1*n2 with U computed for the first sample as n1*n2 - #(a beats b)
    assert r.U == pytest.approx(len(a) * len(b) - brute_force_u(a, b))
    assert 0.0 < r.p_value <= 1.0


# ---------------------------------------------------------------------------
# free associations and benchmark


def test_load_free_associations(tmp_path):
    path = tmp_path / "fa.tsv"
    path.write_text("cats\tdogs\nrunning\trun\n", encoding="utf-8")
    fa = load_free_associations(path)
    assert fa.graph.has_edge("cat", "dog")
    # running and run share a stem: self-loop dropped
    assert "run" not in fa.graph or fa.graph.degree("run") == 0


def test_free_association_bad_row(tmp_path):
    path = tmp_path / "fa.tsv"
    path.write_text("one\ttwo\tthree\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_free_associations(path)


def make_oracle(tmp_path):
    rng = random.Random(0)
    letters = "bcdfghjklmnpqrstvwxz"
    words = [f"w{a}{b}" for a in letters[:6] for b in letters[:4]]
    lines = []
    for i, a in enumerate(words):
        lines.append(f"{a}\t{words[(i + 1) % len(words)]}")
    for _ in range(30):
        a, b = rng.sample(words, 2)
        lines.append(f"{a}\t{b}")
    path = tmp_path / "oracle.tsv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return load_free_associations(path)


def test_benchmark_report_shape(tmp_path):
    oracle = make_oracle(tmp_path)
    rankings = {"wbb": ["wbc", "wbd", "wbf"], "wdd": ["wdf", "wfb"]}
    report = benchmark_topic_relevance(rankings, oracle, n_realizations=5, seed=1)
    assert report["randomization_target"] == "free-association oracle network"
    assert report["topics"] == ["wbb", "wdd"]
    assert report["n_realizations"] == 5
    assert set(report["per_topic"]) == {"wbb", "wdd"}
    assert 0.0 < report["mann_whitney"]["p_value"] <= 1.0


def test_benchmark_deterministic(tmp_path):
    oracle = make_oracle(tmp_path)
    rankings = {"wbb": ["wbc", "wbd", "wbf"]}
    a = benchmark_topic_relevance(rankings, oracle, n_realizations=5, seed=1)
    b = benchmark_topic_relevance(rankings, oracle, n_realizations=5, seed=1)
    assert a == b


def test_benchmark_skips_absent_topic(tmp_path):
    oracle = make_oracle(tmp_path)
    rankings = {"wbb": ["wbc"], "zzz": ["wbd"]}
    with pytest.warns(UserWarning, match="absent"):
        report = benchmark_topic_relevance(rankings, oracle, n_realizations=3, seed=1)
    assert report["skipped_topics"] == ["zzz"]


def test_benchmark_all_topics_absent_is_error(tmp_path):
    oracle = make_oracle(tmp_path)
    with pytest.raises(ValueError, match="no ranking topic"):
        benchmark_topic_relevance({"zzz": ["wbc"]}, oracle, n_realizations=3, seed=1)


def test_benchmark_counts_absent_stems(tmp_path):
    oracle = make_oracle(tmp_path)
    report = benchmark_topic_relevance(
        {"wbb": ["wbc", "qqq"]}, oracle, n_realizations=3, seed=1
    )
    assert report["absent_ranked_stems"] == 1


# ---------------------------------------------------------------------------
# clustering null test


def test_clustering_null_test_detects_triangles():
    # dense overlapping triangles: clustering far above the rewired ensemble
    edges = {}
    for g0 in range(4):
        group = [f"g{g0}{i}" for i in range(5)]
        for i, u in enumerate(group):
            for v in group[i + 1:]:
                edges[(u, v)] = 1
    for g0 in range(4):
        edges[(f"g{g0}0", f"g{(g0 + 1) % 4}0")] = 1
    net = make_network({(min(a, b), max(a, b)): 1 for a, b in edges})
    report = clustering_null_test(net, n_realizations=20, seed=0)
    assert report["empirical_clustering"] > report["ensemble_mean"]
    assert report["z_score"] > 3.0
    assert len(report["seeds"]) == 20
