import numpy as np
import pytest

from GraphEnsembleEmbed.core import (
    Graph,
    GraphFormatError,
    SelfLoopError,
    adjacency,
    derive_seed,
    dump_labels,
    load_edge_list,
    load_karate,
    load_labels,
    make_rng,
    neighbors,
    validate_labels,
)


class TestLoadEdgeList:
    def test_comments_header_and_duplicates(self, write_text):
        path = write_text("g.txt", "# triangle plus isolated node\nN 4\n0 1\n1 2\n2 0\n1 0\n")
        g = load_edge_list(path)
        assert g.num_nodes == 4
        assert g.num_edges == 3
        assert g.degree(3) == 0
        assert g.neighbors(1) == [0, 2]

    def test_node_count_without_header(self, write_text):
        g = load_edge_list(write_text("g.txt", "0 5\n"))
        assert g.num_nodes == 6

    def test_self_loop_names_line(self, write_text):
        path = write_text("g.txt", "0 1\n# comment\n2 2\n")
        with pytest.raises(SelfLoopError) as exc:
            load_edge_list(path)
        assert exc.value.line_no == 3
        assert exc.value.node == 2

    @pytest.mark.parametrize(
        "text, line_no",
        [
            ("0 1\n1 x\n", 2),
            ("0 1 2\n", 1),
            ("0 -1\n", 1),
            ("N 3\n0 3\n", 2),
        ],
    )
    def test_malformed_lines(self, write_text, text, line_no):
        path = write_text("g.txt", text)
        with pytest.raises(GraphFormatError) as exc:
            load_edge_list(path)
        assert exc.value.line_no == line_no
        assert f":{line_no}:" in str(exc.value)

    def test_empty_file(self, write_text):
        with pytest.raises(GraphFormatError):
            load_edge_list(write_text("g.txt", "# nothing\n"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_edge_list(tmp_path / "absent.txt")


class TestGraph:
    def test_adjacency_symmetric_zero_diagonal(self, two_cliques):
        g, _ = two_cliques
        a = adjacency(g)
        np.testing.assert_array_equal(a, a.T)
        assert np.all(np.diag(a) == 0)
        assert g.num_edges == 90
        assert a.sum() == 2 * g.num_edges

    def test_neighbors_out_of_range(self, two_cliques):
        g, _ = two_cliques
        with pytest.raises(IndexError):
            neighbors(g, 20)

    def test_from_edges_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            Graph.from_edges(3, [(0, 1), (1, 1)])

    def test_edges_are_normalized(self):
        g = Graph.from_edges(3, [(2, 0), (0, 2)])
        assert g.edges == frozenset({(0, 2)})
        assert g.has_edge(2, 0)


class TestLabels:
    def test_compaction(self, write_text):
        labels = load_labels(write_text("l.txt", "0 9\n1 5\n2 9\n"), 3)
        np.testing.assert_array_equal(labels, [1, 0, 1])

    @pytest.mark.parametrize("text", ["0 0\n0 1\n1 1\n", "0 0\n", "0 0\n1 0\n2 0\n", "0 a\n1 0\n"])
    def test_invalid_files(self, write_text, text):
        with pytest.raises(GraphFormatError):
            load_labels(write_text("l.txt", text), 2)

    def test_dump_then_load(self, tmp_path):
        labels = np.array([1, 0, 2, 2, 0])
        path = dump_labels(labels, tmp_path / "pred.txt")
        np.testing.assert_array_equal(load_labels(path, 5), labels)

    def test_validate_rejects_gaps(self):
        with pytest.raises(GraphFormatError):
            validate_labels(np.array([0, 2, 2]), 3)


class TestKarate:
    def test_bundled_data(self):
        g, labels = load_karate()
        assert g.num_nodes == 34
        assert g.num_edges == 78
        assert g.degree(0) == 16
        assert g.degree(33) == 17
        assert np.bincount(labels).tolist() == [17, 17]
        assert labels[0] != labels[33]


class TestSeeding:
    def test_derive_seed_is_stable_and_stage_specific(self):
        assert derive_seed(3, "walks", 0) == derive_seed(3, "walks", 0)
        assert derive_seed(3, "walks", 0) != derive_seed(3, "walks", 1)
        assert derive_seed(3, "walks", 0) != derive_seed(3, "sgns", 0)
        assert derive_seed(3, "walks", 0) != derive_seed(4, "walks", 0)
        assert 0 <= derive_seed(2**70, "x") < 2**64

    def test_make_rng_streams(self):
        a = make_rng(5, 1).random(4)
        np.testing.assert_array_equal(a, make_rng(5, 1).random(4))
        assert not np.array_equal(a, make_rng(5, 2).random(4))


class TestSmallGraphs:
    def test_path_graph(self, write_text):
        g = load_edge_list(write_text("p.txt", "0 1\n1 2"))
        assert g.num_nodes == 3
        assert g.edges == frozenset({(0, 1), (1, 2)})
        assert neighbors(g, 1) == [0, 2]

    def test_repeated_edge_lines(self, write_text):
        g = load_edge_list(write_text("p.txt", "0 1\n0 1\n1 0\n"))
        assert g.num_nodes == 2
        np.testing.assert_array_equal(adjacency(g), [[0, 1], [1, 0]])

    def test_edgeless_graph(self):
        g = Graph.from_edges(3, [])
        np.testing.assert_array_equal(adjacency(g), np.zeros((3, 3)))
        assert neighbors(g, 2) == []

    def test_karate_adjacency_row_sums(self):
        g, _ = load_karate()
        a = adjacency(g)
        assert a[0].sum() == g.degree(0) == len(neighbors(g, 0))


def _random_pairs(rng, n, count):
    pairs = []
    while len(pairs) < count:
        u, v = (int(x) for x in rng.integers(0, n, size=2))
        if u != v:
            pairs.append((u, v))
    return pairs


class TestRandomEdgeLists:
    def test_adjacency_and_neighbor_counts(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            n = int(rng.integers(2, 30))
            g = Graph.from_edges(n, _random_pairs(rng, n, int(rng.integers(0, 60))))
            a = adjacency(g)
            np.testing.assert_array_equal(a, a.T)
            assert np.all(np.diag(a) == 0)
            assert a.sum() == 2 * g.num_edges
            assert sum(len(neighbors(g, u)) for u in range(n)) == 2 * g.num_edges
            np.testing.assert_array_equal(a.sum(axis=1), [g.degree(u) for u in range(n)])
            assert all(list(nb) == sorted(nb) for nb in g.neighbor_lists)

    def test_load_ignores_line_order_and_direction(self, write_text):
        rng = np.random.default_rng(32)
        for trial in range(20):
            n = int(rng.integers(2, 25))
            pairs = _random_pairs(rng, n, int(rng.integers(1, 50)))
            shuffled = [pairs[i] for i in rng.permutation(len(pairs))]
            flipped = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in shuffled]

            def text(edges):
                return f"N {n}\n" + "".join(f"{u} {v}\n" for u, v in edges)

            first = load_edge_list(write_text(f"a{trial}.txt", text(pairs)))
            second = load_edge_list(write_text(f"b{trial}.txt", text(flipped)))
            assert first == second
            assert first.edges == Graph.from_edges(n, pairs).edges
            np.testing.assert_array_equal(adjacency(first), adjacency(second))
