import random

import pytest

from paritysign.errors import (
    InvalidInputError,
    MalformedRecordError,
    UnsupportedSizeError,
)
from paritysign.graphs import (
    FamilySpec,
    Graph,
    bridge_join,
    build_family,
    canonical_key,
    complete,
    complete_bipartite,
    corona,
    cycle,
    disjoint_union,
    enumerate_connected,
    is_bipartite,
    is_connected,
    parse_family,
    parse_graph6,
    path,
    star,
    write_graph6,
)
from helpers import random_graph


class TestGraph:
    def test_basic_invariants(self):
        g = Graph(4, [(0, 1), (3, 2)])
        assert g.n == 4
        assert g.edges == {(0, 1), (2, 3)}
        assert g.adj[0] == 0b0010
        assert g.adj[2] == 0b1000
        assert g.degree(1) == 1

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_loop_rejected(self):
        with pytest.raises(InvalidInputError):
            Graph(3, [(1, 1)])

    def test_out_of_range_endpoint_rejected(self):
        with pytest.raises(InvalidInputError):
            Graph(3, [(0, 3)])

    def test_negative_n_rejected(self):
        with pytest.raises(InvalidInputError):
            Graph(-1)


class TestFamilies:
    def test_path(self):
        g = path(4)
        assert g.n == 4
        assert g.edges == {(0, 1), (1, 2), (2, 3)}

    def test_star_has_center_zero(self):
        g = star(3)
        assert g.n == 4
        assert g.edges == {(0, 1), (0, 2), (0, 3)}

    def test_cycle_closes(self):
        g = cycle(5)
        assert (0, 4) in g.edges
        assert g.m == 5

    def test_complete_bipartite(self):
        g = complete_bipartite(2, 3)
        assert g.n == 5 and g.m == 6
        assert (0, 1) not in g.edges

    def test_parameter_ranges(self):
        for bad in (lambda: path(0), lambda: cycle(2), lambda: star(0),
                    lambda: complete(0), lambda: complete_bipartite(0, 2)):
            with pytest.raises(InvalidInputError):
                bad()

    def test_build_family_corona_cycle(self):
        g = build_family(FamilySpec("corona_cycle_k1", (4,)))
        assert g.n == 8
        # pendant i+4 hangs off cycle vertex i
        for i in range(4):
            assert (i, i + 4) in g.edges
            assert g.degree(i + 4) == 1

    def test_parse_family(self):
        assert parse_family("path:6") == FamilySpec("path", (6,))
        assert parse_family("complete_bipartite:2,3") == FamilySpec(
            "complete_bipartite", (2, 3)
        )
        with pytest.raises(InvalidInputError):
            parse_family("path")
        with pytest.raises(InvalidInputError):
            parse_family("path:x")
        with pytest.raises(InvalidInputError):
            build_family(FamilySpec("petersen", (1,)))


class TestCorona:
    def test_c3_k1(self):
        g = corona(cycle(3), complete(1))
        assert g.n == 6 and g.m == 6

    def test_k2_k2(self):
        g = corona(complete(2), complete(2))
        assert g.n == 6 and g.m == 7

    def test_p1_k1_is_k2(self):
        g = corona(path(1), complete(1))
        assert g == complete(2)

    def test_size_law(self):
        rng = random.Random(7)
        for _ in range(20):
            base = random_graph(rng, rng.randint(1, 5))
            sat = random_graph(rng, rng.randint(1, 4))
            g = corona(base, sat)
            assert g.n == base.n * (1 + sat.n)
            assert g.m == base.m + base.n * (sat.m + sat.n)


class TestBridgeJoin:
    def test_k2_k2_gives_p4(self):
        g = bridge_join(complete(2), 0, complete(2), 0)
        assert canonical_key(g) == canonical_key(path(4))

    def test_c4_c4(self):
        g = bridge_join(cycle(4), 0, cycle(4), 0)
        assert g.n == 8 and g.m == 9
        assert (0, 4) in g.edges
        without = Graph(8, g.edges - {(0, 4)})
        assert not is_connected(without)

    def test_single_vertices(self):
        assert bridge_join(path(1), 0, path(1), 0) == complete(2)

    def test_one_more_edge_than_union(self):
        rng = random.Random(11)
        for _ in range(10):
            g1 = random_graph(rng, rng.randint(1, 5))
            g2 = random_graph(rng, rng.randint(1, 5))
            joined = bridge_join(g1, 0, g2, 0)
            assert joined.m == disjoint_union(g1, g2).m + 1

    def test_bad_endpoint(self):
        with pytest.raises(InvalidInputError):
            bridge_join(path(2), 5, path(2), 0)


class TestGraph6:
    def test_known_encodings(self):
        assert write_graph6(complete(3)) == "Bw"
        assert write_graph6(complete(4)) == "C~"
        assert write_graph6(Graph(1)) == "@"
        assert write_graph6(Graph(2)) == "A?"
        assert write_graph6(path(4)).startswith("C")

    def test_known_decodings(self):
        assert parse_graph6("Bw") == complete(3)
        assert parse_graph6("C~") == complete(4)
        assert parse_graph6("@") == Graph(1)
        assert parse_graph6(b"A?") == Graph(2)

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<Bw") == complete(3)

    def test_roundtrip_random(self):
        rng = random.Random(3)
        for _ in range(200):
            g = random_graph(rng, rng.randint(0, 20))
            assert parse_graph6(write_graph6(g)) == g

    def test_roundtrip_matches_networkx(self):
        # independent reference codec
        nx = pytest.importorskip("networkx")
        rng = random.Random(5)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 15))
            ours = write_graph6(g)
            h = nx.from_graph6_bytes(ours.encode())
            assert set(h.nodes) == set(range(g.n))
            assert {tuple(sorted(e)) for e in h.edges} == g.edges
            theirs = nx.to_graph6_bytes(h, header=False).strip().decode()
            assert theirs == ours

    def test_write_too_large(self):
        with pytest.raises(UnsupportedSizeError):
            write_graph6(Graph(63))

    def test_parse_multibyte_size_rejected(self):
        with pytest.raises(UnsupportedSizeError):
            parse_graph6("~??")

    def test_parse_bad_byte(self):
        with pytest.raises(MalformedRecordError):
            parse_graph6("B\x20")

    def test_parse_bad_length(self):
        with pytest.raises(MalformedRecordError):
            parse_graph6("Bww")

    def test_parse_nonzero_pad(self):
        # n=2: one edge bit plus five pad bits; '@' encodes 000001
        with pytest.raises(MalformedRecordError):
            parse_graph6("A@")

    def test_empty_record(self):
        with pytest.raises(MalformedRecordError):
            parse_graph6("   ")


class TestEnumeration:
    def test_counts(self):
        # frozen from the labeled-graph brute force in test_completeness
        assert [sum(1 for _ in enumerate_connected(n)) for n in range(1, 7)] == [
            1, 1, 2, 6, 21, 112,
        ]

    def test_soundness_no_isomorphic_pair(self):
        for n in range(1, 6):
            keys = [canonical_key(g) for g in enumerate_connected(n)]
            assert len(keys) == len(set(keys))

    def test_stream_sorted_by_canonical_key(self):
        for n in range(1, 7):
            keys = [canonical_key(g) for g in enumerate_connected(n)]
            assert keys == sorted(keys)

    def test_representatives_are_connected(self):
        for n in range(1, 6):
            assert all(is_connected(g) for g in enumerate_connected(n))

    def test_completeness_against_labeled_oracle(self):
        # every labeled connected graph must be isomorphic to some representative
        for n in range(1, 5):
            reps = {canonical_key(g) for g in enumerate_connected(n)}
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
            seen = set()
            for bits in range(1 << len(pairs)):
                g = Graph(n, [pairs[k] for k in range(len(pairs)) if (bits >> k) & 1])
                if is_connected(g):
                    seen.add(canonical_key(g))
            assert seen == reps

    def test_out_of_range(self):
        with pytest.raises(UnsupportedSizeError):
            list(enumerate_connected(0))
        with pytest.raises(UnsupportedSizeError):
            list(enumerate_connected(7))


class TestConnectivityAndBipartite:
    def test_c4(self):
        g = cycle(4)
        assert is_connected(g)
        colors = is_bipartite(g)
        classes = {frozenset(v for v in range(4) if colors[v] == c) for c in (0, 1)}
        assert classes == {frozenset({0, 2}), frozenset({1, 3})}

    def test_c3_not_bipartite(self):
        assert is_connected(cycle(3))
        assert is_bipartite(cycle(3)) is None

    def test_two_k2(self):
        g = disjoint_union(complete(2), complete(2))
        assert not is_connected(g)
        assert is_bipartite(g) is not None

    def test_trivial_graphs_connected(self):
        assert is_connected(Graph(0))
        assert is_connected(Graph(1))
