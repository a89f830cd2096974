import random

import pytest

from paritysign.errors import CapacityError, InvalidInputError
from paritysign.graphs import (
    FamilySpec,
    Graph,
    build_family,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    enumerate_connected,
    path,
    star,
)
from paritysign.rna import (
    adhika,
    closed_form_rna,
    proof_labeling,
    rna_exact,
    rna_heuristic,
    sigma_spectrum,
)
from paritysign.signs import negative_edge_count, induce_signs
from helpers import (
    labeling_oracle_min,
    random_connected_graph,
    subset_oracle,
)


class TestRnaExact:
    def test_paths(self):
        for n in range(2, 21):
            assert rna_exact(path(n)).value == 1

    def test_complete(self):
        for n in range(2, 17):
            assert rna_exact(complete(n)).value == (n // 2) * ((n + 1) // 2)

    def test_k23(self):
        assert rna_exact(complete_bipartite(2, 3)).value == 3

    def test_witness_achieves_value(self):
        rng = random.Random(43)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 10))
            r = rna_exact(g)
            assert negative_edge_count(g, r.witness) == r.value
            assert r.method == "exact"

    def test_matches_subset_oracle_with_tiebreak(self):
        rng = random.Random(47)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 9))
            value, witness, _ = subset_oracle(g)
            r = rna_exact(g)
            assert r.value == value
            assert r.witness.sorted_vertices() == witness

    def test_matches_full_labeling_oracle(self):
        for n in range(1, 6):
            for g in enumerate_connected(n):
                assert rna_exact(g).value == labeling_oracle_min(g)

    def test_examined_counts_all_bipartitions(self):
        from math import comb

        g = complete(8)
        assert rna_exact(g).examined == comb(8, 4)

    def test_zero_only_for_tiny_or_disconnected(self):
        assert rna_exact(Graph(1)).value == 0
        assert rna_exact(Graph(0)).value == 0
        assert rna_exact(disjoint_union(complete(2), complete(2))).value == 0
        for n in range(2, 6):
            for g in enumerate_connected(n):
                assert rna_exact(g).value >= 1

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            rna_exact(path(30))
        # limit override
        assert rna_exact(path(25), limit=25).value == 1


class TestSpectrum:
    def test_p4(self):
        assert sigma_spectrum(path(4)).values == (1, 2, 3)

    def test_k4_singleton(self):
        spec = sigma_spectrum(complete(4))
        assert spec.values == (4,)
        assert spec.singleton

    def test_star3_singleton(self):
        assert sigma_spectrum(star(3)).values == (2,)

    def test_min_is_rna(self):
        rng = random.Random(53)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 9))
            assert sigma_spectrum(g).min == rna_exact(g).value

    def test_matches_subset_oracle(self):
        rng = random.Random(59)
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(2, 9))
            _, _, values = subset_oracle(g)
            assert set(sigma_spectrum(g).values) == values

    def test_cycle_spectra_all_even(self):
        for n in range(3, 13):
            assert all(v % 2 == 0 for v in sigma_spectrum(cycle(n)).values)

    def test_capacity_error(self):
        with pytest.raises(CapacityError):
            sigma_spectrum(complete(25))


class TestAdhika:
    def test_examples(self):
        assert adhika(cycle(6)) == 4
        assert adhika(complete(2)) == 0
        assert adhika(complete(4)) == 2

    def test_complement_identity(self):
        for n in range(1, 6):
            for g in enumerate_connected(n):
                assert adhika(g) + rna_exact(g).value == g.m


class TestClosedForms:
    def test_values(self):
        assert closed_form_rna(FamilySpec("star", (5,))) == 3
        assert closed_form_rna(FamilySpec("complete", (7,))) == 12
        assert closed_form_rna(FamilySpec("cycle", (3,))) == 2
        assert closed_form_rna(FamilySpec("path", (9,))) == 1

    def test_ranges_rejected(self):
        for fam, bad in (("path", 1), ("cycle", 2), ("star", 0), ("complete", 1)):
            with pytest.raises(InvalidInputError):
                closed_form_rna(FamilySpec(fam, (bad,)))
        with pytest.raises(InvalidInputError):
            closed_form_rna(FamilySpec("complete_bipartite", (2, 3)))

    def test_agree_with_exact(self):
        cases = (
            [FamilySpec("path", (n,)) for n in range(2, 21)]
            + [FamilySpec("cycle", (n,)) for n in range(3, 21)]
            + [FamilySpec("star", (n,)) for n in range(1, 21)]
            + [FamilySpec("complete", (n,)) for n in range(2, 17)]
        )
        for spec in cases:
            assert rna_exact(build_family(spec)).value == closed_form_rna(spec)


class TestProofLabelings:
    def test_path5(self):
        assert proof_labeling(FamilySpec("path", (5,))) == (1, 3, 5, 2, 4)

    def test_cycle6(self):
        labels = proof_labeling(FamilySpec("cycle", (6,)))
        assert labels == (1, 3, 5, 2, 4, 6)
        s = induce_signs(cycle(6), labels)
        assert s.negative_edges() == {(2, 3), (0, 5)}

    def test_complete_identity(self):
        labels = proof_labeling(FamilySpec("complete", (4,)))
        assert labels == (1, 2, 3, 4)
        assert len(induce_signs(complete(4), labels).negative_edges()) == 4

    def test_attainment_all_families(self):
        cases = (
            [FamilySpec("path", (n,)) for n in range(2, 21)]
            + [FamilySpec("cycle", (n,)) for n in range(3, 21)]
            + [FamilySpec("star", (n,)) for n in range(1, 21)]
            + [FamilySpec("complete", (n,)) for n in range(2, 17)]
        )
        for spec in cases:
            g = build_family(spec)
            s = induce_signs(g, proof_labeling(spec))
            assert len(s.negative_edges()) == closed_form_rna(spec)


class TestHeuristic:
    def test_complete_graphs_exact(self):
        for n in range(2, 17):
            assert rna_heuristic(complete(n)).value == (n // 2) * ((n + 1) // 2)

    def test_p20(self):
        assert rna_heuristic(path(20), seed=1, restarts=32).value == 1

    def test_c30(self):
        assert rna_heuristic(cycle(30), seed=1, restarts=32).value == 2

    def test_deterministic(self):
        g = cycle(12)
        a = rna_heuristic(g, seed=7, restarts=8)
        b = rna_heuristic(g, seed=7, restarts=8)
        assert (a.value, a.witness) == (b.value, b.witness)

    def test_witness_and_sandwich(self):
        rng = random.Random(61)
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(3, 12))
            h = rna_heuristic(g, seed=1, restarts=8)
            spec = sigma_spectrum(g)
            assert negative_edge_count(g, h.witness) == h.value
            assert rna_exact(g).value <= h.value <= spec.max
            assert h.value in spec.values

    def test_input_validation(self):
        with pytest.raises(InvalidInputError):
            rna_heuristic(Graph(1))
        with pytest.raises(InvalidInputError):
            rna_heuristic(path(4), restarts=0)
