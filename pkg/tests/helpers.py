"""Independent oracles shared by the tests.

These deliberately avoid the bipartition machinery under test: the
labeling oracle walks all n! bijections through induce_signs, and the
subset oracle walks all ceil(n/2)-subsets with a direct edge count.
"""

import random
from itertools import combinations, permutations

from paritysign.graphs import Graph
from paritysign.signs import induce_signs


def negative_count_of_labeling(g, labels):
    return sum(1 for e, s in induce_signs(g, labels).signs.items() if s == "-")


def labeling_oracle_counts(g):
    """Set of negative-edge counts over all n! labelings, via induce_signs."""
    return {
        negative_count_of_labeling(g, perm)
        for perm in permutations(range(1, g.n + 1))
    }


def labeling_oracle_min(g):
    return min(labeling_oracle_counts(g))


def subset_oracle(g):
    """(min value, lex-smallest witness subset, all values) by direct
    enumeration of ceil(n/2)-subsets."""
    k = (g.n + 1) // 2
    best = None
    best_subset = None
    values = set()
    for subset in combinations(range(g.n), k):
        inside = set(subset)
        val = sum(1 for u, v in g.edges if (u in inside) != (v in inside))
        values.add(val)
        if best is None or val < best or (val == best and list(subset) < best_subset):
            best = val
            best_subset = list(subset)
    return best, best_subset, values


def random_graph(rng, n, p=0.5):
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(rng, n, p=0.4):
    from paritysign.graphs import is_connected

    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def random_labeling(rng, n):
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return tuple(labels)
