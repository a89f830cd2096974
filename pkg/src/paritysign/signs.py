"""Parity labelings, induced edge signs, balance, and realizability.

A labeling is a bijection from vertices onto {1,...,n}; an edge is
positive when its endpoint labels share parity, negative otherwise.  All
sign structure depends only on which vertices receive odd labels, so most
operations work on the odd-label vertex class (a "balanced bipartition"
of size ceil(n/2)) rather than on full labelings.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidInputError, MalformedRecordError
from .graphs import Graph, edge_bit_pairs, parse_graph6, write_graph6

POSITIVE = "+"
NEGATIVE = "-"


class Homogeneity(Enum):
    ALL_POSITIVE = "all-positive"
    ALL_NEGATIVE = "all-negative"
    HETEROGENEOUS = "heterogeneous"
    EDGELESS = "edgeless"


def check_labeling(labels, n):
    """Validate that labels is a bijection of vertices 0..n-1 onto 1..n."""
    labels = tuple(labels)
    if len(labels) != n:
        raise InvalidInputError(f"labeling has length {len(labels)}, expected {n}")
    if sorted(labels) != list(range(1, n + 1)):
        raise InvalidInputError(f"labeling {labels} is not a bijection onto 1..{n}")
    return labels


@dataclass(frozen=True)
class Bipartition:
    """The odd-labeled vertex class; the only data a labeling contributes
    to the induced signs."""

    odd_set: frozenset
    n: int

    def __post_init__(self):
        object.__setattr__(self, "odd_set", frozenset(self.odd_set))
        want = (self.n + 1) // 2
        if len(self.odd_set) != want:
            raise InvalidInputError(
                f"odd class has {len(self.odd_set)} vertices, expected ceil(n/2)={want}"
            )
        for v in self.odd_set:
            if not 0 <= v < self.n:
                raise InvalidInputError(f"vertex {v} outside 0..{self.n - 1}")

    def mask(self):
        m = 0
        for v in self.odd_set:
            m |= 1 << v
        return m

    def sorted_vertices(self):
        return sorted(self.odd_set)


def bipartition_from_mask(mask, n):
    return Bipartition(frozenset(v for v in range(n) if (mask >> v) & 1), n)


@dataclass(frozen=True, eq=True)
class SignedGraph:
    graph: Graph
    signs: dict

    def __post_init__(self):
        if set(self.signs) != self.graph.edges:
            raise InvalidInputError("sign map must cover exactly the edge set")
        for e, s in self.signs.items():
            if s not in (POSITIVE, NEGATIVE):
                raise InvalidInputError(f"sign of edge {e} must be '+' or '-', got {s!r}")

    def sign(self, u, v):
        return self.signs[(u, v) if u < v else (v, u)]

    def negative_edges(self):
        return {e for e, s in self.signs.items() if s == NEGATIVE}

    def positive_edges(self):
        return {e for e, s in self.signs.items() if s == POSITIVE}

    def __hash__(self):
        return hash((self.graph, frozenset(self.signs.items())))


def all_negative(g):
    return SignedGraph(g, {e: NEGATIVE for e in g.edges})


def all_positive(g):
    return SignedGraph(g, {e: POSITIVE for e in g.edges})


def induce_signs(g, labels):
    """Signed graph induced by a labeling: + on same-parity endpoints,
    - on opposite-parity endpoints."""
    labels = check_labeling(labels, g.n)
    signs = {}
    for u, v in g.edges:
        same = (labels[u] - labels[v]) % 2 == 0
        signs[(u, v)] = POSITIVE if same else NEGATIVE
    return SignedGraph(g, signs)


def labeling_to_bipartition(labels, n=None):
    if n is None:
        n = len(labels)
    labels = check_labeling(labels, n)
    return Bipartition(frozenset(v for v in range(n) if labels[v] % 2 == 1), n)


def bipartition_to_labeling(b):
    """Odd labels 1,3,5,... go to the odd class in increasing vertex order;
    even labels 2,4,... to the complement likewise."""
    labels = [0] * b.n
    odd = 1
    for v in b.sorted_vertices():
        labels[v] = odd
        odd += 2
    even = 2
    for v in range(b.n):
        if v not in b.odd_set:
            labels[v] = even
            even += 2
    return tuple(labels)


def negative_edge_count(g, b):
    """Number of edges with exactly one endpoint in the odd class."""
    if b.n != g.n:
        raise InvalidInputError(f"bipartition is on {b.n} vertices, graph on {g.n}")
    mask = b.mask()
    comp = ((1 << g.n) - 1) & ~mask
    total = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        total += (g.adj[v] & comp).bit_count()
        m &= m - 1
    return total


def homogeneity(s):
    if not s.signs:
        return Homogeneity.EDGELESS
    values = set(s.signs.values())
    if values == {POSITIVE}:
        return Homogeneity.ALL_POSITIVE
    if values == {NEGATIVE}:
        return Homogeneity.ALL_NEGATIVE
    return Homogeneity.HETEROGENEOUS


def is_balanced(s):
    """Balance coloring (0/1 per vertex) with positive edges inside classes
    and negative edges across, or None if no such coloring exists.

    Existence is equivalent to every cycle carrying an even number of
    negative edges."""
    g = s.graph
    colors = [-1] * g.n
    for seed in range(g.n):
        if colors[seed] != -1:
            continue
        colors[seed] = 0
        stack = [seed]
        while stack:
            u = stack.pop()
            nb = g.adj[u]
            while nb:
                v = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                want = colors[u] if s.sign(u, v) == POSITIVE else 1 - colors[u]
                if colors[v] == -1:
                    colors[v] = want
                    stack.append(v)
                elif colors[v] != want:
                    return None
    return colors


def _components(g):
    seen = [False] * g.n
    comps = []
    for seed in range(g.n):
        if seen[seed]:
            continue
        comp = []
        stack = [seed]
        seen[seed] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            nb = g.adj[u]
            while nb:
                v = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(comp)
    return comps


def is_parity_realizable(s):
    """A labeling inducing exactly the given signs, or None.

    The signed graph must be balanced, and some choice of balance-coloring
    side per component must put exactly ceil(n/2) vertices into the odd
    class (a subset-sum over component class sizes)."""
    colors = is_balanced(s)
    if colors is None:
        return None
    g = s.graph
    parts = []
    for comp in _components(g):
        side_a = [v for v in comp if colors[v] == 0]
        side_b = [v for v in comp if colors[v] == 1]
        parts.append((side_a, side_b))
    target = (g.n + 1) // 2
    # reachable[i] = odd-class sizes achievable using the first i components
    reachable = [{0}]
    for side_a, side_b in parts:
        prev = reachable[-1]
        reachable.append({t + len(side_a) for t in prev} | {t + len(side_b) for t in prev})
    if target not in reachable[-1]:
        return None
    odd_vertices = []
    need = target
    for i in range(len(parts) - 1, -1, -1):
        side_a, side_b = parts[i]
        if need - len(side_a) in reachable[i]:
            odd_vertices.extend(side_a)
            need -= len(side_a)
        else:
            odd_vertices.extend(side_b)
            need -= len(side_b)
    labels = bipartition_to_labeling(Bipartition(frozenset(odd_vertices), g.n))
    return labels


def all_negative_realizable(g):
    """Whether the all-negative signature on g is induced by some parity
    labeling."""
    return is_parity_realizable(all_negative(g)) is not None


# ---------------------------------------------------------------------------
# Serialization

def labeling_to_text(labels):
    return ",".join(str(x) for x in labels)


def labeling_from_text(text, n):
    try:
        labels = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InvalidInputError(f"labeling {text!r} is not a comma-separated integer list") from None
    return check_labeling(labels, n)


def sign_string(s):
    """Signs as one '+'/'-' per edge, in graph6 edge-bit order."""
    return "".join(s.signs[(i, j)] for i, j in edge_bit_pairs(s.graph.n) if s.graph.has_edge(i, j))


def signed_to_text(s):
    return f"{write_graph6(s.graph)} {sign_string(s)}"


def signed_from_text(text):
    parts = text.split()
    if len(parts) == 1:
        parts.append("")  # edgeless graph: empty sign string
    if len(parts) != 2:
        raise MalformedRecordError(
            f"signed graph record {text!r} must be 'graph6 signstring'"
        )
    g = parse_graph6(parts[0])
    ordered = [(i, j) for i, j in edge_bit_pairs(g.n) if g.has_edge(i, j)]
    if len(parts[1]) != len(ordered):
        raise MalformedRecordError(
            f"sign string has {len(parts[1])} characters, graph has {len(ordered)} edges"
        )
    signs = {}
    for e, ch in zip(ordered, parts[1]):
        if ch not in (POSITIVE, NEGATIVE):
            raise MalformedRecordError(f"bad sign character {ch!r}")
        signs[e] = ch
    return SignedGraph(g, signs)
