"""Simple undirected graphs: standard families, corona and bridge
constructions, graph6 serialization, and isomorphism-free enumeration of
small connected graphs."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import InvalidInputError, MalformedRecordError, UnsupportedSizeError

GRAPH6_HEADER = ">>graph6<<"
ENUMERATION_MAX_N = 6


class Graph:
    """Immutable simple graph on vertices 0..n-1.

    Adjacency is one bitmask per vertex: bit v of adj[u] is set iff {u,v}
    is an edge.  Instances are treated as immutable; all operations build
    new graphs.
    """

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or n < 0:
            raise InvalidInputError("vertex count must be a non-negative integer")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"loop at vertex {u} not allowed (simple graphs only)")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            normalized.add((u, v) if u < v else (v, u))
        adj = [0] * n
        for u, v in normalized:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(normalized)
        self.adj = tuple(adj)

    @property
    def m(self):
        return len(self.edges)

    def degree(self, v):
        return self.adj[v].bit_count()

    def has_edge(self, u, v):
        return (self.adj[u] >> v) & 1 == 1

    def sorted_edges(self):
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Standard families

def path(n):
    if n < 1:
        raise InvalidInputError("path requires n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise InvalidInputError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    """K_{1,leaves}: vertex 0 is the center, leaves at 1..leaves."""
    if leaves < 1:
        raise InvalidInputError("star requires at least 1 leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n):
    if n < 1:
        raise InvalidInputError("complete graph requires n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise InvalidInputError("complete bipartite graph requires a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def corona(base, satellite):
    """Corona product: one copy of `base` plus base.n copies of `satellite`,
    copy i fully joined to vertex i of the base.

    Base vertices keep indices 0..base.n-1; copy i occupies the contiguous
    block starting at base.n + i*satellite.n.
    """
    if base.n < 1:
        raise InvalidInputError("corona base must have at least one vertex")
    j, k = base.n, satellite.n
    edges = list(base.edges)
    for i in range(j):
        off = j + i * k
        edges.extend((off + u, off + v) for u, v in satellite.edges)
        edges.extend((i, off + t) for t in range(k))
    return Graph(j * (1 + k), edges)


def disjoint_union(g1, g2):
    edges = list(g1.edges) + [(g1.n + u, g1.n + v) for u, v in g2.edges]
    return Graph(g1.n + g2.n, edges)


def bridge_join(g1, u, g2, v):
    """Disjoint union of g1 and g2 plus the single edge {u, g1.n + v}."""
    if not 0 <= u < g1.n:
        raise InvalidInputError(f"bridge endpoint {u} outside 0..{g1.n - 1}")
    if not 0 <= v < g2.n:
        raise InvalidInputError(f"bridge endpoint {v} outside 0..{g2.n - 1}")
    g = disjoint_union(g1, g2)
    return Graph(g.n, list(g.edges) + [(u, g1.n + v)])


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple


_FAMILY_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "corona_cycle_k1": 1,
    "corona_complete_k1": 1,
}


def build_family(spec):
    if spec.family not in _FAMILY_ARITY:
        raise InvalidInputError(
            f"unknown family {spec.family!r}; expected one of {sorted(_FAMILY_ARITY)}"
        )
    if len(spec.params) != _FAMILY_ARITY[spec.family]:
        raise InvalidInputError(
            f"family {spec.family!r} takes {_FAMILY_ARITY[spec.family]} parameter(s), "
            f"got {len(spec.params)}"
        )
    if spec.family == "path":
        return path(spec.params[0])
    if spec.family == "cycle":
        return cycle(spec.params[0])
    if spec.family == "star":
        return star(spec.params[0])
    if spec.family == "complete":
        return complete(spec.params[0])
    if spec.family == "complete_bipartite":
        return complete_bipartite(*spec.params)
    if spec.family == "corona_cycle_k1":
        return corona(cycle(spec.params[0]), complete(1))
    return corona(complete(spec.params[0]), complete(1))


def parse_family(text):
    """Parse 'name:4' or 'complete_bipartite:2,3' into a FamilySpec."""
    name, sep, rest = text.partition(":")
    if not sep or not rest:
        raise InvalidInputError(f"family spec {text!r} must look like 'name:params'")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise InvalidInputError(f"non-integer parameter in family spec {text!r}") from None
    return FamilySpec(name, params)


# ---------------------------------------------------------------------------
# graph6 codec (single-byte size form, n <= 62)

def edge_bit_pairs(n):
    """Upper-triangle pairs in graph6 column order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def write_graph6(g):
    if g.n > 62:
        raise UnsupportedSizeError(f"graph6 writer supports n <= 62, got n={g.n}")
    pairs = edge_bit_pairs(g.n)
    out = [chr(63 + g.n)]
    group = 0
    nbits = 0
    for i, j in pairs:
        group = (group << 1) | ((g.adj[i] >> j) & 1)
        nbits += 1
        if nbits == 6:
            out.append(chr(63 + group))
            group = 0
            nbits = 0
    if nbits:
        out.append(chr(63 + (group << (6 - nbits))))
    return "".join(out)


def parse_graph6(text):
    """Parse one graph6 record (optional '>>graph6<<' header allowed)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    record = text.strip()
    if record.startswith(GRAPH6_HEADER):
        record = record[len(GRAPH6_HEADER):]
    if not record:
        raise MalformedRecordError("empty graph6 record")
    for ch in record:
        if not 63 <= ord(ch) <= 126:
            raise MalformedRecordError(
                f"byte {ord(ch)} outside the graph6 range [63,126] in record {record!r}"
            )
    n = ord(record[0]) - 63
    if n == 63:
        raise UnsupportedSizeError(
            f"multi-byte graph6 size form (n >= 63) not supported: record {record!r}"
        )
    mbits = n * (n - 1) // 2
    body = record[1:]
    expected = (mbits + 5) // 6
    if len(body) != expected:
        raise MalformedRecordError(
            f"graph6 record {record!r} has {len(body)} body bytes, expected {expected} for n={n}"
        )
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    total = 6 * len(body)
    pad = total - mbits
    if pad and bits & ((1 << pad) - 1):
        raise MalformedRecordError(f"nonzero pad bits in graph6 record {record!r}")
    pairs = edge_bit_pairs(n)
    edges = [pairs[k] for k in range(mbits) if (bits >> (total - 1 - k)) & 1]
    return Graph(n, edges)


def read_graph6_file(path_):
    """Yield (line_number, raw_record) for nonempty lines of a graph6 file."""
    with open(path_, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            record = line.strip()
            if record:
                yield lineno, record


def load_graph6(path_):
    """Parse every record of a graph6 file; raises on the first bad record."""
    return [parse_graph6(record) for _, record in read_graph6_file(path_)]


# ---------------------------------------------------------------------------
# Connectivity, bipartiteness, enumeration

def is_connected(g):
    """True iff one traversal from vertex 0 reaches all vertices
    (vacuously true for n <= 1)."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            nxt |= g.adj[v]
            f &= f - 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_bipartite(g):
    """A proper 2-coloring (list of 0/1 per vertex, per component), or None
    if some component contains an odd cycle."""
    colors = [-1] * g.n
    for s in range(g.n):
        if colors[s] != -1:
            continue
        colors[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            nb = g.adj[u]
            while nb:
                v = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if colors[v] == -1:
                    colors[v] = 1 - colors[u]
                    stack.append(v)
                elif colors[v] == colors[u]:
                    return None
    return colors


def canonical_key(g):
    """Canonical form: lexicographically smallest upper-triangle bitstring
    over all vertex permutations, packed MSB-first."""
    return kernels.canonical_bits(g.adj, g.n)


def graph_from_packed(bits, n):
    pairs = edge_bit_pairs(n)
    m = len(pairs)
    return Graph(n, [pairs[k] for k in range(m) if (bits >> (m - 1 - k)) & 1])


def enumerate_connected(n):
    """One representative per isomorphism class of connected simple graphs
    on n vertices, sorted by canonical bitstring.  Built in for n <= 6;
    larger orders must be ingested from graph6 files."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise UnsupportedSizeError(
            f"built-in enumeration supports 1 <= n <= {ENUMERATION_MAX_N}; "
            "ingest externally generated graph6 files for larger n"
        )
    pairs = edge_bit_pairs(n)
    m = len(pairs)
    connected_packed = []
    for bits in range(1 << m):
        adj = [0] * n
        for k in range(m):
            if (bits >> (m - 1 - k)) & 1:
                i, j = pairs[k]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        # inline connectivity over masks
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                nxt |= adj[v]
                f &= f - 1
            frontier = nxt & ~seen
            seen |= nxt
        if seen == (1 << n) - 1:
            connected_packed.append(bits)
    canon = kernels.canonical_bits_many(connected_packed, n)
    for bits in sorted(set(canon)):
        yield graph_from_packed(bits, n)
