"""Machine checks for every published claim at desk scale, plus the
singleton-spectrum conjecture scan.

Each check either passes or fails with a concrete witness that can be
re-verified through the public operations of the other modules.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import CapacityError, InvalidInputError
from .graphs import (
    Graph,
    bridge_join,
    complete,
    corona,
    cycle,
    disjoint_union,
    enumerate_connected,
    is_connected,
    path,
    star,
    write_graph6,
)
from .rna import closed_form_rna, rna_exact, sigma_spectrum
from .signs import (
    NEGATIVE,
    POSITIVE,
    SignedGraph,
    all_negative,
    all_positive,
    all_negative_realizable,
    is_parity_realizable,
    signed_to_text,
)
from .graphs import FamilySpec


@dataclass
class TheoremCheck:
    id: str
    scope: str
    status: str  # "pass" | "fail"
    witness: dict | None = None


@dataclass
class ConjectureRecord:
    graph6: str
    n: int
    m: int
    spectrum: object  # SpectrumReport
    singleton: bool
    classification: str  # "complete" | "odd_star" | "other"


def is_star_graph(g):
    """True for K_{1,k}, k >= 1 (some vertex adjacent to all others, rest
    pendant)."""
    if g.n < 2 or g.m != g.n - 1:
        return False
    degs = sorted(g.degree(v) for v in range(g.n))
    if g.n == 2:
        return degs == [1, 1]
    return degs[-1] == g.n - 1 and all(d == 1 for d in degs[:-1])


def tree_filter(stream):
    """Pass exactly the connected acyclic graphs."""
    for g in stream:
        if g.m == g.n - 1 and is_connected(g):
            yield g


def enumerate_trees(n):
    """Non-isomorphic trees on n vertices, by leaf augmentation from K_1."""
    if n < 1:
        raise InvalidInputError("tree enumeration requires n >= 1")
    reps = [Graph(1)]
    for size in range(2, n + 1):
        seen = {}
        for t in reps:
            for v in range(t.n):
                g = Graph(t.n + 1, list(t.edges) + [(v, t.n)])
                key = kernels.canonical_bits(g.adj, g.n)
                if key not in seen:
                    seen[key] = g
        reps = [seen[k] for k in sorted(seen)]
    return reps


# ---------------------------------------------------------------------------
# Theorem suite

def _graph_witness(g, **extra):
    w = {"graph6": write_graph6(g)}
    w.update(extra)
    return w


def _check_negative_cycles(max_n):
    scope = f"cycles C_3..C_{2 * max_n}"
    for k in range(3, 2 * max_n + 1):
        got = all_negative_realizable(cycle(k))
        want = k % 2 == 0
        if got != want:
            return scope, _graph_witness(cycle(k), n=k, realizable=got, expected=want)
    return scope, None


def _check_at_least_one_negative(max_n):
    bound = min(max_n, 6)
    scope = f"all connected graphs, 2 <= n <= {bound}"
    for n in range(2, bound + 1):
        for g in enumerate_connected(n):
            r = rna_exact(g)
            if r.value < 1:
                return scope, _graph_witness(g, sigma_minus=r.value)
    return scope, None


def _check_subsignedgraph_counterexample(max_n):
    # all-negative C_4 o K_1 is realizable; its connected subsignedgraph
    # all-negative K_{1,3} is not
    big = all_negative(corona(cycle(4), complete(1)))
    sub = all_negative(star(3))
    scope = "stored counterexample pair (C_4 corona K_1, K_{1,3})"
    ok = is_parity_realizable(big) is not None and is_parity_realizable(sub) is None
    if ok:
        return scope, None
    return scope, {
        "supergraph": signed_to_text(big),
        "subsignedgraph": signed_to_text(sub),
        "supergraph_realizable": is_parity_realizable(big) is not None,
        "subsignedgraph_realizable": is_parity_realizable(sub) is not None,
    }


def _check_balanced_cycles(max_n):
    scope = f"cycle spectra C_3..C_{2 * max_n}"
    for k in range(3, 2 * max_n + 1):
        spec = sigma_spectrum(cycle(k))
        odd = [v for v in spec.values if v % 2 == 1]
        if odd:
            return scope, _graph_witness(cycle(k), odd_counts=odd)
    return scope, None


def _check_positive_disconnected(max_n):
    bound = min(max_n, 6)
    scope = f"all-positive signatures: connected graphs n <= {bound} fail, 2K_2 succeeds"
    for n in range(2, bound + 1):
        for g in enumerate_connected(n):
            labels = is_parity_realizable(all_positive(g))
            if labels is not None:
                return scope, _graph_witness(g, labeling=list(labels))
    two_k2 = disjoint_union(path(2), path(2))
    if is_parity_realizable(all_positive(two_k2)) is None:
        return scope, _graph_witness(two_k2, note="all-positive 2K_2 should be realizable")
    return scope, None


def _check_family_formula(family, lo, max_n):
    scope = f"{family} formula, parameters {lo}..{max_n}"
    for n in range(lo, max_n + 1):
        spec = FamilySpec(family, (n,))
        want = closed_form_rna(spec)
        if family == "path":
            g = path(n)
        elif family == "cycle":
            g = cycle(n)
        elif family == "star":
            g = star(n)
        else:
            g = complete(n)
        got = rna_exact(g).value
        if got != want:
            return scope, _graph_witness(g, parameter=n, got=got, expected=want)
    return scope, None


def _check_tree_singleton(max_n):
    bound = max_n + 1
    scope = f"trees with 2 <= n <= {bound}"
    for n in range(2, bound + 1):
        for t in enumerate_trees(n):
            spec = sigma_spectrum(t)
            want = is_star_graph(t) and (t.n - 1) % 2 == 1
            if spec.singleton != want:
                return scope, _graph_witness(
                    t, spectrum=list(spec.values), is_odd_star=want
                )
    return scope, None


def _check_corona_cycle(max_n):
    bound = max_n + 2
    scope = f"C_n corona K_1, 3 <= n <= {bound}"
    for n in range(3, bound + 1):
        g = corona(cycle(n), complete(1))
        got = all_negative_realizable(g)
        want = n % 2 == 0
        if got != want:
            return scope, _graph_witness(g, parameter=n, realizable=got, expected=want)
    return scope, None


def _check_corona_complete(max_n):
    bound = max_n + 2
    scope = f"K_n corona K_1, 1 <= n <= {bound}"
    for n in range(1, bound + 1):
        g = corona(complete(n), complete(1))
        got = all_negative_realizable(g)
        want = n <= 2
        if got != want:
            return scope, _graph_witness(g, parameter=n, realizable=got, expected=want)
    return scope, None


def _bridge_signature(g1, g2, bridge_sign):
    g = bridge_join(g1, 0, g2, 0)
    signs = {e: NEGATIVE for e in g.edges}
    signs[(0, g1.n)] = bridge_sign
    return SignedGraph(g, signs)


def _check_bridge(max_n):
    # Even-order parts leave both bridge signs realizable; for odd-order
    # parts (e.g. P_3 + P_3) only the sign matching the construction's
    # endpoint-parity choice works, so those get the weaker check.
    both_sign_pairs = [
        (path(4), path(4)),
        (cycle(4), cycle(6)),
        (path(2), cycle(4)),
    ]
    either_sign_pairs = [
        (path(3), path(3)),
        (path(3), cycle(4)),
        (path(5), path(3)),
    ]
    scope = "sample all-negative-realizable pairs joined by a +/- bridge"
    for g1, g2 in both_sign_pairs:
        for bridge_sign in (POSITIVE, NEGATIVE):
            s = _bridge_signature(g1, g2, bridge_sign)
            if is_parity_realizable(s) is None:
                return scope, {
                    "signed": signed_to_text(s),
                    "bridge_sign": bridge_sign,
                }
    for g1, g2 in either_sign_pairs:
        if all(
            is_parity_realizable(_bridge_signature(g1, g2, sgn)) is None
            for sgn in (POSITIVE, NEGATIVE)
        ):
            return scope, {
                "signed": signed_to_text(_bridge_signature(g1, g2, NEGATIVE)),
                "bridge_sign": "either",
            }
    return scope, None


_CHECKS = [
    ("negc", _check_negative_cycles),
    ("nont", _check_at_least_one_negative),
    ("subsigned", _check_subsignedgraph_counterexample),
    ("balanced_cycles", _check_balanced_cycles),
    ("disconnected_positive", _check_positive_disconnected),
    ("path_prop", lambda m: _check_family_formula("path", 2, max(m, 2))),
    ("cycle_prop", lambda m: _check_family_formula("cycle", 3, max(m, 3))),
    ("star_prop", lambda m: _check_family_formula("star", 1, max(m, 1))),
    ("complete_prop", lambda m: _check_family_formula("complete", 2, max(m, 2))),
    ("tree_star", _check_tree_singleton),
    ("corona_cycle", _check_corona_cycle),
    ("corona_complete", _check_corona_complete),
    ("bridge", _check_bridge),
]


def verify_theorems(max_n=6):
    """Run the full theorem suite; one TheoremCheck per published claim."""
    if max_n < 3:
        raise InvalidInputError("verify requires max_n >= 3")
    out = []
    for check_id, fn in _CHECKS:
        try:
            scope, witness = fn(max_n)
        except CapacityError as exc:
            raise CapacityError(f"[{check_id}] {exc}") from exc
        out.append(
            TheoremCheck(
                id=check_id,
                scope=scope,
                status="pass" if witness is None else "fail",
                witness=witness,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Conjecture scan

def classify(g):
    if g.m == g.n * (g.n - 1) // 2:
        return "complete"
    if is_star_graph(g) and (g.n - 1) % 2 == 1:
        return "odd_star"
    return "other"


def conjecture_scan(graphs, limit=None):
    """Spectrum of every connected input graph, with singleton-spectrum
    graphs partitioned into complete / odd-star / other.

    Returns (records, summary).  Records are sorted by (n, graph6).  The
    complete and odd_star buckets are predicate-based and may overlap (K_2
    is both K_2 and K_{1,1}); "other" holds singletons in neither, and a
    nonempty "other" is a conjecture counterexample candidate.  Graphs
    that are not connected are skipped and reported in the summary.
    """
    records = []
    skipped = []
    for g in graphs:
        g6 = write_graph6(g)
        if not is_connected(g):
            skipped.append({"graph6": g6, "reason": "not connected"})
            continue
        spec = sigma_spectrum(g, limit)
        records.append(
            ConjectureRecord(
                graph6=g6,
                n=g.n,
                m=g.m,
                spectrum=spec,
                singleton=spec.singleton,
                classification=classify(g),
            )
        )
    records.sort(key=lambda r: (r.n, r.graph6))
    singles = [r for r in records if r.singleton]
    summary = {
        "graphs": len(records),
        "singletons": len(singles),
        "complete": [r.graph6 for r in singles if r.m == r.n * (r.n - 1) // 2],
        "odd_star": [r.graph6 for r in singles if r.classification == "odd_star"
                     or (r.n == 2 and r.m == 1)],
        "other": [r.graph6 for r in singles if r.classification == "other"],
        "skipped": skipped,
    }
    return records, summary
