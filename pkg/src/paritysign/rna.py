"""Exact and heuristic computation of the rna number (minimum negative
edges over parity labelings) and the adhika number (its positive-edge
complement), plus the closed forms and explicit proof labelings for the
standard families.

The search space is the C(n, ceil(n/2)) balanced bipartitions rather than
the n! labelings: the induced signs depend only on which vertices get odd
labels, and the negative edges are exactly the cut of that class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernels
from .errors import CapacityError, InvalidInputError
from .graphs import FamilySpec, write_graph6
from .signs import Bipartition, bipartition_from_mask

DEFAULT_EXACT_LIMIT = 24
DEFAULT_RESTARTS = 32
DEFAULT_SEED = 1


@dataclass(frozen=True)
class RnaResult:
    value: int
    witness: Bipartition
    method: str  # "exact" | "heuristic"
    examined: int  # bipartitions examined (exact) / cut evaluations (heuristic)


@dataclass(frozen=True)
class SpectrumReport:
    """All negative-edge counts achievable over parity labelings."""

    values: tuple

    @property
    def min(self):
        return self.values[0]

    @property
    def max(self):
        return self.values[-1]

    @property
    def singleton(self):
        return len(self.values) == 1


def _check_limit(g, limit):
    if limit is None:
        limit = DEFAULT_EXACT_LIMIT
    if g.n > limit:
        raise CapacityError(
            f"n={g.n} exceeds the exact-size limit {limit}; "
            "use rna_heuristic or raise the limit"
        )


def rna_exact(g, limit=None):
    """Minimum negative-edge count over all balanced bipartitions, with a
    witness.  Ties break to the lexicographically smallest odd class."""
    _check_limit(g, limit)
    value, mask, examined = kernels.min_balanced_cut(g.adj, g.n)
    return RnaResult(value, bipartition_from_mask(mask, g.n), "exact", examined)


def sigma_spectrum(g, limit=None):
    """Every achievable negative-edge count, over all balanced bipartitions."""
    _check_limit(g, limit)
    return SpectrumReport(tuple(kernels.cut_spectrum(g.adj, g.n)))


def adhika(g, limit=None):
    """Largest number of positive edges over parity labelings: |E| - rna."""
    return g.m - rna_exact(g, limit).value


def _mask_lex_smaller(a, b):
    d = a ^ b
    if d == 0:
        return False
    return bool(a & (d & -d))


def rna_heuristic(g, seed=DEFAULT_SEED, restarts=DEFAULT_RESTARTS):
    """Seeded multi-restart local search over balanced bipartitions.

    Each restart runs a best-improvement swap descent (class sizes fixed)
    from a random ceil(n/2)-subset.  The result is an upper bound on the
    rna number and is deterministic for fixed (seed, restarts).
    """
    if g.n < 2:
        raise InvalidInputError("heuristic requires n >= 2")
    if restarts < 1:
        raise InvalidInputError("restarts must be >= 1")
    rng = random.Random(seed)
    k = (g.n + 1) // 2
    best = None
    best_mask = 0
    evals = 0
    for _ in range(restarts):
        start = 0
        for v in rng.sample(range(g.n), k):
            start |= 1 << v
        value, mask, e = kernels.swap_descent(g.adj, g.n, start)
        evals += e
        if best is None or value < best:
            best, best_mask = value, mask
        elif value == best and _mask_lex_smaller(mask, best_mask):
            best_mask = mask
    return RnaResult(best, bipartition_from_mask(best_mask, g.n), "heuristic", evals)


# ---------------------------------------------------------------------------
# Closed forms and proof labelings for the standard families

def closed_form_rna(spec):
    """The published formula value for path, cycle, star, or complete."""
    fam, params = spec.family, spec.params
    if fam == "path":
        (n,) = params
        if n < 2:
            raise InvalidInputError("closed form for paths requires n >= 2")
        return 1
    if fam == "cycle":
        (n,) = params
        if n < 3:
            raise InvalidInputError("closed form for cycles requires n >= 3")
        return 2
    if fam == "star":
        (n,) = params
        if n < 1:
            raise InvalidInputError("closed form for stars requires >= 1 leaf")
        return (n + 1) // 2
    if fam == "complete":
        (n,) = params
        if n < 2:
            raise InvalidInputError("closed form for complete graphs requires n >= 2")
        return (n // 2) * ((n + 1) // 2)
    raise InvalidInputError(
        f"no closed form for family {spec.family!r}; "
        "supported: path, cycle, star, complete"
    )


def proof_labeling(spec):
    """The explicit optimal labeling used to establish each closed form."""
    fam, params = spec.family, spec.params
    closed_form_rna(spec)  # validates family and range
    (n,) = params
    if fam in ("path", "cycle"):
        # odd labels first along the path/cycle, then the even tail
        half = (n + 1) // 2
        labels = []
        for i in range(1, n + 1):
            if i <= half:
                labels.append(2 * i - 1)
            elif n % 2 == 1:
                labels.append(2 * i - (n + 1))
            else:
                labels.append(2 * i - n)
        return tuple(labels)
    if fam == "complete":
        return tuple(range(1, n + 1))
    # star: odd center (label 1), leaves take 2..n+1 in vertex order
    return tuple(range(1, n + 2))


def to_report(g, result=None, spectrum=None, seed=None):
    """Flat record for serialization; every report echoes the graph6."""
    rec = {
        "graph6": write_graph6(g),
        "n": g.n,
        "m": g.m,
    }
    if result is not None:
        rec["sigma_minus"] = result.value
        rec["sigma_plus"] = g.m - result.value
        rec["witness"] = result.witness.sorted_vertices()
        rec["method"] = result.method
    if spectrum is not None:
        rec["spectrum"] = list(spectrum.values)
    if seed is not None:
        rec["seed"] = seed
    return rec
