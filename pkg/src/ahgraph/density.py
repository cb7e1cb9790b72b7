"""Maximum average degree and the average-hereditary test.

The densest subgraph is found with Goldberg's min-cut construction. For a
rational guess ``a/b`` every capacity is multiplied by ``b`` so the network
stays integral:

* ``s -> v`` with capacity ``m*b`` for every vertex,
* ``u -> v`` and ``v -> u`` with capacity ``b`` for every edge,
* ``v -> t`` with capacity ``m*b + 2a - b*deg(v)``.

The cut with source side ``{s} | S`` costs ``n*m*b + 2|S|(a - b*|E(S)|/|S|)``,
so some ``S`` is denser than ``a/b`` exactly when the minimum cut is below
``n*m*b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import EmptyGraph, NoEdges, PreconditionError, TooLarge
from .graph import Graph, average_degree, compare_fraction, subset_density
from .maxflow import build_network, max_flow_min_cut

__all__ = [
    "DensestResult",
    "AhVerdict",
    "goldberg_feasible",
    "densest_subgraph",
    "mad",
    "mad_bruteforce",
    "is_average_hereditary",
    "CAPACITY_LIMIT",
]

# capacities must fit a signed 64-bit word for interoperability
CAPACITY_LIMIT = 2**63


@dataclass(frozen=True)
class DensestResult:
    subgraph_vertices: frozenset
    density: Fraction

    @property
    def mad(self) -> Fraction:
        return 2 * self.density


@dataclass(frozen=True)
class AhVerdict:
    is_ah: bool
    witness: Optional[DensestResult] = None

    def __bool__(self):
        return self.is_ah


def goldberg_network(g: Graph, guess: Fraction):
    guess = Fraction(guess)
    a, b = guess.numerator, guess.denominator
    n, m = g.n, g.m
    s, t = n, n + 1
    arcs = []
    for v in range(n):
        arcs.append((s, v, m * b))
    for u, v in g.edges:
        arcs.append((u, v, b))
        arcs.append((v, u, b))
    for v in range(n):
        arcs.append((v, t, m * b + 2 * a - b * g.degree(v)))
    net = build_network(n + 2, arcs)
    assert net.max_capacity() < CAPACITY_LIMIT, "capacity exceeds 64-bit range"
    return net, s, t


def goldberg_feasible(g: Graph, guess) -> tuple[bool, frozenset]:
    """Is there a vertex set of density strictly above ``guess``?

    Returns ``(True, S)`` with such a set ``S`` (the minimal min-cut source
    side without ``s``) or ``(False, frozenset())``.
    """
    if g.m == 0:
        raise NoEdges("goldberg_feasible needs at least one edge")
    guess = Fraction(guess)
    if guess < 0:
        raise PreconditionError("density guess must be non-negative")
    net, s, t = goldberg_network(g, guess)
    cut = max_flow_min_cut(net, s, t)
    if cut.flow_value < g.n * g.m * guess.denominator:
        return True, cut.source_side - {s}
    return False, frozenset()


def _grid_ceil(x: Fraction, scale: int) -> Fraction:
    """Smallest multiple of ``1/scale`` that is >= ``x``."""
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


def densest_subgraph(g: Graph) -> DensestResult:
    """Exact densest subgraph.

    Binary search on the density keeps ``lo`` equal to the density of the best
    set found so far and ``hi`` above every achievable density. Midpoints are
    rounded up onto the grid ``1/(n(n-1))`` so scaled capacities stay below
    ``m*n^2``. Each round also tests ``lo`` itself: an infeasible answer there
    certifies the current set as optimal, which ends most searches after one
    or two flow solves. Otherwise the loop stops once ``hi - lo < 1/(n(n-1))``,
    the minimum gap between two distinct densities ``e/s`` with ``s <= n``.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("densest_subgraph")
    if g.m == 0:
        return DensestResult(frozenset([0]), Fraction(0))

    scale = n * (n - 1)
    gap = Fraction(1, scale)
    best = frozenset(range(n))
    lo = Fraction(g.m, n)
    hi = Fraction(n - 1, 2)
    while True:
        feasible, s_side = goldberg_feasible(g, lo)
        if not feasible:
            break
        best, lo = s_side, subset_density(g, s_side)
        if hi - lo < gap:
            break
        mid = _grid_ceil((lo + hi) * Fraction(1, 2), scale)
        if mid >= hi:
            continue
        feasible, s_side = goldberg_feasible(g, mid)
        if feasible:
            best, lo = s_side, subset_density(g, s_side)
            if hi - lo < gap:
                break
        else:
            hi = mid
    return DensestResult(best, subset_density(g, best))


def mad(g: Graph) -> Fraction:
    """Maximum average degree, ``2 * max |E(S)|/|S|``."""
    return densest_subgraph(g).mad


def mad_bruteforce(g: Graph) -> DensestResult:
    """Enumerate every nonempty vertex subset (n <= 20).

    Ties resolve to the lexicographically smallest sorted vertex tuple.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("mad_bruteforce")
    if n > 20:
        raise TooLarge(f"mad_bruteforce is limited to 20 vertices, got {n}")
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
    best_set, best_e, best_s = (0,), 0, 1
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            sel = 0
            for v in combo:
                sel |= 1 << v
            e = sum(bin(masks[v] & sel).count("1") for v in combo)
            lhs, rhs = e * best_s, best_e * size
            if lhs > rhs or (lhs == rhs and combo < best_set):
                best_set, best_e, best_s = combo, e, size
    return DensestResult(frozenset(best_set), Fraction(best_e, best_s))


def is_average_hereditary(g: Graph) -> AhVerdict:
    """Decide whether no induced subgraph beats the whole graph's average degree.

    This holds exactly when the average degree equals the maximum average
    degree. The null graph is vacuously average hereditary.
    """
    if g.n == 0:
        return AhVerdict(True)
    res = densest_subgraph(g)
    if compare_fraction(res.mad, average_degree(g)) == 0:
        return AhVerdict(True)
    return AhVerdict(False, res)
