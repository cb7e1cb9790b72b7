"""Deterministic graph generators.

All random families draw from ``random.Random(seed)`` (Mersenne Twister),
so a given ``(family, params, seed)`` always yields the same graph.
"""

from __future__ import annotations

import heapq
import math
import random
from itertools import combinations

from .errors import BadParams, InfeasibleDegree, RetryExhausted
from .graph import Graph, build_graph
from .reduction import CnfFormula

__all__ = [
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "petersen_graph",
    "disjoint_union",
    "prufer_to_tree",
    "gen_random_tree",
    "gen_random_regular",
    "gen_gnp",
    "gen_clique_plus_path",
    "gen_random_cnf",
]


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParams("a cycle needs at least 3 vertices")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return build_graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return build_graph(offset, edges)


def prufer_to_tree(seq, n: int) -> Graph:
    if len(seq) != n - 2:
        raise BadParams(f"a Pruefer sequence for {n} vertices has length {n - 2}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise BadParams(f"label {x} outside 0..{n - 1}")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def gen_random_tree(n: int, seed=None) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Pruefer sequence."""
    if n < 1:
        raise BadParams("a tree needs at least one vertex")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = _rng(seed)
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)


def _pair_stubs(n, k, rng):
    """One run of pairing with per-pair rejection; None when it gets stuck."""
    stubs = [v for v in range(n) for _ in range(k)]
    edges = set()
    while stubs:
        for _ in range(64):
            i, j = rng.randrange(len(stubs)), rng.randrange(len(stubs))
            u, v = stubs[i], stubs[j]
            key = (u, v) if u < v else (v, u)
            if u != v and key not in edges:
                break
        else:
            free = sorted(set(stubs))
            if not any((u, v) not in edges for u, v in combinations(free, 2)):
                return None
            continue
        edges.add(key)
        for idx in sorted((i, j), reverse=True):
            stubs[idx] = stubs[-1]
            stubs.pop()
    return edges


def gen_random_regular(n: int, k: int, seed=None, max_tries: int = 1000) -> Graph:
    """Simple ``k``-regular graph by random pairing of degree stubs.

    Pairs that would form a loop or a repeated edge are redrawn; a run that
    is left with no valid pair starts over (at most ``max_tries`` runs).
    """
    if n < 1 or k < 0 or k >= n or (n * k) % 2:
        raise InfeasibleDegree(f"no simple {k}-regular graph on {n} vertices")
    rng = _rng(seed)
    for _ in range(max_tries):
        edges = _pair_stubs(n, k, rng)
        if edges is not None:
            return build_graph(n, edges)
    raise RetryExhausted(f"no simple pairing for n={n}, k={k} after {max_tries} tries")


def gen_gnp(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi ``G(n, p)`` using geometric skips between included pairs.

    Runs in time proportional to ``n + m`` rather than ``n^2``.
    """
    if n < 0 or not 0 <= p <= 1:
        raise BadParams(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    if p == 0 or n < 2:
        return build_graph(max(n, 0), [])
    if p == 1:
        return complete_graph(n)
    rng = _rng(seed)
    log_q = math.log(1.0 - p)
    edges = []
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w, v))
    return build_graph(n, edges)


def gen_clique_plus_path(a: int, b: int) -> Graph:
    """``K_a`` with a path of ``b`` new vertices hanging off clique vertex ``a-1``."""
    if a < 3 or b < 1:
        raise BadParams(f"need a >= 3 and b >= 1, got a={a}, b={b}")
    edges = list(combinations(range(a), 2))
    edges.append((a - 1, a))
    edges += [(i, i + 1) for i in range(a, a + b - 1)]
    return build_graph(a + b, edges)


def gen_random_cnf(num_vars: int, num_clauses: int, seed=None) -> CnfFormula:
    """Random 3-CNF in which every variable occurs at least once.

    Each variable is first placed in a distinct random literal slot; the
    remaining slots get uniformly random variables. Signs are uniform.
    """
    slots = 3 * num_clauses
    if num_vars < 1 or num_clauses < 1 or num_vars > slots:
        raise BadParams(f"cannot use {num_vars} variables in {num_clauses} clauses")
    rng = _rng(seed)
    order = list(range(slots))
    rng.shuffle(order)
    var_at = [0] * slots
    for i, slot in enumerate(order):
        var_at[slot] = i + 1 if i < num_vars else rng.randint(1, num_vars)
    lits = [v if rng.random() < 0.5 else -v for v in var_at]
    return CnfFormula(num_vars, tuple(tuple(lits[3 * j : 3 * j + 3]) for j in range(num_clauses)))
