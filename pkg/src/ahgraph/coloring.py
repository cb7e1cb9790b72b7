"""Degeneracy ordering, greedy colouring and an exact chromatic-number search."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EmptyGraph, LengthMismatch, NotAPermutation, TooLarge
from .graph import Graph, ceil_div

__all__ = [
    "Coloring",
    "DegeneracyOrder",
    "degeneracy_order",
    "greedy_color",
    "exact_coloring",
    "exact_chromatic",
    "validate_coloring",
    "DEFAULT_EXACT_LIMIT",
]

DEFAULT_EXACT_LIMIT = 30


@dataclass(frozen=True)
class Coloring:
    colors: tuple

    @property
    def num_colors(self) -> int:
        return max(self.colors) + 1 if self.colors else 0


@dataclass(frozen=True)
class DegeneracyOrder:
    order: tuple
    degeneracy: int


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """Smallest-last ordering.

    Vertices are peeled off by minimum remaining degree (smallest id on ties);
    the returned order is the reverse of the peeling order, so every vertex has
    at most ``degeneracy`` neighbours before it.
    """
    n = g.n
    if n == 0:
        raise EmptyGraph("degeneracy_order")
    deg = g.degrees()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * n
    peeled = []
    k = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        peeled.append(v)
        k = max(k, d)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    peeled.reverse()
    return DegeneracyOrder(tuple(peeled), k)


def greedy_color(g: Graph, order: Sequence[int]) -> Coloring:
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise NotAPermutation(f"order is not a permutation of 0..{g.n - 1}")
    colors = [-1] * g.n
    for v in order:
        used = {colors[w] for w in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def validate_coloring(g: Graph, c) -> bool:
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise LengthMismatch(f"{len(colors)} colours for {g.n} vertices")
    return all(colors[u] != colors[v] for u, v in g.edges)


def _k_color(g: Graph, k: int) -> Optional[list]:
    """Backtracking k-colouring with DSATUR branching; None if impossible.

    A vertex may only open colour ``used`` (one past the highest colour in
    use), which removes colour-permutation symmetry; in particular the first
    vertex is always coloured 0.
    """
    n = g.n
    adj = g.adj
    colors = [-1] * n
    # forbid[v] is a bitmask of colours held by coloured neighbours
    forbid = [0] * n
    counts = [[0] * k for _ in range(n)]

    def pick():
        best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = bin(forbid[v]).count("1")
            free_deg = sum(1 for w in adj[v] if colors[w] < 0)
            cand = (sat, free_deg, -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def assign(v, c):
        colors[v] = c
        for w in adj[v]:
            counts[w][c] += 1
            forbid[w] |= 1 << c

    def unassign(v, c):
        colors[v] = -1
        for w in adj[v]:
            counts[w][c] -= 1
            if counts[w][c] == 0:
                forbid[w] &= ~(1 << c)

    def search(done, used):
        if done == n:
            return True
        v = pick()
        limit = min(used + 1, k)
        for c in range(limit):
            if forbid[v] >> c & 1:
                continue
            assign(v, c)
            if search(done + 1, max(used, c + 1)):
                return True
            unassign(v, c)
        return False

    return colors if search(0, 0) else None


def exact_coloring(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> Coloring:
    """An optimal colouring, found by trying k upward from the clique lower bound."""
    n = g.n
    if n == 0:
        raise EmptyGraph("exact_chromatic")
    if n > limit:
        raise TooLarge(f"exact chromatic search limited to {limit} vertices, got {n}")
    upper = greedy_color(g, degeneracy_order(g).order)
    lower = ceil_div(n * n, n * n - 2 * g.m)
    for k in range(lower, upper.num_colors):
        found = _k_color(g, k)
        if found is not None:
            return Coloring(tuple(found))
    return upper


def exact_chromatic(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> int:
    return exact_coloring(g, limit).num_colors
