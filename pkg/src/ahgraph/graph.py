"""Immutable simple undirected graphs and exact degree statistics."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DuplicateEdge, EmptyGraph, SelfLoop, VertexOutOfRange

__all__ = [
    "Graph",
    "DegreeStats",
    "build_graph",
    "average_degree",
    "induced_subgraph",
    "cut_size",
    "connected_components",
    "degree_stats",
    "compare_fraction",
    "floor_fraction",
    "ceil_div",
    "is_connected",
    "subset_density",
]


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored canonically as ``(u, v)`` with ``u < v`` in sorted order;
    ``adj[v]`` is the sorted tuple of neighbours of ``v``. Instances are
    immutable and hashable; build them with :func:`build_graph`.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]], adj: Sequence[tuple[int, ...]]):
        # trusted constructor; validation lives in build_graph
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_edges", tuple(edges))
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        a = self._adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    regular_k: Optional[int]


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_list`` and return the normalized :class:`Graph`.

    Self-loops, repeated pairs (in either orientation) and ids outside
    ``0..n-1`` raise; the offending pair is carried on the exception.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange((u, v), n)
        if u == v:
            raise SelfLoop((u, v))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge((u, v))
        seen.add(key)
    return _from_canonical(n, seen)


def _from_canonical(n, edge_set) -> Graph:
    edges = sorted(edge_set)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, edges, [tuple(sorted(a)) for a in adj])


def average_degree(g: Graph) -> Fraction:
    """``2m/n`` as an exact fraction; 0 for the null graph."""
    if g.n == 0:
        return Fraction(0)
    return Fraction(2 * g.m, g.n)


def subset_density(g: Graph, vertices: Iterable[int]) -> Fraction:
    """Edges inside ``vertices`` divided by their count (half the average degree)."""
    s = set(vertices)
    if not s:
        raise EmptyGraph("subset density")
    inside = sum(1 for v in s for w in g.adj[v] if w in s) // 2
    return Fraction(inside, len(s))


def _check_ids(g: Graph, ids) -> set:
    s = set()
    for v in ids:
        v = int(v)
        if not 0 <= v < g.n:
            raise VertexOutOfRange(v, g.n)
        s.add(v)
    return s


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return the subgraph induced by ``keep`` and the id remapping.

    Kept vertices are renumbered in increasing order of their original id, so
    the second element ``old`` satisfies ``old[new_id] == original_id``.
    """
    old = tuple(sorted(_check_ids(g, keep)))
    new_of = {v: i for i, v in enumerate(old)}
    edges = set()
    for u, v in g.edges:
        if u in new_of and v in new_of:
            edges.add((new_of[u], new_of[v]))
    return _from_canonical(len(old), edges), old


def cut_size(g: Graph, s_side: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in ``s_side``."""
    s = _check_ids(g, s_side)
    return sum(1 for u, v in g.edges if (u in s) != (v in s))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise EmptyGraph("degree_stats")
    degs = g.degrees()
    lo, hi = min(degs), max(degs)
    return DegreeStats(lo, hi, lo if lo == hi else None)


def compare_fraction(a: Fraction, b: Fraction) -> int:
    """Three-way exact comparison: -1, 0 or 1 (cross-multiplied, no floats)."""
    a, b = Fraction(a), Fraction(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)


def floor_fraction(a: Fraction) -> int:
    a = Fraction(a)
    return a.numerator // a.denominator


def ceil_div(p: int, q: int) -> int:
    """Exact ``ceil(p / q)`` for integers, ``q > 0``."""
    return -((-p) // q)
