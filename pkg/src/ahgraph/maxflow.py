"""Exact integer max-flow / min-cut (Dinic's algorithm).

Arcs are stored in paired slots: arc ``2i`` is the i-th input arc and
``2i + 1`` its residual reverse. Capacities are Python ints, so there is no
overflow; callers that care about a fixed-width bound check it themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidArc, SourceEqualsSink

__all__ = ["FlowNetwork", "CutResult", "build_network", "max_flow_min_cut"]


@dataclass(frozen=True)
class CutResult:
    flow_value: int
    source_side: frozenset


class FlowNetwork:
    def __init__(self, nodes: int):
        self.nodes = nodes
        self._to: list[int] = []
        self._cap: list[int] = []  # original capacity per slot (0 for reverse slots)
        self._res: list[int] = []  # residual capacity per slot
        self._adj: list[list[int]] = [[] for _ in range(nodes)]

    def add_arc(self, u: int, v: int, cap: int) -> int:
        if not (0 <= u < self.nodes and 0 <= v < self.nodes):
            raise InvalidArc(f"arc ({u}, {v}) references a node outside 0..{self.nodes - 1}")
        if isinstance(cap, bool) or not isinstance(cap, int):
            raise InvalidArc(f"arc ({u}, {v}) capacity {cap!r} is not an integer")
        if cap < 0:
            raise InvalidArc(f"arc ({u}, {v}) has negative capacity {cap}")
        e = len(self._to)
        self._to += (v, u)
        self._cap += (cap, 0)
        self._res += (cap, 0)
        self._adj[u].append(e)
        self._adj[v].append(e + 1)
        return e // 2

    @property
    def num_arcs(self) -> int:
        return len(self._to) // 2

    def arcs(self) -> list[tuple[int, int, int]]:
        to = self._to
        return [(to[2 * i + 1], to[2 * i], self._cap[2 * i]) for i in range(self.num_arcs)]

    def arc_flows(self) -> list[int]:
        """Flow on each input arc after the last solve."""
        return [self._cap[2 * i] - self._res[2 * i] for i in range(self.num_arcs)]

    def max_capacity(self) -> int:
        return max(self._cap, default=0)

    def reset(self) -> None:
        self._res = list(self._cap)

    def _solve(self, s: int, t: int) -> int:
        to, res, adj = self._to, self._res, self._adj
        n = self.nodes
        flow = 0
        while True:
            level = [-1] * n
            level[s] = 0
            queue = [s]
            for v in queue:
                nxt = level[v] + 1
                for e in adj[v]:
                    w = to[e]
                    if res[e] and level[w] < 0:
                        level[w] = nxt
                        queue.append(w)
            if level[t] < 0:
                return flow

            it = [0] * n
            path: list[int] = []
            v = s
            while True:
                if v == t:
                    push = min(res[e] for e in path)
                    cut_at = -1
                    for k, e in enumerate(path):
                        res[e] -= push
                        res[e ^ 1] += push
                        if cut_at < 0 and res[e] == 0:
                            cut_at = k
                    flow += push
                    del path[cut_at:]
                    v = to[path[-1]] if path else s
                    continue
                a = adj[v]
                i = it[v]
                lv = level[v] + 1
                while i < len(a):
                    e = a[i]
                    if res[e] and level[to[e]] == lv:
                        break
                    i += 1
                it[v] = i
                if i < len(a):
                    e = a[i]
                    path.append(e)
                    v = to[e]
                    continue
                # dead end: prune v from the level graph and retreat
                if v == s:
                    break
                level[v] = -1
                e = path.pop()
                v = to[e ^ 1]
                it[v] += 1

    def _reachable(self, s: int) -> frozenset:
        to, res, adj = self._to, self._res, self._adj
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for e in adj[v]:
                w = to[e]
                if res[e] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)


def build_network(nodes: int, arcs: Iterable[Sequence[int]]) -> FlowNetwork:
    if nodes < 0:
        raise InvalidArc("node count must be non-negative")
    net = FlowNetwork(nodes)
    for arc in arcs:
        u, v, cap = arc
        net.add_arc(u, v, cap)
    return net


def max_flow_min_cut(net: FlowNetwork, s: int, t: int) -> CutResult:
    """Solve from scratch and return the flow value with the minimal source side.

    The source side is the set of nodes reachable from ``s`` in the final
    residual graph, which is the smallest source side over all minimum cuts.
    """
    if s == t:
        raise SourceEqualsSink(f"source and sink are both node {s}")
    for x in (s, t):
        if not 0 <= x < net.nodes:
            raise InvalidArc(f"terminal {x} outside 0..{net.nodes - 1}")
    net.reset()
    value = net._solve(s, t)
    side = net._reachable(s)
    to, cap = net._to, net._cap
    crossing = sum(
        cap[e] for e in range(0, len(to), 2) if to[e ^ 1] in side and to[e] not in side
    )
    assert crossing == value, "max-flow/min-cut mismatch"
    return CutResult(value, side)
