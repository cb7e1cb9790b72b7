"""Chromatic-number bounds and the comparison report."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .coloring import DEFAULT_EXACT_LIMIT, degeneracy_order, exact_chromatic, greedy_color
from .density import densest_subgraph, is_average_hereditary
from .errors import EmptyGraph
from .graph import (
    Graph,
    average_degree,
    ceil_div,
    compare_fraction,
    connected_components,
    floor_fraction,
    induced_subgraph,
)

__all__ = [
    "BoundsReport",
    "REPORT_FIELDS",
    "bound_mad",
    "bound_delta",
    "bound_brooks",
    "bound_soto",
    "soto_value",
    "lower_clique",
    "exact_case",
    "bounds_report",
]


def _nonempty(g: Graph, what: str) -> None:
    if g.n == 0:
        raise EmptyGraph(what)


def bound_mad(g: Graph, mad_value: Optional[Fraction] = None) -> int:
    """``floor(MAD + 1)``."""
    _nonempty(g, "bound_mad")
    if mad_value is None:
        mad_value = densest_subgraph(g).mad
    return floor_fraction(mad_value) + 1


def bound_delta(g: Graph) -> int:
    _nonempty(g, "bound_delta")
    return max(g.degrees()) + 1


def _is_odd_cycle(h: Graph) -> bool:
    return h.n >= 3 and h.n % 2 == 1 and h.m == h.n and all(d == 2 for d in h.degrees())


def bound_brooks(g: Graph) -> int:
    """Brooks' bound taken per connected component.

    A complete component ``K_k`` contributes ``k``, an odd cycle 3 and any
    other component its maximum degree; the result is the maximum.
    """
    _nonempty(g, "bound_brooks")
    best = 0
    for comp in connected_components(g):
        h, _ = induced_subgraph(g, comp)
        k = h.n
        if h.m == k * (k - 1) // 2:
            val = k
        elif _is_odd_cycle(h):
            val = 3
        else:
            val = max(h.degrees())
        best = max(best, val)
    return best


def soto_value(n: int, m: int) -> int:
    """``floor((3 + sqrt(9 + 8(m - n))) / 2)`` with an exact integer root.

    Flooring the root first does not change the outer floor.
    """
    radicand = 9 + 8 * (m - n)
    if radicand < 0:
        raise ValueError(f"negative radicand for n={n}, m={m}")
    return (3 + isqrt(radicand)) // 2


def bound_soto(g: Graph) -> Optional[int]:
    """The Soto-Rossi-Sevaux bound; ``None`` unless ``g`` is connected."""
    if g.n == 0 or len(connected_components(g)) != 1:
        return None
    return soto_value(g.n, g.m)


def lower_clique(g: Graph) -> int:
    """``ceil(n^2 / (n^2 - 2m))``, a lower bound on the clique number."""
    _nonempty(g, "lower_clique")
    n2 = g.n * g.n
    return ceil_div(n2, n2 - 2 * g.m)


def exact_case(g: Graph, is_ah: Optional[bool] = None) -> Optional[int]:
    """``floor(d + 1)`` when the clique lower bound meets it on an AH graph.

    In that case the chromatic number and the clique number both equal it.
    """
    _nonempty(g, "exact_case")
    if is_ah is None:
        is_ah = is_average_hereditary(g).is_ah
    if not is_ah:
        return None
    upper = floor_fraction(average_degree(g) + 1)
    return upper if lower_clique(g) == upper else None


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    avg_degree: Fraction
    mad: Fraction
    is_ah: bool
    bound_mad: int
    bound_delta: int
    bound_brooks: Optional[int]
    bound_soto: Optional[int]
    lower_clique: int
    exact_case: Optional[int]
    degeneracy: int
    greedy_colors: int
    exact_chromatic: Optional[int] = None

    def upper_bounds(self) -> dict:
        out = {
            "bound_mad": self.bound_mad,
            "bound_delta": self.bound_delta,
            "bound_brooks": self.bound_brooks,
            "bound_soto": self.bound_soto,
        }
        return {k: v for k, v in out.items() if v is not None}


REPORT_FIELDS = (
    "n",
    "m",
    "avg_degree",
    "mad",
    "is_ah",
    "bound_mad",
    "bound_delta",
    "bound_brooks",
    "bound_soto",
    "lower_clique",
    "exact_case",
    "degeneracy",
    "greedy_colors",
    "exact_chromatic",
)


def bounds_report(g: Graph, run_exact: bool = False, exact_limit: int = DEFAULT_EXACT_LIMIT) -> BoundsReport:
    _nonempty(g, "bounds_report")
    dense = densest_subgraph(g)
    d = average_degree(g)
    is_ah = compare_fraction(dense.mad, d) == 0
    order = degeneracy_order(g)
    greedy = greedy_color(g, order.order)
    exact = None
    if run_exact and g.n <= exact_limit:
        exact = exact_chromatic(g, exact_limit)
    return BoundsReport(
        n=g.n,
        m=g.m,
        avg_degree=d,
        mad=dense.mad,
        is_ah=is_ah,
        bound_mad=bound_mad(g, dense.mad),
        bound_delta=bound_delta(g),
        bound_brooks=bound_brooks(g),
        bound_soto=bound_soto(g),
        lower_clique=lower_clique(g),
        exact_case=exact_case(g, is_ah),
        degeneracy=order.degeneracy,
        greedy_colors=greedy.num_colors,
        exact_chromatic=exact,
    )
