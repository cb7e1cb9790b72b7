import itertools
import random

import pytest
from conftest import graphs
from hypothesis import given, settings

from ahgraph.coloring import (
    Coloring,
    degeneracy_order,
    exact_chromatic,
    exact_coloring,
    greedy_color,
    validate_coloring,
)
from ahgraph.density import mad
from ahgraph.errors import EmptyGraph, LengthMismatch, NotAPermutation, TooLarge
from ahgraph.generators import (
    complete_graph,
    cycle_graph,
    gen_gnp,
    gen_random_tree,
    path_graph,
)
from ahgraph.graph import build_graph, floor_fraction


def chromatic_by_enumeration(g):
    """Smallest k for which some assignment in range(k)^n is proper."""
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges):
                return k
    return 0


def test_degeneracy_examples(c5, petersen):
    for seed in range(5):
        assert degeneracy_order(gen_random_tree(30, seed)).degeneracy == 1
    assert degeneracy_order(c5).degeneracy == 2
    assert degeneracy_order(petersen).degeneracy == 3


def test_degeneracy_tie_break_smallest_id(p3):
    # peel order 0 (deg 1), then 1 (deg 1 beats 2 on id), then 2; reversed
    assert degeneracy_order(p3).order == (2, 1, 0)


def test_degeneracy_empty():
    with pytest.raises(EmptyGraph):
        degeneracy_order(build_graph(0, []))


def test_greedy_examples(p3, c5, k4):
    assert greedy_color(p3, degeneracy_order(p3).order).num_colors == 2
    assert greedy_color(c5, degeneracy_order(c5).order).num_colors == 3
    assert greedy_color(k4, [3, 1, 0, 2]).num_colors == 4


def test_greedy_rejects_bad_order(p3):
    with pytest.raises(NotAPermutation):
        greedy_color(p3, [0, 1, 1])


def test_exact_examples(k4, c5, petersen):
    assert exact_chromatic(k4) == 4
    assert exact_chromatic(c5) == 3
    assert exact_chromatic(petersen) == 3


def test_exact_limits():
    with pytest.raises(TooLarge):
        exact_chromatic(path_graph(31))
    assert exact_chromatic(path_graph(31), limit=31) == 2
    with pytest.raises(EmptyGraph):
        exact_chromatic(build_graph(0, []))


def test_validate_examples(c5):
    k2 = complete_graph(2)
    assert validate_coloring(k2, Coloring((0, 1)))
    assert not validate_coloring(k2, Coloring((0, 0)))
    assert validate_coloring(c5, greedy_color(c5, range(5)))
    with pytest.raises(LengthMismatch):
        validate_coloring(k2, [0])


def test_num_colors_empty():
    assert Coloring(()).num_colors == 0


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_degeneracy_greedy_certificate(g):
    order = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order.order)}
    for v in range(g.n):
        assert sum(1 for w in g.adj[v] if pos[w] < pos[v]) <= order.degeneracy
    col = greedy_color(g, order.order)
    assert validate_coloring(g, col)
    assert set(col.colors) == set(range(col.num_colors))
    assert col.num_colors <= order.degeneracy + 1 <= floor_fraction(mad(g)) + 1


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=11))
def test_exact_is_optimal_and_proper(g):
    col = exact_coloring(g)
    assert validate_coloring(g, col)
    assert col.num_colors == exact_chromatic(g)
    assert col.num_colors <= greedy_color(g, range(g.n)).num_colors


def test_exact_matches_enumeration():
    rng = random.Random(31)
    for i in range(60):
        g = gen_gnp(rng.randint(1, 8), rng.choice([0.3, 0.5, 0.8]), seed=i)
        assert exact_chromatic(g) == chromatic_by_enumeration(g)


def test_odd_and_even_cycles():
    for n in range(3, 12):
        assert exact_chromatic(cycle_graph(n)) == (3 if n % 2 else 2)
