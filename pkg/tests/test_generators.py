import random
from fractions import Fraction

import pytest

from ahgraph.density import is_average_hereditary, mad
from ahgraph.errors import BadParams, InfeasibleDegree
from ahgraph.generators import (
    complete_graph,
    cycle_graph,
    gen_clique_plus_path,
    gen_gnp,
    gen_random_cnf,
    gen_random_regular,
    gen_random_tree,
    petersen_graph,
    prufer_to_tree,
    star_graph,
)
from ahgraph.graph import average_degree, degree_stats, induced_subgraph, is_connected


def test_small_families():
    assert complete_graph(5).m == 10
    assert cycle_graph(6).degrees() == [2] * 6
    assert star_graph(4).degrees() == [4, 1, 1, 1, 1]
    p = petersen_graph()
    assert (p.n, p.m, degree_stats(p).regular_k) == (10, 15, 3)
    with pytest.raises(BadParams):
        cycle_graph(2)


def test_prufer_known_tree():
    t = prufer_to_tree([3, 3, 3, 4], 6)
    assert t.edges == ((0, 3), (1, 3), (2, 3), (3, 4), (4, 5))
    with pytest.raises(BadParams):
        prufer_to_tree([0], 4)


def test_random_tree_shape_and_determinism():
    for n in (1, 2, 3, 10, 200):
        t = gen_random_tree(n, seed=5)
        assert t.m == n - 1 and is_connected(t)
        assert t == gen_random_tree(n, seed=5)
    assert gen_random_tree(50, seed=1) != gen_random_tree(50, seed=2)


def test_random_regular():
    for n, k in [(10, 3), (12, 4), (7, 2), (30, 3), (6, 0)]:
        g = gen_random_regular(n, k, seed=n * k)
        assert degree_stats(g).regular_k == k
        assert g == gen_random_regular(n, k, seed=n * k)
    for n, k in [(5, 3), (4, 4), (3, -1)]:
        with pytest.raises(InfeasibleDegree):
            gen_random_regular(n, k, seed=0)


def test_gnp_extremes_and_determinism():
    assert gen_gnp(6, 0.0, seed=1).m == 0
    assert gen_gnp(6, 1.0, seed=1) == complete_graph(6)
    assert gen_gnp(40, 0.3, seed=9) == gen_gnp(40, 0.3, seed=9)
    with pytest.raises(BadParams):
        gen_gnp(5, 1.5)


def test_gnp_edge_frequency():
    # each pair appears with probability p; 0.3 * 190 * 200 = 11400 expected
    total = sum(gen_gnp(20, 0.3, seed=s).m for s in range(200))
    assert abs(total - 11400) < 500


def test_clique_plus_path_non_ah_from_four():
    g = gen_clique_plus_path(5, 100)
    assert (g.n, g.m) == (105, 110)
    assert average_degree(g) == Fraction(44, 21)
    assert mad(g) == 4
    for a in range(4, 9):
        for b in (1, 2, 10):
            verdict = is_average_hereditary(gen_clique_plus_path(a, b))
            assert not verdict.is_ah
            assert verdict.witness.subgraph_vertices == frozenset(range(a))


def test_clique_plus_path_triangle_is_ah():
    # a triangle with a pendant path is unicyclic, so d = MAD = 2
    for b in (1, 2, 5):
        g = gen_clique_plus_path(3, b)
        assert average_degree(g) == 2 == mad(g)
        assert is_average_hereditary(g).is_ah
    with pytest.raises(BadParams):
        gen_clique_plus_path(2, 1)
    with pytest.raises(BadParams):
        gen_clique_plus_path(4, 0)


def test_random_cnf_uses_every_variable():
    rng = random.Random(2)
    for i in range(100):
        v = rng.randint(1, 8)
        c = rng.randint(-(-v // 3), 10)
        phi = gen_random_cnf(v, c, seed=i)
        assert phi.num_clauses == c and not phi.unused_variables()
        assert phi == gen_random_cnf(v, c, seed=i)
    with pytest.raises(BadParams):
        gen_random_cnf(7, 2)


def test_witness_is_dense_part():
    g = gen_clique_plus_path(6, 30)
    h, _ = induced_subgraph(g, is_average_hereditary(g).witness.subgraph_vertices)
    assert average_degree(h) == 5 > average_degree(g)
