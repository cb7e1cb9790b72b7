from fractions import Fraction

import numpy as np
import pytest
import scipy.sparse as sp
from sklearn.base import clone
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from ahgraph.errors import EmptyGraph
from ahgraph.estimators import (
    AverageHereditaryClassifier,
    ChromaticBoundsTransformer,
    GraphColoring,
    MaxAverageDegree,
)
from ahgraph.generators import complete_graph, disjoint_union, gen_random_tree, petersen_graph
from ahgraph.graph import build_graph
from ahgraph.validation import check_graph, check_graphs


def test_check_graph_accepts_several_inputs(p3):
    dense = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    assert check_graph(dense) == p3
    assert check_graph(dense.tolist()) == p3
    assert check_graph(sp.csr_matrix(dense)) == p3
    assert check_graph((3, [(0, 1), (1, 2)])) == p3
    assert check_graph(p3) is p3


@pytest.mark.parametrize(
    "bad",
    [
        np.array([[0, 1], [0, 0]]),
        np.array([[1, 0], [0, 0]]),
        np.array([[0, 2], [2, 0]]),
        np.zeros((2, 3)),
        "graph",
    ],
)
def test_check_graph_rejects(bad):
    with pytest.raises((ValueError, TypeError)):
        check_graph(bad)


def test_check_graph_empty():
    with pytest.raises(EmptyGraph):
        check_graph(build_graph(0, []))
    assert check_graph(build_graph(0, []), allow_empty=True).n == 0
    with pytest.raises(ValueError):
        check_graphs([])


def test_max_average_degree(k7k3):
    est = MaxAverageDegree().fit(k7k3)
    assert est.mad_ == 6 and est.density_ == 3
    assert est.densest_vertices_.tolist() == list(range(7))
    assert est.average_degree_ == Fraction(24, 5)
    assert not est.is_average_hereditary_
    assert est.get_params() == {}


def test_classifier_predict_and_score(k7k3):
    X = [petersen_graph(), k7k3, gen_random_tree(20, 1), complete_graph(5)]
    y = np.array([True, False, True, True])
    clf = AverageHereditaryClassifier().fit(X, y)
    assert clf.predict(X).tolist() == y.tolist()
    assert clf.score(X, y) == 1.0
    scores = clf.decision_function(X)
    assert scores[0] == 0 and scores[1] == pytest.approx(6 - 4.8)


def test_transformer_params_clone_and_pipeline():
    t = ChromaticBoundsTransformer(features=["bound_mad", "bound_soto"], run_exact=True)
    assert t.get_params() == {"features": ["bound_mad", "bound_soto"], "run_exact": True, "exact_limit": 30}
    c = clone(t).set_params(exact_limit=12)
    assert c.exact_limit == 12 and t.exact_limit == 30
    X = [petersen_graph(), disjoint_union(complete_graph(7), complete_graph(3))]
    out = t.fit_transform(X)
    assert out[0].tolist() == [4.0, 5.0]
    assert out[1, 0] == 7.0 and np.isnan(out[1, 1])
    assert t.get_feature_names_out().tolist() == ["bound_mad", "bound_soto"]
    pipe = make_pipeline(ChromaticBoundsTransformer(features=["n", "m", "bound_mad"]), StandardScaler())
    assert pipe.fit_transform(X).shape == (2, 3)
    with pytest.raises(ValueError):
        ChromaticBoundsTransformer(features=["colour"]).fit(X)


def test_graph_coloring(petersen):
    est = GraphColoring(method="exact").fit(petersen)
    assert est.n_colors_ == 3
    labels = est.labels_
    assert all(labels[u] != labels[v] for u, v in petersen.edges)
    assert GraphColoring().fit_predict(petersen).shape == (10,)
    with pytest.raises(ValueError):
        GraphColoring(method="tabu").fit(petersen)
