"""scikit-learn compatible wrappers.

Samples are graphs. Estimators that summarise one graph take it as ``X`` in
``fit``; transformers and classifiers take a sequence of graphs and return
one row per graph, so they drop into ``Pipeline`` and ``cross_val_score``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bounds import REPORT_FIELDS, bounds_report
from .coloring import DEFAULT_EXACT_LIMIT, degeneracy_order, exact_coloring, greedy_color
from .density import densest_subgraph
from .graph import average_degree, compare_fraction
from .validation import check_graph, check_graphs

__all__ = [
    "MaxAverageDegree",
    "AverageHereditaryClassifier",
    "ChromaticBoundsTransformer",
    "GraphColoring",
]


class MaxAverageDegree(BaseEstimator):
    """Exact maximum average degree of a single graph.

    Attributes
    ----------
    mad_ : Fraction
    density_ : Fraction
        ``|E(S)|/|S|`` of the densest vertex set.
    densest_vertices_ : ndarray of int
    average_degree_ : Fraction
    is_average_hereditary_ : bool
    """

    def fit(self, X, y=None):
        g = check_graph(X)
        res = densest_subgraph(g)
        self.density_ = res.density
        self.mad_ = res.mad
        self.densest_vertices_ = np.array(sorted(res.subgraph_vertices), dtype=int)
        self.average_degree_ = average_degree(g)
        self.is_average_hereditary_ = compare_fraction(self.mad_, self.average_degree_) == 0
        self.n_vertices_ = g.n
        return self


class AverageHereditaryClassifier(ClassifierMixin, BaseEstimator):
    """Labels each graph ``True`` when it is average hereditary.

    The decision is exact and needs no training; ``fit`` only records the
    label set so the estimator satisfies the classifier protocol.
    """

    def fit(self, X, y=None):
        check_graphs(X)
        self.classes_ = np.array([False, True])
        return self

    def decision_function(self, X):
        """``MAD - d`` per graph as a float (0 exactly for AH graphs)."""
        check_is_fitted(self, "classes_")
        out = []
        for g in check_graphs(X):
            out.append(float(densest_subgraph(g).mad - average_degree(g)))
        return np.array(out)

    def predict(self, X):
        check_is_fitted(self, "classes_")
        out = []
        for g in check_graphs(X):
            out.append(compare_fraction(densest_subgraph(g).mad, average_degree(g)) == 0)
        return np.array(out, dtype=bool)


class ChromaticBoundsTransformer(TransformerMixin, BaseEstimator):
    """Maps each graph to a row of bound values.

    Parameters
    ----------
    features : sequence of str, optional
        Subset of the report fields; defaults to all of them. Fractions become
        floats and missing values ``nan``, so use :func:`bounds_report` where
        exactness matters.
    run_exact : bool
        Also compute the exact chromatic number for graphs up to ``exact_limit``.
    exact_limit : int
    """

    def __init__(self, features=None, run_exact=False, exact_limit=DEFAULT_EXACT_LIMIT):
        self.features = features
        self.run_exact = run_exact
        self.exact_limit = exact_limit

    def fit(self, X, y=None):
        check_graphs(X)
        names = tuple(self.features) if self.features is not None else REPORT_FIELDS
        unknown = [f for f in names if f not in REPORT_FIELDS]
        if unknown:
            raise ValueError(f"unknown feature(s): {', '.join(unknown)}")
        self.feature_names_out_ = np.array(names, dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        rows = []
        for g in check_graphs(X):
            r = bounds_report(g, run_exact=self.run_exact, exact_limit=self.exact_limit)
            rows.append([np.nan if getattr(r, f) is None else float(getattr(r, f))
                         for f in self.feature_names_out_])
        return np.array(rows, dtype=float)

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()


class GraphColoring(ClusterMixin, BaseEstimator):
    """Proper vertex colouring; ``labels_`` holds one colour per vertex.

    Parameters
    ----------
    method : {"degeneracy", "exact"}
        Greedy colouring along the smallest-last order, or an optimal
        colouring (graphs up to ``exact_limit`` vertices).
    """

    def __init__(self, method="degeneracy", exact_limit=DEFAULT_EXACT_LIMIT):
        self.method = method
        self.exact_limit = exact_limit

    def fit(self, X, y=None):
        g = check_graph(X)
        if self.method == "degeneracy":
            col = greedy_color(g, degeneracy_order(g).order)
        elif self.method == "exact":
            col = exact_coloring(g, self.exact_limit)
        else:
            raise ValueError(f"unknown method {self.method!r}")
        self.labels_ = np.array(col.colors, dtype=int)
        self.n_colors_ = col.num_colors
        return self
