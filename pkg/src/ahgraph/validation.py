"""Input validation for the estimator API.

Anything graph-like is coerced to :class:`~ahgraph.graph.Graph`:

* a ``Graph`` (returned unchanged),
* an ``(n, edges)`` pair,
* a square, symmetric 0/1 adjacency matrix (dense array or scipy sparse)
  with an empty diagonal.
"""

from __future__ import annotations

import numpy as np
from scipy import sparse

from .errors import EmptyGraph
from .graph import Graph, build_graph

__all__ = ["check_graph", "check_graphs"]


def _from_matrix(a) -> Graph:
    if sparse.issparse(a):
        a = a.toarray()
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("adjacency matrix must be symmetric")
    if not np.isin(a, (0, 1)).all():
        raise ValueError("adjacency matrix must contain only 0 and 1")
    # build_graph reports self-loops from a non-zero diagonal
    rows, cols = np.nonzero(np.triu(a))
    return build_graph(a.shape[0], zip(rows.tolist(), cols.tolist()))


def check_graph(X, *, allow_empty: bool = False) -> Graph:
    if isinstance(X, Graph):
        g = X
    elif isinstance(X, tuple) and len(X) == 2 and np.isscalar(X[0]):
        g = build_graph(int(X[0]), X[1])
    elif sparse.issparse(X) or isinstance(X, (np.ndarray, list)):
        g = _from_matrix(X)
    else:
        raise TypeError(f"cannot interpret {type(X).__name__} as a graph")
    if g.n == 0 and not allow_empty:
        raise EmptyGraph("this estimator")
    return g


def check_graphs(X, *, allow_empty: bool = False) -> list[Graph]:
    """Validate a collection of graphs (one sample per graph)."""
    if isinstance(X, (Graph, tuple)) or sparse.issparse(X):
        raise TypeError("expected a sequence of graphs; wrap a single graph in a list")
    if isinstance(X, np.ndarray) and X.dtype != object:
        raise TypeError("expected a sequence of graphs, got a numeric array")
    graphs = [check_graph(x, allow_empty=allow_empty) for x in X]
    if not graphs:
        raise ValueError("need at least one graph")
    return graphs
