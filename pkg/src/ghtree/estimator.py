"""scikit-learn style front end.

``fit`` builds the tree for one graph; ``predict`` answers minimum cut
queries for terminal pairs from the stored tree.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .config import GHConfig
from .recursive import compute_ghtree
from .validation import check_graph, check_pairs, check_terminals


class GomoryHuTreeEstimator(BaseEstimator):
    """Gomory-Hu Steiner tree of a graph or hypergraph.

    Parameters mirror :class:`GHConfig` plus the run options.  After
    ``fit`` the tree is in ``tree_`` and its run statistics in ``stats_``.
    """

    def __init__(self, terminals=None, random_state=0, classic=False, verify=False,
                 base_factor=4.0, detect_factor=4.0, stall_factor=1.0, partial_factor=4.0,
                 degree_prune=True, max_retries=3, solver="auto"):
        self.terminals = terminals
        self.random_state = random_state
        self.classic = classic
        self.verify = verify
        self.base_factor = base_factor
        self.detect_factor = detect_factor
        self.stall_factor = stall_factor
        self.partial_factor = partial_factor
        self.degree_prune = degree_prune
        self.max_retries = max_retries
        self.solver = solver

    def _config(self) -> GHConfig:
        return GHConfig(
            base_factor=self.base_factor,
            detect_factor=self.detect_factor,
            stall_factor=self.stall_factor,
            partial_factor=self.partial_factor,
            degree_prune=self.degree_prune,
            max_retries=self.max_retries,
            solver=self.solver,
        )

    def fit(self, X, y=None):
        G = check_graph(X)
        U = check_terminals(self.terminals, G.n)
        seed = 0 if self.random_state is None else int(self.random_state)
        self.tree_ = compute_ghtree(G, U, seed, self._config(), classic=self.classic, verify=self.verify)
        self.stats_ = self.tree_.stats
        self.n_vertices_ = G.n
        return self

    def _check_fitted(self):
        if not hasattr(self, "tree_"):
            raise NotFittedError("call fit before querying the tree")

    def predict(self, pairs) -> np.ndarray:
        """Minimum cut value for every ``(s, t)`` row."""
        self._check_fitted()
        arr = check_pairs(pairs, self.tree_.terminals)
        return np.array([self.tree_.value(s, t) for s, t in arr.tolist()], dtype=np.int64)

    def cut(self, s: int, t: int):
        """``(value, side)`` for one pair."""
        self._check_fitted()
        check_pairs([[s, t]], self.tree_.terminals)
        return self.tree_.query(s, t)

    def k_components(self, k: int):
        self._check_fitted()
        return self.tree_.k_components(k)
