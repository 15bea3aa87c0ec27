"""Estimator-style wrappers so tree pairs can flow through scikit-learn tooling.

Inputs are sequences of trees (for ``StructuralProfile``) or of ``(host,
pattern)`` pairs (for ``MinorContainment``).  A tree may be given as a ``Tree``
or as an ``(n, edges)`` tuple.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from .dichotomy import NO, UNKNOWN, YES, DichotomyReport, solve
from .oracle import DEFAULT_MAX_N
from .tree import Tree, diameter, path_eccentricity

PROFILE_COLUMNS = ("n", "diameter", "path_eccentricity", "caterpillar", "lobster")


def check_tree(obj) -> Tree:
    if isinstance(obj, Tree):
        return obj
    try:
        n, edges = obj
        return Tree(int(n), tuple((int(u), int(v)) for u, v in edges))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"expected a Tree or an (n, edges) pair, got {obj!r}") from exc


def check_trees(X) -> list[Tree]:
    trees = [check_tree(t) for t in X]
    if not trees:
        raise ValueError("empty input")
    return trees


def check_pairs(X) -> list[tuple[Tree, Tree]]:
    pairs = []
    for item in X:
        try:
            host, pattern = item
        except (TypeError, ValueError):
            raise ValueError(f"expected a (host, pattern) pair, got {item!r}") from None
        pairs.append((check_tree(host), check_tree(pattern)))
    if not pairs:
        raise ValueError("empty input")
    return pairs


class StructuralProfile(TransformerMixin, BaseEstimator):
    """Maps each tree to ``[n, diameter, path eccentricity, is caterpillar, is lobster]``."""

    def fit(self, X, y=None):
        check_trees(X)
        self.n_features_out_ = len(PROFILE_COLUMNS)
        return self

    def transform(self, X):
        rows = []
        for T in check_trees(X):
            pe = path_eccentricity(T)
            rows.append((T.n, diameter(T), pe, int(pe <= 1), int(pe <= 2)))
        return np.asarray(rows, dtype=np.int64)

    def get_feature_names_out(self, input_features=None):
        return np.asarray(PROFILE_COLUMNS, dtype=object)


class MinorContainment(ClassifierMixin, BaseEstimator):
    """Predicts ``yes``/``no``/``unknown`` for "pattern is a minor of host".

    Nothing is learned: ``fit`` only validates input and records the label set.
    Pairs outside the polynomial regimes go to the exact oracle when
    ``allow_exact`` is set and the host has at most ``max_exact_n`` vertices.
    """

    def __init__(self, allow_exact: bool = True, max_exact_n: int = DEFAULT_MAX_N):
        self.allow_exact = allow_exact
        self.max_exact_n = max_exact_n

    def fit(self, X, y=None):
        check_pairs(X)
        if self.max_exact_n < 1:
            raise ValueError("max_exact_n must be positive")
        self.classes_ = np.asarray([NO, UNKNOWN, YES], dtype=object)
        return self

    def reports(self, X) -> list[DichotomyReport]:
        return [
            solve(T, P, allow_exact=self.allow_exact, max_exact_n=self.max_exact_n)[1]
            for T, P in check_pairs(X)
        ]

    def predict(self, X):
        return np.asarray([r.answer for r in self.reports(X)], dtype=object)
