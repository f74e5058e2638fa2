"""Estimator-style wrappers so the engines plug into sklearn tooling.

``fit`` takes a polyomino graph and enumerates its perfect matchings;
``transform`` maps matchings to their (anti-)forcing numbers. Fitted state
lives in trailing-underscore attributes.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .antiforcing import DEFAULT_ANTIFORCING_ORACLE_LIMIT, antiforcing_number
from .forcing import (
    DEFAULT_FORCING_ORACLE_LIMIT,
    SpectrumReport,
    forcing_number,
    polynomial_from_values,
    spectrum,
)
from .matching import DEFAULT_CYCLE_EDGE_LIMIT, Matching, all_matching_masks
from .polynomial import IntPolynomial
from .polyomino import PolyominoGraph
from .validation import check_graph, check_matching

_FORCING_METHODS = ("auto", "resonant", "cycles", "oracle")
_ANTIFORCING_METHODS = ("auto", "structural", "compat", "oracle")


class _MatchingPolynomial(TransformerMixin, BaseEstimator):
    _methods: tuple[str, ...] = ()

    def _number(self, g, mask, matchings):
        raise NotImplementedError

    def _check_params(self):
        if self.method not in self._methods:
            raise ValueError(f"method must be one of {self._methods}, got {self.method!r}")
        if self.oracle_max < 1 or self.cycle_limit < 1:
            raise ValueError("size bounds must be positive")

    def fit(self, X: PolyominoGraph, y=None):
        self._check_params()
        g = check_graph(X)
        masks = all_matching_masks(g)
        self.graph_ = g
        self.matchings_ = [Matching(g, m) for m in masks]
        self.values_ = [self._number(g, m, masks) for m in masks]
        self.polynomial_: IntPolynomial = polynomial_from_values(self.values_)
        self.spectrum_: SpectrumReport = spectrum(self.polynomial_)
        self.n_matchings_ = len(masks)
        return self

    def _check_fitted(self):
        if not hasattr(self, "graph_"):
            raise NotFittedError(f"{type(self).__name__} is not fitted yet")

    def transform(self, X) -> list[int]:
        """Numbers for the fitted graph's matchings, or for the given ones."""
        self._check_fitted()
        if X is self.graph_:
            return list(self.values_)
        if isinstance(X, PolyominoGraph):
            raise ValueError("transform got a different graph than the one fitted")
        masks = [m.mask for m in self.matchings_]
        index = {m: i for i, m in enumerate(masks)}
        out = []
        for M in X:
            M = check_matching(self.graph_, M)
            i = index.get(M.mask)
            out.append(self.values_[i] if i is not None else self._number(self.graph_, M.mask, masks))
        return out

    def predict(self, X) -> list[int]:
        return self.transform(X)


class ForcingPolynomial(_MatchingPolynomial):
    """Forcing numbers of every perfect matching of a polyomino graph.

    Parameters
    ----------
    method : {"auto", "resonant", "cycles", "oracle"}
        ``auto`` uses resonant sets on G_n/H_n and disjoint alternating
        cycles elsewhere.
    oracle_max : int
        Largest matching size the brute-force oracle accepts.
    cycle_limit : int
        Edge bound for the exhaustive alternating-cycle search.
    """

    _methods = _FORCING_METHODS

    def __init__(
        self,
        method: str = "auto",
        oracle_max: int = DEFAULT_FORCING_ORACLE_LIMIT,
        cycle_limit: int = DEFAULT_CYCLE_EDGE_LIMIT,
    ):
        self.method = method
        self.oracle_max = oracle_max
        self.cycle_limit = cycle_limit

    def _number(self, g, mask, matchings):
        if self.method == "oracle":
            return forcing_number(g, mask, "oracle", matchings=matchings, max_size=self.oracle_max)
        if self.method == "cycles" or (self.method == "auto" and not g.is_family):
            return forcing_number(g, mask, "cycles", max_edges=self.cycle_limit)
        return forcing_number(g, mask, self.method)


class AntiForcingPolynomial(_MatchingPolynomial):
    """Anti-forcing numbers of every perfect matching of a polyomino graph.

    ``method="auto"`` uses the segment-catalog route on G_n/H_n and the
    compatible-set route elsewhere.
    """

    _methods = _ANTIFORCING_METHODS

    def __init__(
        self,
        method: str = "auto",
        oracle_max: int = DEFAULT_ANTIFORCING_ORACLE_LIMIT,
        cycle_limit: int = DEFAULT_CYCLE_EDGE_LIMIT,
    ):
        self.method = method
        self.oracle_max = oracle_max
        self.cycle_limit = cycle_limit

    def _number(self, g, mask, matchings):
        if self.method == "oracle":
            return antiforcing_number(g, mask, "oracle", max_size=self.oracle_max)
        if self.method == "compat" or (self.method == "auto" and not g.is_family):
            return antiforcing_number(g, mask, "compat", max_edges=self.cycle_limit)
        return antiforcing_number(g, mask, self.method)
