"""scikit-learn compatible transformers and a 1NN classifier."""

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import (
    check_alphabet_size,
    check_collection,
    check_n_segments,
    segments_for_ratio,
)
from .distances import TsaxDistanceParams, pairwise_sax_mindist, pairwise_tsax_dist
from .exceptions import InvalidInputError, InvalidParameterError
from .representation import make_breakpoint_table, transform_batch

METHODS = ("sax", "tsax")


class _SymbolicMixin:
    """Parameter resolution shared by the transformers and the classifier."""

    def _resolve(self, X):
        X = check_collection(X)
        n = X.shape[1]
        table = make_breakpoint_table(check_alphabet_size(self.alphabet_size))
        if self.n_segments is not None:
            m = check_n_segments(self.n_segments, n)
        else:
            m = segments_for_ratio(n, self.segment_ratio)
        return X, table, m

    def _check_width(self, X):
        X = check_collection(X)
        if X.shape[1] != self.n_features_in_:
            raise InvalidInputError(
                f"X has {X.shape[1]} points per series, fitted on {self.n_features_in_}"
            )
        return X


class SAXTransformer(_SymbolicMixin, TransformerMixin, BaseEstimator):
    """Map each series (row) to its SAX word.

    Parameters
    ----------
    alphabet_size : int, default=4
        Number of symbols, between 2 and 20.
    segment_ratio : int, default=4
        Points per segment (``n/m``); ignored when ``n_segments`` is set.
    n_segments : int or None, default=None
        Fixed word length ``m``.

    Attributes
    ----------
    n_segments_ : int
        Word length used by :meth:`transform`.
    table_ : BreakpointTable
    """

    def __init__(self, alphabet_size=4, segment_ratio=4, n_segments=None):
        self.alphabet_size = alphabet_size
        self.segment_ratio = segment_ratio
        self.n_segments = n_segments

    def fit(self, X, y=None):
        X, self.table_, self.n_segments_ = self._resolve(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        """Return a uint8 array of shape (n_series, n_segments_)."""
        check_is_fitted(self, "table_")
        X = self._check_width(X)
        symbols, _ = transform_batch(X, self.n_segments_, self.table_, trends=False)
        return symbols


class TSAXTransformer(SAXTransformer):
    """Map each series to ``[w_1 .. w_m, tr_1 .. tr_m]``.

    The first ``m`` columns are symbol indices and the last ``m`` are trend
    bits (1 = upward, 0 = downward), as uint8.
    """

    def transform(self, X):
        check_is_fitted(self, "table_")
        X = self._check_width(X)
        symbols, bits = transform_batch(X, self.n_segments_, self.table_)
        return np.hstack([symbols, bits.astype(np.uint8)])


class SymbolicNNClassifier(_SymbolicMixin, ClassifierMixin, BaseEstimator):
    """One-nearest-neighbour classifier over SAX or TSAX representations.

    Parameters
    ----------
    method : {"tsax", "sax"}, default="tsax"
        ``"sax"`` ranks neighbours by MINDIST, ``"tsax"`` by the trend-aware
        distance.
    alphabet_size : int, default=4
    segment_ratio : int, default=4
    n_segments : int or None, default=None
    rew, pen : float, default=-1.0, 1.0
        Weights of matching and opposite trend counts. Unused for ``"sax"``.

    Ties go to the lowest-index training series. Training representations
    are computed once in :meth:`fit` and reused by every prediction.
    """

    def __init__(
        self,
        method="tsax",
        alphabet_size=4,
        segment_ratio=4,
        n_segments=None,
        rew=-1.0,
        pen=1.0,
    ):
        self.method = method
        self.alphabet_size = alphabet_size
        self.segment_ratio = segment_ratio
        self.n_segments = n_segments
        self.rew = rew
        self.pen = pen

    def fit(self, X, y):
        if self.method not in METHODS:
            raise InvalidParameterError(f"method must be one of {METHODS}, got {self.method!r}")
        X, self.table_, self.n_segments_ = self._resolve(X)
        y = np.asarray(y)
        if y.ndim != 1 or y.shape[0] != X.shape[0]:
            raise InvalidInputError(f"y must have one label per series ({X.shape[0]}), got {y.shape}")
        self.params_ = TsaxDistanceParams(self.rew, self.pen)
        self.n_features_in_ = X.shape[1]
        self.classes_ = np.unique(y)
        self.symbols_, self.trends_ = transform_batch(
            X, self.n_segments_, self.table_, trends=self.method == "tsax"
        )
        self.y_ = y
        return self

    def _distances(self, symbols, trends):
        n = self.n_features_in_
        if self.method == "sax":
            return pairwise_sax_mindist(symbols, self.symbols_, self.table_, n)
        return pairwise_tsax_dist(
            symbols, trends, self.symbols_, self.trends_, self.table_, n, self.params_
        )

    def distance_matrix(self, X=None):
        """Distances from each row of ``X`` (default: the training set) to the training set."""
        check_is_fitted(self, "symbols_")
        if X is None:
            return self._distances(self.symbols_, self.trends_)
        X = self._check_width(X)
        symbols, trends = transform_batch(
            X, self.n_segments_, self.table_, trends=self.method == "tsax"
        )
        return self._distances(symbols, trends)

    def _nearest(self, symbols, trends, offset=None, chunk=512):
        idx = np.empty(len(symbols), dtype=np.intp)
        for start in range(0, len(symbols), chunk):
            rows = slice(start, start + chunk)
            D = self._distances(symbols[rows], None if trends is None else trends[rows])
            if offset is not None:
                r = np.arange(D.shape[0])
                D[r, r + start] = np.inf
            idx[rows] = np.argmin(D, axis=1)
        return idx

    def predict(self, X):
        check_is_fitted(self, "symbols_")
        X = self._check_width(X)
        symbols, trends = transform_batch(
            X, self.n_segments_, self.table_, trends=self.method == "tsax"
        )
        return self.y_[self._nearest(symbols, trends)]

    def predict_loo(self):
        """Leave-one-out predictions for the training set (self-matches excluded)."""
        check_is_fitted(self, "symbols_")
        if len(self.y_) < 2:
            raise InvalidInputError("leave-one-out needs at least two series")
        return self.y_[self._nearest(self.symbols_, self.trends_, offset=True)]
