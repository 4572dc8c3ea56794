"""1NN evaluation of symbolic representations.

Two protocols are supported. Leave-one-out classifies every series in a
single file against all the others; train/test classifies the test split
against the training split only.
"""

from dataclasses import dataclass, field

import numpy as np
from sklearn.base import clone

from ._validation import check_collection
from .estimators import SymbolicNNClassifier
from .exceptions import IncompatibleRepresentationError, InvalidInputError
from .representation import TimeSeries


@dataclass(frozen=True, eq=False)
class LabeledDataset:
    """Equal-length labelled series stored row-wise in ``X``."""

    X: np.ndarray
    y: np.ndarray
    name: str = "dataset"

    def __post_init__(self):
        X = check_collection(self.X)
        y = np.asarray(self.y)
        if y.ndim != 1 or y.shape[0] != X.shape[0]:
            raise InvalidInputError(f"{self.name}: need one label per series")
        if not np.issubdtype(y.dtype, np.integer):
            if not np.all(np.asarray(y, dtype=np.float64) == np.trunc(y)):
                raise InvalidInputError(f"{self.name}: labels must be integers")
            y = y.astype(np.int64)
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)

    def __len__(self):
        return self.X.shape[0]

    @property
    def length(self):
        return self.X.shape[1]

    @property
    def classes(self):
        return np.unique(self.y)

    @property
    def class_count(self):
        return len(self.classes)

    @property
    def series(self):
        return [TimeSeries(x, int(label)) for x, label in zip(self.X, self.y)]


@dataclass(frozen=True)
class EvalResult:
    dataset: str
    n_series: int
    n_errors: int
    per_query: tuple = field(default=(), repr=False)

    @property
    def error_rate(self):
        return self.n_errors / self.n_series


def classify_1nn(query, references, labels, distance):
    """Label of the reference nearest to ``query`` under ``distance``.

    ``distance(query, reference)`` may return any real, including negative
    values. The first reference wins ties.
    """
    if len(references) == 0:
        raise InvalidInputError("need at least one reference")
    if len(labels) != len(references):
        raise InvalidInputError("references and labels differ in length")
    best, best_d = 0, np.inf
    for i, ref in enumerate(references):
        d = distance(query, ref)
        if d < best_d:
            best, best_d = i, d
    return labels[best]


def _result(name, y_true, y_pred, keep_predictions):
    errors = int(np.count_nonzero(y_true != y_pred))
    per_query = tuple(zip(y_true.tolist(), y_pred.tolist())) if keep_predictions else ()
    return EvalResult(name, len(y_true), errors, per_query)


def evaluate_loo(dataset, classifier=None, *, keep_predictions=False):
    """Leave-one-out 1NN error over a single dataset.

    ``classifier`` is an unfitted :class:`SymbolicNNClassifier` used as a
    template (it is cloned); the default is TSAX with alpha=4, n/m=4,
    rew=-1, pen=1.
    """
    if len(dataset) < 2:
        raise InvalidInputError(f"{dataset.name}: leave-one-out needs at least two series")
    clf = clone(classifier if classifier is not None else SymbolicNNClassifier())
    clf.fit(dataset.X, dataset.y)
    return _result(dataset.name, dataset.y, clf.predict_loo(), keep_predictions)


def evaluate_train_test(train, test, classifier=None, *, keep_predictions=False):
    """1NN error of ``test`` classified against ``train``."""
    if len(train) == 0 or len(test) == 0:
        raise InvalidInputError("train and test splits must be non-empty")
    if train.length != test.length:
        raise IncompatibleRepresentationError(
            f"train series have length {train.length}, test series {test.length}"
        )
    clf = clone(classifier if classifier is not None else SymbolicNNClassifier())
    clf.fit(train.X, train.y)
    return _result(test.name, test.y, clf.predict(test.X), keep_predictions)
