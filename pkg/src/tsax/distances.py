"""SAX MINDIST and the trend-aware TSAX distance.

The TSAX distance adds ``rew * k1 + pen * k2`` to MINDIST, where ``k1``
counts segments whose trend bits agree and ``k2`` those that disagree. With
the default ``rew=-1`` it is negative for a series compared with itself, so
it is not a metric: rank by value only.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import IncompatibleRepresentationError, InvalidParameterError
from .representation import TsaxRepresentation

# Row chunk for pairwise kernels; bounds the (rows, cols, m) temporary.
_MAX_CHUNK_ELEMENTS = 1 << 23


@dataclass(frozen=True)
class TsaxDistanceParams:
    """Reward for matching trends and penalty for opposite ones."""

    rew: float = -1.0
    pen: float = 1.0

    def __post_init__(self):
        for name in ("rew", "pen"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class TrendMatchCounts:
    k1: int
    k2: int

    @property
    def m(self):
        return self.k1 + self.k2


def _check_words(a, b, table):
    if a.m != b.m or a.n != b.n or a.alpha != b.alpha:
        raise IncompatibleRepresentationError(
            f"cannot compare (m={a.m}, n={a.n}, alpha={a.alpha}) "
            f"with (m={b.m}, n={b.n}, alpha={b.alpha})"
        )
    if table.alpha != a.alpha:
        raise IncompatibleRepresentationError(
            f"words use alphabet size {a.alpha} but the table has {table.alpha}"
        )


def _radical(sum_sq, n, m):
    # sqrt(n/m) * sqrt(S) == sqrt((n/m) * S); one form shared by both distances.
    return np.sqrt((n / m) * sum_sq)


def sax_mindist(a, b, table):
    """MINDIST between two SAX words of the same shape."""
    a = a.word if isinstance(a, TsaxRepresentation) else a
    b = b.word if isinstance(b, TsaxRepresentation) else b
    _check_words(a, b, table)
    d = table.symbol_dist[a.symbols, b.symbols]
    return float(_radical(np.dot(d, d), a.n, a.m))


def trend_match_counts(a, b):
    """Count equal (``k1``) and opposite (``k2``) trend pairs."""
    a = a.trends if isinstance(a, TsaxRepresentation) else a
    b = b.trends if isinstance(b, TsaxRepresentation) else b
    if len(a) != len(b):
        raise IncompatibleRepresentationError(
            f"trend parts have different lengths ({len(a)} vs {len(b)})"
        )
    k1 = int(np.count_nonzero(a.bits == b.bits))
    return TrendMatchCounts(k1=k1, k2=len(a) - k1)


def tsax_dist(a, b, table, params=None):
    """TSAX distance: MINDIST on the words plus ``rew*k1 + pen*k2``."""
    params = TsaxDistanceParams() if params is None else params
    base = sax_mindist(a.word, b.word, table)
    counts = trend_match_counts(a.trends, b.trends)
    return base + params.rew * counts.k1 + params.pen * counts.k2


def _row_chunks(n_rows, n_cols, m):
    step = max(1, _MAX_CHUNK_ELEMENTS // max(1, n_cols * m))
    for start in range(0, n_rows, step):
        yield slice(start, min(n_rows, start + step))


def pairwise_sax_mindist(A, B, table, n):
    """MINDIST between every row of ``A`` and every row of ``B``.

    ``A`` and ``B`` are integer symbol matrices of shape (rows, m). Returns a
    (len(A), len(B)) float64 matrix.
    """
    A = np.asarray(A, dtype=np.intp)
    B = np.asarray(B, dtype=np.intp)
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[1]:
        raise IncompatibleRepresentationError(
            f"symbol matrices must be 2-D with equal width, got {A.shape} and {B.shape}"
        )
    m = A.shape[1]
    sq = table.symbol_dist**2
    out = np.empty((A.shape[0], B.shape[0]))
    for rows in _row_chunks(A.shape[0], B.shape[0], m):
        out[rows] = sq[A[rows, None, :], B[None, :, :]].sum(axis=2)
    return _radical(out, n, m)


def pairwise_trend_mismatches(TA, TB):
    """Number of opposite trend pairs (``k2``) for every row pair."""
    TA = np.asarray(TA, dtype=np.float64)
    TB = np.asarray(TB, dtype=np.float64)
    if TA.ndim != 2 or TB.ndim != 2 or TA.shape[1] != TB.shape[1]:
        raise IncompatibleRepresentationError(
            f"trend matrices must be 2-D with equal width, got {TA.shape} and {TB.shape}"
        )
    # Counts are small integers, exact in float64.
    return (TA @ (1.0 - TB).T + (1.0 - TA) @ TB.T).astype(np.int64)


def pairwise_tsax_dist(A, TA, B, TB, table, n, params=None):
    """Vectorised :func:`tsax_dist` over all row pairs."""
    params = TsaxDistanceParams() if params is None else params
    base = pairwise_sax_mindist(A, B, table, n)
    k2 = pairwise_trend_mismatches(TA, TB)
    k1 = np.asarray(A).shape[1] - k2
    return base + params.rew * k1 + params.pen * k2

