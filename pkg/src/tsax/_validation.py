"""Small input checks shared by the functional API and the estimators."""

import numbers

import numpy as np

from .exceptions import InvalidInputError, InvalidParameterError

MIN_ALPHABET = 2
MAX_ALPHABET = 20


def check_series(values, *, name="series"):
    """Return ``values`` as a 1-D float64 array, rejecting empty or non-finite input."""
    arr = np.asarray(getattr(values, "values", values), dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidInputError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidInputError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains NaN or infinite values")
    return arr


def check_collection(X, *, name="X"):
    """2-D float64 array of equal-length series, one per row."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2:
        raise InvalidInputError(f"{name} must be 2-D (n_series, length), got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise InvalidInputError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains NaN or infinite values")
    return arr


def check_alphabet_size(alpha):
    if isinstance(alpha, bool) or not isinstance(alpha, numbers.Integral):
        raise InvalidParameterError(f"alphabet size must be an integer, got {alpha!r}")
    if not MIN_ALPHABET <= alpha <= MAX_ALPHABET:
        raise InvalidParameterError(
            f"alphabet size must be in [{MIN_ALPHABET}, {MAX_ALPHABET}], got {alpha}"
        )
    return int(alpha)


def check_n_segments(m, n):
    if isinstance(m, bool) or not isinstance(m, numbers.Integral):
        raise InvalidParameterError(f"segment count must be an integer, got {m!r}")
    if not 1 <= m <= n:
        raise InvalidParameterError(f"segment count must be in [1, {n}], got {m}")
    return int(m)


def segments_for_ratio(n, ratio):
    """Segment count for a series of length ``n`` at compression ratio ``n/m``.

    Uses floor division, so a 251-point series at ratio 4 gets 62 segments.
    """
    if isinstance(ratio, bool) or not isinstance(ratio, numbers.Integral) or ratio < 1:
        raise InvalidParameterError(f"segment ratio must be a positive integer, got {ratio!r}")
    return max(1, n // int(ratio))
