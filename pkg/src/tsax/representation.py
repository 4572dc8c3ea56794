"""PAA, SAX and TSAX representations of a single time series.

Everything here is a pure function over immutable values. A TSAX
representation is a SAX word plus one trend bit per segment; the bit is the
sign of the least-squares slope fitted to that segment's points.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import ndtri

from ._validation import check_alphabet_size, check_n_segments, check_series
from .exceptions import InvalidInputError

UP = True
DOWN = False

# Below this population standard deviation a series is treated as constant.
DEGENERATE_STD = 1e-12


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """A raw series with an optional integer class label."""

    values: np.ndarray
    label: int | None = None

    def __post_init__(self):
        arr = check_series(self.values)
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)
        if self.label is not None:
            object.__setattr__(self, "label", int(self.label))

    def __len__(self):
        return self.values.size


@dataclass(frozen=True, eq=False)
class BreakpointTable:
    """Gaussian breakpoints for an alphabet plus the symbol distance lookup.

    ``symbol_dist[r, c]`` is zero for equal or adjacent symbols and otherwise
    the gap between the upper breakpoint of the lower symbol and the lower
    breakpoint of the higher one.
    """

    alpha: int
    breakpoints: np.ndarray
    symbol_dist: np.ndarray = field(repr=False)

    def letters(self, symbols):
        return "".join(chr(ord("a") + int(s)) for s in symbols)


@lru_cache(maxsize=None)
def make_breakpoint_table(alpha):
    """Build the breakpoint table for alphabet size ``alpha`` (2..20).

    The breakpoints are the standard normal quantiles at ``i/alpha`` for
    ``i = 1..alpha-1``. The table is cached and its arrays are read-only.
    """
    alpha = check_alphabet_size(alpha)
    probs = np.arange(1, alpha) / alpha
    beta = ndtri(probs)
    # Exact symmetry about zero; ndtri(1-p) and -ndtri(p) can differ in the last ulp.
    beta = (beta - beta[::-1]) / 2.0

    dist = np.zeros((alpha, alpha))
    for r in range(alpha):
        for c in range(alpha):
            if abs(r - c) > 1:
                dist[r, c] = beta[max(r, c) - 1] - beta[min(r, c)]
    beta.setflags(write=False)
    dist.setflags(write=False)
    return BreakpointTable(alpha=alpha, breakpoints=beta, symbol_dist=dist)


@dataclass(frozen=True)
class SaxWord:
    """Symbol indices of one series, one byte per symbol."""

    data: bytes
    n: int
    alpha: int

    def __post_init__(self):
        m = len(self.data)
        if not 1 <= m <= self.n:
            raise InvalidInputError(f"word length {m} must be in [1, n={self.n}]")
        if max(self.data) >= self.alpha:
            raise InvalidInputError(f"symbol index out of range for alphabet size {self.alpha}")

    @classmethod
    def from_symbols(cls, symbols, n, alpha):
        return cls(bytes(np.asarray(symbols, dtype=np.uint8)), int(n), int(alpha))

    @property
    def symbols(self):
        return np.frombuffer(self.data, dtype=np.uint8)

    @property
    def m(self):
        return len(self.data)

    def __str__(self):
        return "".join(chr(ord("a") + s) for s in self.data)


@dataclass(frozen=True)
class TrendBits:
    """Per-segment trend directions, packed eight to a byte, little-endian bit order."""

    packed: bytes
    m: int

    @classmethod
    def from_bools(cls, bits):
        bits = np.asarray(bits, dtype=bool)
        if bits.ndim != 1:
            raise InvalidInputError("trend bits must be one-dimensional")
        return cls(np.packbits(bits, bitorder="little").tobytes(), int(bits.size))

    @property
    def bits(self):
        raw = np.frombuffer(self.packed, dtype=np.uint8)
        return np.unpackbits(raw, count=self.m, bitorder="little").astype(bool)

    def __len__(self):
        return self.m

    def __str__(self):
        return "".join("↗" if b else "↘" for b in self.bits)


@dataclass(frozen=True)
class TsaxRepresentation:
    word: SaxWord
    trends: TrendBits

    def __post_init__(self):
        if self.word.m != self.trends.m:
            raise InvalidInputError(
                f"symbolic part has {self.word.m} segments but trend part has {self.trends.m}"
            )

    @property
    def m(self):
        return self.word.m

    @property
    def n(self):
        return self.word.n

    @property
    def alpha(self):
        return self.word.alpha

    def as_vector(self):
        """Flat ``[w_1 .. w_m, tr_1 .. tr_m]`` layout as a uint8 array."""
        return np.concatenate([self.word.symbols, self.trends.bits.astype(np.uint8)])


def z_normalize(series):
    """Zero mean, unit population standard deviation.

    A series whose standard deviation is below ``DEGENERATE_STD`` maps to all
    zeros instead of raising.
    """
    x = check_series(series)
    std = x.std()
    if std < DEGENERATE_STD:
        return np.zeros_like(x)
    return (x - x.mean()) / std


def segment_bounds(n, m):
    """Start/stop offsets of ``m`` contiguous segments covering ``range(n)``.

    Sizes differ by at most one; the larger segments come first.
    """
    m = check_n_segments(m, n)
    size, extra = divmod(n, m)
    sizes = np.full(m, size, dtype=np.int64)
    sizes[:extra] += 1
    stops = np.cumsum(sizes)
    return np.column_stack([stops - sizes, stops])


def paa_transform(series, m):
    """Mean of each of ``m`` segments."""
    x = check_series(series)
    n = x.size
    m = check_n_segments(m, n)
    if n % m == 0:
        return x.reshape(m, n // m).mean(axis=1)
    return np.array([x[a:b].mean() for a, b in segment_bounds(n, m)])


def symbolize(paa, table, n=None):
    """Map PAA coefficients to symbol indices.

    A coefficient equal to a breakpoint takes the lower symbol. ``n`` is the
    length of the series the coefficients came from (defaults to ``len(paa)``).
    """
    coeffs = np.asarray(paa, dtype=np.float64)
    if coeffs.ndim != 1 or coeffs.size == 0:
        raise InvalidInputError("PAA coefficients must be a non-empty 1-D vector")
    if not np.all(np.isfinite(coeffs)):
        raise InvalidInputError("PAA coefficients contain NaN or infinite values")
    symbols = np.searchsorted(table.breakpoints, coeffs, side="left")
    return SaxWord.from_symbols(symbols, coeffs.size if n is None else n, table.alpha)


def segment_trend(segment):
    """Direction of the least-squares line through ``segment`` (x = 1..len).

    Returns ``UP`` for a positive or zero slope and ``DOWN`` for a negative one.
    """
    y = check_series(segment, name="segment")
    if y.size < 2:
        raise InvalidInputError("a trend needs at least two points")
    # Sign of the OLS slope is the sign of sum((x - mean(x)) * y).
    x = np.arange(1, y.size + 1, dtype=np.float64)
    return bool(np.dot(x - x.mean(), y) >= 0.0)


def _trend_bits(z, bounds):
    out = np.empty(len(bounds), dtype=bool)
    for i, (a, b) in enumerate(bounds):
        seg = z[a:b]
        # A one-point segment (m == n) has no slope; treat it like a flat one.
        out[i] = UP if seg.size < 2 else segment_trend(seg)
    return out


def sax_transform(series, m, table):
    """SAX word of a raw series: z-normalize, PAA, symbolize."""
    z = z_normalize(series)
    return symbolize(paa_transform(z, m), table, n=z.size)


def tsax_transform(series, m, table):
    """TSAX representation of a raw series.

    Trends are taken on the normalized values over the same segment
    boundaries as the PAA step; slope signs are unaffected by normalization.
    """
    z = z_normalize(series)
    word = symbolize(paa_transform(z, m), table, n=z.size)
    bounds = segment_bounds(z.size, m)
    return TsaxRepresentation(word, TrendBits.from_bools(_trend_bits(z, bounds)))


def transform_batch(X, m, table, *, trends=True):
    """SAX symbols and trend bits for every row of a 2-D array.

    Returns ``(symbols, bits)``: a uint8 (rows, m) matrix and a bool (rows, m)
    matrix, or ``None`` for ``bits`` when ``trends`` is false. Rows are
    processed exactly as :func:`tsax_transform` would process them one by one.
    """
    X = np.asarray(X, dtype=np.float64)
    n = X.shape[1]
    m = check_n_segments(m, n)
    std = X.std(axis=1)
    flat = std < DEGENERATE_STD
    Z = (X - X.mean(axis=1, keepdims=True)) / np.where(flat, 1.0, std)[:, None]
    Z[flat] = 0.0

    bounds = segment_bounds(n, m)
    if n % m == 0:
        paa = Z.reshape(len(Z), m, n // m).mean(axis=2)
    else:
        paa = np.column_stack([Z[:, a:b].mean(axis=1) for a, b in bounds])
    symbols = np.searchsorted(table.breakpoints, paa, side="left").astype(np.uint8)
    if not trends:
        return symbols, None

    bits = np.empty((len(Z), m), dtype=bool)
    for i, (a, b) in enumerate(bounds):
        if b - a < 2:
            bits[:, i] = UP
            continue
        x = np.arange(1, b - a + 1, dtype=np.float64)
        bits[:, i] = Z[:, a:b] @ (x - x.mean()) >= 0.0
    return symbols, bits
