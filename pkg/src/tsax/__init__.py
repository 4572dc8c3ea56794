"""SAX and trend-augmented SAX (TSAX) for time-series classification."""

from .classify import EvalResult, LabeledDataset, classify_1nn, evaluate_loo, evaluate_train_test
from .distances import (
    TrendMatchCounts,
    TsaxDistanceParams,
    sax_mindist,
    trend_match_counts,
    tsax_dist,
)
from .encoding import rle_decode, rle_encode
from .estimators import SAXTransformer, SymbolicNNClassifier, TSAXTransformer
from .exceptions import (
    IncompatibleRepresentationError,
    InvalidInputError,
    InvalidParameterError,
    UcrFormatError,
)
from .representation import (
    DOWN,
    UP,
    BreakpointTable,
    SaxWord,
    TimeSeries,
    TrendBits,
    TsaxRepresentation,
    make_breakpoint_table,
    paa_transform,
    sax_transform,
    segment_trend,
    symbolize,
    tsax_transform,
    z_normalize,
)

__version__ = "0.1.0"

__all__ = [
    "DOWN",
    "UP",
    "BreakpointTable",
    "EvalResult",
    "IncompatibleRepresentationError",
    "InvalidInputError",
    "InvalidParameterError",
    "LabeledDataset",
    "SAXTransformer",
    "SaxWord",
    "SymbolicNNClassifier",
    "TSAXTransformer",
    "TimeSeries",
    "TrendBits",
    "TrendMatchCounts",
    "TsaxDistanceParams",
    "TsaxRepresentation",
    "UcrFormatError",
    "classify_1nn",
    "evaluate_loo",
    "evaluate_train_test",
    "make_breakpoint_table",
    "paa_transform",
    "rle_decode",
    "rle_encode",
    "sax_mindist",
    "sax_transform",
    "segment_trend",
    "symbolize",
    "trend_match_counts",
    "tsax_dist",
    "tsax_transform",
    "z_normalize",
]
