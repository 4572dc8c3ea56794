"""UCR text-format I/O and synthetic trend fixtures."""

import math
from pathlib import Path

import numpy as np

from ._validation import segments_for_ratio
from .classify import LabeledDataset
from .exceptions import InvalidInputError, InvalidParameterError, UcrFormatError
from .representation import segment_bounds

UCR_SUFFIXES = (".tsv", ".txt", ".csv", "")


def _detect_delimiter(line):
    if "\t" in line:
        return "\t"
    if "," in line:
        return ","
    return None  # runs of spaces, as in the older archive releases


def _parse_field(token, path, lineno, column):
    try:
        value = float(token)
    except ValueError:
        raise UcrFormatError(f"non-numeric field {token!r}", path, lineno, column) from None
    if not math.isfinite(value):
        raise UcrFormatError(f"non-finite field {token!r}", path, lineno, column)
    return value


def parse_ucr_text(text, name="dataset", path=None):
    """Parse UCR-format text: one series per line, class label first."""
    delimiter = None
    rows, labels = [], []
    width = None
    first_line = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if first_line is None:
            first_line = lineno
            delimiter = _detect_delimiter(line)
        tokens = line.strip().split(delimiter)
        if width is None:
            width = len(tokens)
            if width < 2:
                raise UcrFormatError("a row needs a label and at least one value", path, lineno)
        elif len(tokens) != width:
            raise UcrFormatError(
                f"row has {len(tokens)} fields, expected {width} (as on line {first_line})",
                path,
                lineno,
            )
        values = [_parse_field(tok, path, lineno, col) for col, tok in enumerate(tokens, start=1)]
        labels.append(int(values[0]))
        rows.append(values[1:])
    if not rows:
        raise InvalidInputError(f"{path or name}: no data rows")
    return LabeledDataset(np.array(rows), np.array(labels, dtype=np.int64), name)


def dataset_name(path):
    stem = Path(path).stem
    for suffix in ("_TEST", "_TRAIN"):
        if stem.upper().endswith(suffix):
            return stem[: -len(suffix)]
    return stem


def parse_ucr_file(path, name=None):
    """Load a UCR file into a :class:`LabeledDataset`.

    Tab, comma and whitespace delimiters are detected from the first data
    line. Labels written as reals (``1.0000000e+00``) are truncated to int.
    """
    path = Path(path)
    text = path.read_text()
    return parse_ucr_text(text, name or dataset_name(path), path)


def write_ucr_file(dataset, path, delimiter="\t"):
    """Write ``dataset`` so that :func:`parse_ucr_file` reads back identical values."""
    with open(path, "w") as fh:
        for label, row in zip(dataset.y, dataset.X):
            fh.write(delimiter.join([str(int(label))] + [repr(float(v)) for v in row]))
            fh.write("\n")


def generate_trend_pair_dataset(per_class=20, length=64, noise=0.1, seed=None, segment_length=4):
    """Two classes that share segment means but have opposite segment trends.

    Each pair draws random segment levels. The class-1 member rises by one
    unit per point inside every segment; its class-2 mirror is the same
    series with every segment reversed, so it falls inside each segment
    while keeping the same segment means. Independent uniform noise in
    ``[-noise, noise]`` is then added to both. Series are interleaved as
    ``[c1, c2, c1, c2, ...]``.

    Segments follow :func:`segment_bounds` for ``length // segment_length``
    segments, the layout used by a SAX transform at ratio ``segment_length``.
    """
    if per_class < 1:
        raise InvalidParameterError(f"per_class must be at least 1, got {per_class}")
    if length < 8:
        raise InvalidParameterError(f"length must be at least 8, got {length}")
    if noise < 0 or noise >= 0.5:
        raise InvalidParameterError(f"noise must be in [0, 0.5), got {noise}")
    rng = np.random.default_rng(seed)
    bounds = segment_bounds(length, segments_for_ratio(length, segment_length))

    X = np.empty((2 * per_class, length))
    for k in range(per_class):
        levels = rng.uniform(-3.0, 3.0, size=len(bounds))
        rising = np.empty(length)
        for level, (a, b) in zip(levels, bounds):
            rising[a:b] = level + np.arange(b - a) - (b - a - 1) / 2.0
        falling = rising.copy()
        for a, b in bounds:
            falling[a:b] = rising[a:b][::-1]
        X[2 * k] = rising + rng.uniform(-noise, noise, size=length)
        X[2 * k + 1] = falling + rng.uniform(-noise, noise, size=length)
    y = np.tile([1, 2], per_class)
    return LabeledDataset(X, y, name="TrendPairs")
