"""SAX vs TSAX comparison runs over UCR-format datasets.

For every dataset the SAX words and trend bits are computed once. Both error
rates come from the same MINDIST values; the TSAX ranking adds
``rew * k1 + pen * k2`` to them.
"""

import csv
import hashlib
import io
import logging
import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._validation import check_alphabet_size, segments_for_ratio
from .datasets import UCR_SUFFIXES, dataset_name, generate_trend_pair_dataset, parse_ucr_text
from .distances import TsaxDistanceParams, pairwise_sax_mindist, pairwise_trend_mismatches
from .encoding import read_representation, write_representation
from .exceptions import InvalidInputError, InvalidParameterError
from .representation import SaxWord, TrendBits, TsaxRepresentation, make_breakpoint_table, transform_batch

log = logging.getLogger(__name__)

PROTOCOLS = ("loo", "train-test")
REPORT_HEADER = ["dataset", "n_series", "classes", "length", "sax_error", "tsax_error", "winner"]
SCATTER_HEADER = ["dataset", "sax_error", "tsax_error"]


@dataclass
class ExperimentConfig:
    """Settings of one comparison run. Defaults are alpha=4, n/m=4, rew=-1, pen=1, LOO."""

    alpha: int = 4
    segment_ratio: int = 4
    rew: float = -1.0
    pen: float = 1.0
    protocol: str = "loo"
    data: tuple = ()
    names: tuple = ()
    out: Path | None = None
    scatter: Path | None = None
    seed: int = 0
    synthetic: bool = False
    cache_dir: Path | None = None

    def validate(self):
        check_alphabet_size(self.alpha)
        segments_for_ratio(1, self.segment_ratio)
        TsaxDistanceParams(self.rew, self.pen)
        if self.protocol not in PROTOCOLS:
            raise InvalidParameterError(f"protocol must be one of {PROTOCOLS}, got {self.protocol!r}")


@dataclass(frozen=True)
class ReportRow:
    dataset: str
    n_series: int
    classes: int
    length: int
    sax_errors: int
    tsax_errors: int

    @property
    def sax_error(self):
        return self.sax_errors / self.n_series

    @property
    def tsax_error(self):
        return self.tsax_errors / self.n_series

    @property
    def winner(self):
        # Both rates share a denominator, so compare the integer counts.
        if self.tsax_errors < self.sax_errors:
            return "TSAX"
        if self.sax_errors < self.tsax_errors:
            return "SAX"
        return "TIE"


@dataclass
class ExperimentReport:
    rows: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def _count(self, winner):
        return sum(1 for r in self.rows if r.winner == winner)

    @property
    def tsax_wins(self):
        return self._count("TSAX")

    @property
    def sax_wins(self):
        return self._count("SAX")

    @property
    def ties(self):
        return self._count("TIE")

    def row(self, name):
        for r in self.rows:
            if r.dataset == name:
                return r
        raise KeyError(name)


@dataclass(frozen=True)
class DatasetSource:
    name: str
    path: Path | None
    train_path: Path | None = None
    error: str | None = None


def _find_split(directory, name, split):
    for suffix in UCR_SUFFIXES:
        candidate = directory / f"{name}_{split}{suffix}"
        if candidate.is_file():
            return candidate
    return None


def _train_sibling(path):
    stem = path.stem
    idx = stem.upper().rfind("_TEST")
    if idx < 0:
        return None
    return path.with_name(stem[:idx] + "_TRAIN" + stem[idx + 5 :] + path.suffix)


def resolve_sources(paths, protocol="loo", names=()):
    """Expand ``--data`` paths into dataset sources.

    A path may be a single UCR file, a dataset directory holding
    ``<Name>_TEST.<ext>``, or an archive root with one such directory per
    dataset. With ``names``, only those datasets are kept, in that order.
    """
    sources = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            test = _find_split(path, path.name, "TEST")
            if test is not None:
                sources.append(DatasetSource(path.name, test))
                continue
            found = [
                DatasetSource(sub.name, t)
                for sub in sorted(path.iterdir())
                if sub.is_dir() and (t := _find_split(sub, sub.name, "TEST")) is not None
            ]
            if not found:
                sources.append(DatasetSource(path.name, None, error=f"no UCR datasets under {path}"))
            sources.extend(found)
        else:
            sources.append(DatasetSource(dataset_name(path), path))

    if protocol == "train-test":
        sources = [
            s if s.path is None else DatasetSource(s.name, s.path, _train_sibling(s.path), s.error)
            for s in sources
        ]
    if names:
        by_name = {s.name: s for s in sources}
        sources = [
            by_name.get(n, DatasetSource(n, None, error=f"dataset {n} not found")) for n in names
        ]
    return sources


class RepresentationCache:
    """On-disk cache of per-dataset SAX/TSAX representations.

    Entries are keyed by the SHA-256 of the source file's bytes together with
    the alphabet size and segment ratio. Each file holds a u32 record count
    followed by records in the :mod:`tsax.encoding` layout.
    """

    def __init__(self, directory):
        self.directory = Path(directory)

    def _path(self, digest, alpha, ratio):
        return self.directory / f"{digest[:24]}_a{alpha}_r{ratio}.tsxc"

    def load(self, digest, alpha, ratio):
        path = self._path(digest, alpha, ratio)
        if not path.is_file():
            return None
        with open(path, "rb") as fh:
            (count,) = struct.unpack("<I", fh.read(4))
            reps = [read_representation(fh) for _ in range(count)]
        symbols = np.array([r.word.symbols for r in reps], dtype=np.uint8)
        bits = np.array([r.trends.bits for r in reps], dtype=bool)
        return symbols, bits

    def store(self, digest, alpha, ratio, symbols, bits, n):
        self.directory.mkdir(parents=True, exist_ok=True)
        buf = io.BytesIO()
        buf.write(struct.pack("<I", len(symbols)))
        for s, b in zip(symbols, bits):
            rep = TsaxRepresentation(SaxWord.from_symbols(s, n, alpha), TrendBits.from_bools(b))
            write_representation(rep, buf)
        path = self._path(digest, alpha, ratio)
        tmp = path.with_suffix(".tmp")
        tmp.write_bytes(buf.getvalue())
        tmp.replace(path)


def _load(path, cache, config):
    data = Path(path).read_bytes()
    dataset = parse_ucr_text(data.decode(), dataset_name(path), path)
    m = segments_for_ratio(dataset.length, config.segment_ratio)
    table = make_breakpoint_table(config.alpha)
    reps = None
    if cache is not None:
        digest = hashlib.sha256(data).hexdigest()
        reps = cache.load(digest, config.alpha, config.segment_ratio)
        if reps is not None and reps[0].shape != (len(dataset), m):
            reps = None
    if reps is None:
        reps = transform_batch(dataset.X, m, table)
        if cache is not None:
            cache.store(digest, config.alpha, config.segment_ratio, *reps, dataset.length)
    return dataset, reps


def compare(queries, references, n, config, *, loo, chunk=512):
    """Error counts of SAX and TSAX 1NN for one dataset.

    ``queries`` and ``references`` are ``(symbols, bits, labels)`` triples.
    With ``loo`` they must be the same set and self-matches are skipped.
    Queries are processed ``chunk`` rows at a time to bound memory.
    """
    qs, qb, qy = queries
    rs, rb, ry = references
    table = make_breakpoint_table(config.alpha)
    m = qs.shape[1]
    sax_wrong = tsax_wrong = 0
    for start in range(0, len(qs), chunk):
        rows = slice(start, start + chunk)
        base = pairwise_sax_mindist(qs[rows], rs, table, n)
        k2 = pairwise_trend_mismatches(qb[rows], rb)
        trend = base + config.rew * (m - k2) + config.pen * k2
        if loo:
            idx = np.arange(base.shape[0])
            base[idx, idx + start] = np.inf
            trend[idx, idx + start] = np.inf
        sax_wrong += int(np.count_nonzero(ry[np.argmin(base, axis=1)] != qy[rows]))
        tsax_wrong += int(np.count_nonzero(ry[np.argmin(trend, axis=1)] != qy[rows]))
    return sax_wrong, tsax_wrong


def compare_dataset(test, config, train=None, test_reps=None, train_reps=None):
    """Build the report row for one in-memory dataset."""
    m = segments_for_ratio(test.length, config.segment_ratio)
    table = make_breakpoint_table(config.alpha)
    if test_reps is None:
        test_reps = transform_batch(test.X, m, table)
    queries = (*test_reps, test.y)
    if train is None:
        if len(test) < 2:
            raise InvalidInputError(f"{test.name}: leave-one-out needs at least two series")
        sax, tsax = compare(queries, queries, test.length, config, loo=True)
    else:
        if train.length != test.length:
            raise InvalidInputError(
                f"{test.name}: train length {train.length} differs from test length {test.length}"
            )
        if train_reps is None:
            train_reps = transform_batch(train.X, m, table)
        sax, tsax = compare(queries, (*train_reps, train.y), test.length, config, loo=False)
    return ReportRow(test.name, len(test), test.class_count, test.length, sax, tsax)


def run_comparison(config, datasets=()):
    """Run SAX and TSAX over every configured dataset.

    ``datasets`` are extra in-memory :class:`LabeledDataset` objects (always
    evaluated leave-one-out). A dataset that fails to load or evaluate is
    recorded in ``report.failures`` and the batch continues.
    """
    config.validate()
    cache = RepresentationCache(config.cache_dir) if config.cache_dir else None
    report = ExperimentReport()

    in_memory = list(datasets)
    if config.synthetic:
        in_memory.append(generate_trend_pair_dataset(seed=config.seed))
    for ds in in_memory:
        try:
            report.rows.append(compare_dataset(ds, config))
        except (ValueError, MemoryError) as exc:
            log.error("%s: %s", ds.name, exc)
            report.failures.append((ds.name, str(exc)))

    for source in resolve_sources(config.data, config.protocol, config.names):
        try:
            if source.error:
                raise InvalidInputError(source.error)
            test, test_reps = _load(source.path, cache, config)
            train = train_reps = None
            if config.protocol == "train-test":
                if source.train_path is None or not source.train_path.is_file():
                    raise InvalidInputError(f"no training split found for {source.path}")
                train, train_reps = _load(source.train_path, cache, config)
            row = compare_dataset(test, config, train, test_reps, train_reps)
        except (OSError, ValueError, UnicodeDecodeError, MemoryError) as exc:
            log.error("%s: %s", source.name, exc)
            report.failures.append((source.name, str(exc)))
            continue
        log.info(
            "%s: sax=%.3f tsax=%.3f (%s)", row.dataset, row.sax_error, row.tsax_error, row.winner
        )
        report.rows.append(row)
    return report


def format_report_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_HEADER)
    for r in report.rows:
        writer.writerow(
            [r.dataset, r.n_series, r.classes, r.length, f"{r.sax_error:.3f}", f"{r.tsax_error:.3f}", r.winner]
        )
    for name, message in report.failures:
        buf.write(f"# failed {name}: {message}\n")
    buf.write(f"# tsax_wins={report.tsax_wins},sax_wins={report.sax_wins},ties={report.ties}\n")
    return buf.getvalue()


def write_report_csv(report, path):
    """Write the per-dataset table with a trailing ``# tsax_wins=..`` tally line."""
    if not report.rows:
        raise InvalidInputError("report has no rows")
    Path(path).write_text(format_report_csv(report))


def write_scatter_csv(report, path):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCATTER_HEADER)
    for r in report.rows:
        writer.writerow([r.dataset, f"{r.sax_error:.3f}", f"{r.tsax_error:.3f}"])
    Path(path).write_text(buf.getvalue())
