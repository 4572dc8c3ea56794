"""Command line entry point: ``tsax-bench``.

Exit status is 0 on success, 1 on a usage error and 2 when every dataset
failed.
"""

import argparse
import logging
import sys
from pathlib import Path

from .bench import ExperimentConfig, format_report_csv, run_comparison, write_scatter_csv
from .exceptions import InvalidParameterError
from .reference import PUBLISHED_ERRORS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ALL_FAILED = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(
        prog="tsax-bench",
        description="Compare 1NN classification error of SAX and TSAX on UCR-format datasets.",
    )
    p.add_argument("--alpha", type=int, default=4, help="alphabet size (default: 4)")
    p.add_argument("--ratio", type=int, default=4, help="points per segment, n/m (default: 4)")
    p.add_argument("--rew", type=float, default=-1.0, help="reward per matching trend (default: -1)")
    p.add_argument("--pen", type=float, default=1.0, help="penalty per opposite trend (default: 1)")
    p.add_argument("--protocol", choices=["loo", "train-test"], default="loo")
    p.add_argument(
        "--data",
        nargs="+",
        default=[],
        metavar="PATH",
        help="UCR files, dataset directories or archive roots",
    )
    p.add_argument(
        "--names", nargs="+", default=[], metavar="NAME", help="only these datasets, in this order"
    )
    p.add_argument(
        "--published-datasets",
        action="store_true",
        help="select the 50 datasets with published SAX/TSAX errors from the --data archive",
    )
    p.add_argument("--out", type=Path, help="report CSV path (default: stdout)")
    p.add_argument("--scatter", type=Path, help="scatter CSV path (default: <out>_scatter.csv)")
    p.add_argument("--seed", type=int, default=0, help="seed for synthetic datasets")
    p.add_argument("--synthetic", action="store_true", help="also run the built-in trend-pair fixture")
    p.add_argument("--cache-dir", type=Path, help="directory for cached representations")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    if not args.data and not args.synthetic:
        parser.error("nothing to run: give --data PATH... or --synthetic")

    names = list(args.names)
    if args.published_datasets:
        names += [n for n in PUBLISHED_ERRORS if n not in names]
    scatter = args.scatter
    if scatter is None and args.out is not None:
        scatter = args.out.with_name(args.out.stem + "_scatter.csv")

    config = ExperimentConfig(
        alpha=args.alpha,
        segment_ratio=args.ratio,
        rew=args.rew,
        pen=args.pen,
        protocol=args.protocol,
        data=tuple(args.data),
        names=tuple(names),
        out=args.out,
        scatter=scatter,
        seed=args.seed,
        synthetic=args.synthetic,
        cache_dir=args.cache_dir,
    )
    try:
        config.validate()
    except InvalidParameterError as exc:
        parser.error(str(exc))

    report = run_comparison(config)
    if not report.rows:
        print("tsax-bench: every dataset failed", file=sys.stderr)
        return EXIT_ALL_FAILED

    text = format_report_csv(report)
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.write_text(text)
    if config.scatter is not None:
        write_scatter_csv(report, config.scatter)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
