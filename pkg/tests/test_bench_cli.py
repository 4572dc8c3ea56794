import numpy as np
import pytest

from tsax import LabeledDataset, SymbolicNNClassifier, evaluate_loo, evaluate_train_test
from tsax.bench import (
    ExperimentConfig,
    ExperimentReport,
    ReportRow,
    format_report_csv,
    resolve_sources,
    run_comparison,
    write_report_csv,
    write_scatter_csv,
)
from tsax.cli import main
from tsax.datasets import generate_trend_pair_dataset, parse_ucr_file, write_ucr_file


def _random_dataset(rng, name, s=24, n=48, classes=3):
    X = rng.normal(size=(s, n)).cumsum(axis=1)
    return LabeledDataset(X, rng.integers(1, classes + 1, s), name)


@pytest.fixture
def archive(tmp_path, rng):
    """A small UCR-2018-style archive: <root>/<Name>/<Name>_{TRAIN,TEST}.tsv"""
    root = tmp_path / "archive"
    for name, n in [("Alpha", 48), ("Beta", 61), ("Gamma", 32)]:
        (root / name).mkdir(parents=True)
        write_ucr_file(_random_dataset(rng, name, n=n), root / name / f"{name}_TEST.tsv")
        write_ucr_file(_random_dataset(rng, name, s=12, n=n), root / name / f"{name}_TRAIN.tsv")
    return root


def test_report_row_format():
    rep = ExperimentReport([ReportRow("Beef", 30, 5, 470, 20, 5), ReportRow("Tie", 10, 2, 8, 3, 3)])
    lines = format_report_csv(rep).splitlines()
    assert lines[0] == "dataset,n_series,classes,length,sax_error,tsax_error,winner"
    assert lines[1] == "Beef,30,5,470,0.667,0.167,TSAX"
    assert lines[2] == "Tie,10,2,8,0.300,0.300,TIE"
    assert lines[-1] == "# tsax_wins=1,sax_wins=0,ties=1"


def test_tally_sums_to_rows():
    rows = [ReportRow(str(i), 10, 2, 8, i % 3, 1) for i in range(50)]
    rep = ExperimentReport(rows)
    assert rep.tsax_wins + rep.sax_wins + rep.ties == 50


def test_write_empty_report_rejected(tmp_path):
    with pytest.raises(ValueError):
        write_report_csv(ExperimentReport(), tmp_path / "r.csv")


def test_resolve_sources(archive):
    names = [s.name for s in resolve_sources([archive])]
    assert names == ["Alpha", "Beta", "Gamma"]
    assert [s.name for s in resolve_sources([archive / "Beta"])] == ["Beta"]
    tt = resolve_sources([archive / "Beta" / "Beta_TEST.tsv"], "train-test")[0]
    assert tt.train_path == archive / "Beta" / "Beta_TRAIN.tsv"
    picked = resolve_sources([archive], names=("Gamma", "Alpha", "Nope"))
    assert [s.name for s in picked] == ["Gamma", "Alpha", "Nope"]
    assert picked[2].error


def test_bench_matches_estimator_paths(archive):
    report = run_comparison(ExperimentConfig(data=(archive,)))
    for row in report.rows:
        ds = parse_ucr_file(archive / row.dataset / f"{row.dataset}_TEST.tsv")
        assert row.sax_errors == evaluate_loo(ds, SymbolicNNClassifier(method="sax")).n_errors
        assert row.tsax_errors == evaluate_loo(ds).n_errors
        assert (row.n_series, row.length, row.classes) == (len(ds), ds.length, ds.class_count)

    report = run_comparison(ExperimentConfig(data=(archive,), protocol="train-test"))
    for row in report.rows:
        test = parse_ucr_file(archive / row.dataset / f"{row.dataset}_TEST.tsv")
        train = parse_ucr_file(archive / row.dataset / f"{row.dataset}_TRAIN.tsv")
        assert row.tsax_errors == evaluate_train_test(train, test).n_errors
        assert row.sax_errors == evaluate_train_test(train, test, SymbolicNNClassifier(method="sax")).n_errors


def test_sax_column_ignores_trend_weights(archive):
    a = run_comparison(ExperimentConfig(data=(archive,)))
    b = run_comparison(ExperimentConfig(data=(archive,), rew=-3.0, pen=0.25))
    assert [r.sax_errors for r in a.rows] == [r.sax_errors for r in b.rows]


def test_zero_weights_equalise_columns(archive):
    report = run_comparison(ExperimentConfig(data=(archive,), rew=0.0, pen=0.0, synthetic=True))
    assert len(report.rows) == 4
    assert all(r.sax_errors == r.tsax_errors for r in report.rows)


def test_synthetic_fixture_favours_tsax():
    row = run_comparison(ExperimentConfig(synthetic=True, seed=7)).rows[0]
    assert row.tsax_error <= row.sax_error
    assert row.tsax_error == 0.0


def test_failures_are_isolated(archive, tmp_path):
    bad = tmp_path / "Bad_TEST.tsv"
    bad.write_text("1\t2\t3\n1\t2\n")
    report = run_comparison(ExperimentConfig(data=(bad, archive / "Alpha", tmp_path / "missing.tsv")))
    assert [r.dataset for r in report.rows] == ["Alpha"]
    assert [f[0] for f in report.failures] == ["Bad", "missing"]
    assert "# failed Bad:" in format_report_csv(report)


def test_cache_reuse(archive, tmp_path):
    cache = tmp_path / "cache"
    a = run_comparison(ExperimentConfig(data=(archive,), cache_dir=cache))
    files = sorted(cache.iterdir())
    assert len(files) == 3
    mtimes = [f.stat().st_mtime_ns for f in files]
    b = run_comparison(ExperimentConfig(data=(archive,), cache_dir=cache, rew=-2.0))
    assert [f.stat().st_mtime_ns for f in sorted(cache.iterdir())] == mtimes
    c = run_comparison(ExperimentConfig(data=(archive,), rew=-2.0))
    assert b.rows == c.rows
    assert [r.sax_errors for r in a.rows] == [r.sax_errors for r in b.rows]


class TestCli:
    def test_synthetic_run_writes_both_files(self, tmp_path):
        out = tmp_path / "report.csv"
        assert main(["--synthetic", "--seed", "3", "--out", str(out)]) == 0
        assert out.read_text().startswith("dataset,n_series,classes,length,sax_error,tsax_error,winner\n")
        scatter = (tmp_path / "report_scatter.csv").read_text().splitlines()
        assert scatter[0] == "dataset,sax_error,tsax_error"
        assert scatter[1].startswith("TrendPairs,")

    def test_byte_identical_reruns(self, archive, tmp_path):
        outs = []
        for i in range(2):
            out = tmp_path / f"r{i}.csv"
            assert main(["--data", str(archive), "--out", str(out)]) == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_stdout(self, archive, capsys):
        assert main(["--data", str(archive / "Alpha"), "--protocol", "train-test", "--alpha", "5"]) == 0
        assert capsys.readouterr().out.splitlines()[1].startswith("Alpha,24,")

    def test_usage_errors(self, capsys):
        assert _exit_code([]) == 1
        assert _exit_code(["--synthetic", "--alpha", "25"]) == 1
        assert _exit_code(["--synthetic", "--protocol", "kfold"]) == 1
        assert _exit_code(["--synthetic", "--ratio", "0"]) == 1

    def test_all_failed(self, tmp_path):
        assert main(["--data", str(tmp_path / "nothing.tsv")]) == 2

    def test_published_selection(self, archive, tmp_path):
        (archive / "Beef").mkdir()
        write_ucr_file(generate_trend_pair_dataset(per_class=3, length=16, seed=1), archive / "Beef" / "Beef_TEST.tsv")
        out = tmp_path / "p.csv"
        # 49 of the 50 published datasets are missing, so they are reported as failures.
        assert main(["--data", str(archive), "--published-datasets", "--out", str(out)]) == 0
        rows = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
        assert [r.split(",")[0] for r in rows[1:]] == ["Beef"]


def _exit_code(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_chunked_comparison_matches_whole(rng):
    from tsax.bench import compare
    from tsax.representation import make_breakpoint_table, transform_batch

    ds = _random_dataset(rng, "c", s=53, n=40)
    reps = (*transform_batch(ds.X, 10, make_breakpoint_table(4)), ds.y)
    cfg = ExperimentConfig()
    whole = compare(reps, reps, 40, cfg, loo=True)
    assert compare(reps, reps, 40, cfg, loo=True, chunk=7) == whole
    clf = SymbolicNNClassifier().fit(ds.X, ds.y)
    D = clf.distance_matrix()
    np.fill_diagonal(D, np.inf)
    assert np.array_equal(clf._nearest(clf.symbols_, clf.trends_, offset=True, chunk=6), D.argmin(1))
    assert whole[1] == int(np.count_nonzero(ds.y[D.argmin(1)] != ds.y))
