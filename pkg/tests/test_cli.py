import shlex
import sys

import pytest

from limitgen.cmd.limitgen.main import main
from limitgen.cmd.limitgen.subcommands import refute
from limitgen.pkg.errors import ClosureError, RefutationError


@pytest.fixture
def col(collections_dir):
    return lambda name: str(collections_dir / name)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_closure_command(capsys, col):
    code, out, _ = run(capsys, "closure", "--collection", col("c_ex.col"), "--noise", "1", "--set", "(0,2)")
    assert code == 0
    assert out.splitlines() == [
        "closure: finite:4 {(0,0),(0,1),(1,0),(1,1)}",
        "consistent: L1 L2",
    ]


def test_closure_command_on_columns(capsys, col):
    code, out, _ = run(
        capsys, "closure", "--collection", col("columns.col"), "--noise", "1", "--set", "(0,0) (0,1) (2,5)", "--window", "5"
    )
    assert code == 0
    assert out.splitlines() == [
        "closure: infinite blocks{0}",
        "consistent: column-unions missing at most 1 of hits {0:2,2:1}",
        "window 5: (0,0) (0,1) (0,2)",
    ]


def test_closure_command_empty_consistent(capsys, col):
    code, out, _ = run(capsys, "closure", "--collection", col("c_ex.col"), "--noise", "0", "--set", "(5,5)")
    assert code == 0
    assert out.splitlines() == ["closure: empty-consistent", "consistent: (none)"]


@pytest.mark.parametrize(
    "name,noise,extra,verdict",
    [
        ("c_ex.col", "0", [], "verdict: Exact 4"),
        ("c_ex.col", "1", [], "verdict: Exact 6"),
        ("c_sh.col", "2", [], "verdict: Exact 8"),
        ("columns.col", "1", ["--max-size", "20"], "verdict: AtLeast 20"),
        ("l1_only.col", "0", [], "verdict: NoWitness"),
    ],
)
def test_dim_command(capsys, col, name, noise, extra, verdict):
    code, out, _ = run(capsys, "dim", "--collection", col(name), "--noise", noise, *extra)
    assert code == 0
    assert out.splitlines()[0] == verdict


def test_play_writes_golden_trace(capsys, col, tmp_path, golden_dir):
    out_path = tmp_path / "run.trace"
    argv = [
        "play", "--collection", col("c_ex.col"), "--target", "L1", "--noise", "1",
        "--noise-strings", "(2,0)", "--steps", "10", "--trace", str(out_path),
    ]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == "settle_time: 0 promised_tstar: 6\n"
    golden = (golden_dir / "c_ex_closure_l1.trace").read_text(encoding="utf-8")
    assert out_path.read_text(encoding="utf-8") == golden

    code, out, _ = run(capsys, *argv[:-2])
    assert out == golden + "settle_time: 0 promised_tstar: 6\n"


def test_play_chain(capsys, col):
    code, out, _ = run(
        capsys, "play", "--generator", "chain", "--chain", col("chain_d.yaml"), "--target", "P2",
        "--noise-strings", "(20,0)", "--steps", "12",
    )
    assert code == 0
    assert out.splitlines()[-1].endswith("promised_tstar: 5")
    assert "#! generator=chain" in out.splitlines()


def test_play_first_column_without_noise(capsys, col):
    for seed in range(20):
        code, out, _ = run(
            capsys, "play", "--collection", col("columns.col"), "--generator", "first-column", "--target", "0,2",
            "--noise", "0", "--schedule", "random:5", "--seed", str(seed), "--steps", "10",
        )
        assert code == 0
        assert out.splitlines()[-1] == "settle_time: 0 promised_tstar: 0"


def test_play_closure_on_columns_has_no_promise(capsys, col):
    code, out, _ = run(
        capsys, "play", "--collection", col("columns.col"), "--target", "0", "--noise", "1", "--steps", "4"
    )
    assert code == 0
    assert out.splitlines()[-1].endswith("promised_tstar: none")


@pytest.mark.parametrize(
    "argv",
    [
        ["play", "--collection", "c_ex.col", "--target", "L9", "--noise", "1"],
        ["play", "--collection", "c_ex.col", "--target", "L1", "--noise", "1", "--noise-strings", "(1,0)"],
        ["play", "--collection", "c_ex.col", "--target", "L1"],
        ["play", "--target", "L1", "--noise", "1"],
        ["play", "--collection", "c_ex.col", "--target", "L1", "--noise", "1", "--generator", "bogus"],
        ["play", "--collection", "c_ex.col", "--target", "L1", "--noise", "1", "--schedule", "sometimes"],
        ["closure", "--collection", "missing.col", "--noise", "1"],
        ["closure", "--collection", "c_ex.col", "--noise", "1", "--set", "(0,1),(0,2)"],
        ["dim", "--collection", "c_ex.col", "--noise", "-1"],
        ["check", "--suite", "bogus"],
        ["refute", "--horizon", "0"],
        ["refute", "--generator", "bogus"],
    ],
)
def test_usage_errors(capsys, collections_dir, argv):
    argv = [str(collections_dir / a) if a.endswith(".col") else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("Error: ")


def test_argparse_errors_exit_with_usage_code(capsys):
    assert main(["closure"]) == 2
    assert main([]) == 2


def test_refute_closure_generator(capsys):
    code, out, _ = run(capsys, "refute", "--horizon", "6", "--iterations", "5", "--seed", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "horizon: 6 iterations: 5 seed: 3"
    assert lines[1] == "case: concentrated"
    assert lines[-1] == "refuted: 5"


def test_refute_longer_horizon(capsys):
    code, out, _ = run(capsys, "refute", "--horizon", "12")
    assert code == 0
    assert int(out.splitlines()[-1].split()[-1]) >= 8


def test_refute_external_generator(capsys):
    command = f"{shlex.quote(sys.executable)} -m limitgen.internal.pipe_generators fresh-column"
    code, out, _ = run(capsys, "refute", "--horizon", "6", "--generator", f"external:{command}")
    assert code == 0
    assert "case: scattered" in out.splitlines()
    assert out.splitlines()[-1] == "refuted: 5"


def test_refute_inconclusive(capsys):
    code, out, _ = run(capsys, "refute", "--horizon", "1")
    assert code == 3
    assert out.splitlines()[-1] == "result: inconclusive, increase horizon"


def test_refute_is_deterministic(capsys):
    assert run(capsys, "refute", "--horizon", "8") == run(capsys, "refute", "--horizon", "8")


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", "--suite", "closure", "--trials", "10", "--seed", "1")
    assert code == 0
    assert out.splitlines()[0] == "suite: closure trials: 10 seed: 1"
    assert out.splitlines()[-1] == "result: ok"


def test_check_list_and_version(capsys):
    code, out, _ = run(capsys, "check", "--list")
    assert code == 0
    assert "  - refutation" in out.splitlines()
    code, out, _ = run(capsys, "version")
    assert out.startswith("limitgen ")


@pytest.mark.parametrize("error", [RefutationError("L drifted"), ClosureError("constructed witness lost a language")])
def test_invariant_violations_exit_with_failure_code(capsys, monkeypatch, error):
    def broken(*args, **kwargs):
        raise error

    monkeypatch.setattr(refute, "run_refutation", broken)
    code, _, err = run(capsys, "refute", "--horizon", "6")
    assert code == 1
    assert err.startswith("Error: ")
