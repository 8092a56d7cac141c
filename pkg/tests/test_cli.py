"""CLI behavior: flags, config files, precedence, exit codes, outputs."""

import pytest

from twinga.cli import load_config, main
from twinga.errors import ConfigError

FAST_ARGS = ["--set", "max_generations=2", "--set", "pop_size=8"]


def run_cli(argv):
    return main(argv)


def test_run_writes_three_csvs_and_summary(tmp_path, capsys):
    code = run_cli(
        ["run", "--function", "sphere", "--mode", "atga", "--trials", "2",
         "--seed", "7", "--out", str(tmp_path), *FAST_ARGS]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("sphere atga n_trials=2 ")
    for kind in ("generations", "trials", "summary"):
        assert (tmp_path / f"sphere_atga_7.{kind}.csv").exists()


def test_run_is_byte_identical_across_invocations(tmp_path):
    args = ["run", "--function", "rastrigin", "--mode", "sga", "--trials", "2",
            "--seed", "3", *FAST_ARGS]
    dir_a, dir_b = tmp_path / "a", tmp_path / "b"
    assert run_cli(args + ["--out", str(dir_a)]) == 0
    assert run_cli(args + ["--out", str(dir_b)]) == 0
    for path in sorted(dir_a.iterdir()):
        assert path.read_bytes() == (dir_b / path.name).read_bytes()


def test_run_unknown_function_exits_2_listing_presets(tmp_path, capsys):
    code = run_cli(["run", "--function", "ackley", "--mode", "sga", "--out", str(tmp_path)])
    assert code == 2
    err = capsys.readouterr().err
    assert "valid presets" in err
    assert "sphere" in err and "himmelblau" in err


def test_run_invalid_override_exits_2(tmp_path, capsys):
    code = run_cli(
        ["run", "--function", "sphere", "--mode", "sga", "--out", str(tmp_path),
         "--set", "k1=0.99"]
    )
    assert code == 2
    assert "gate" in capsys.readouterr().err


def test_run_requires_function_and_mode(capsys):
    assert run_cli(["run", "--mode", "sga"]) == 2
    assert run_cli(["run", "--function", "sphere"]) == 2


def test_load_config_minimal_and_overrides(tmp_path):
    path = tmp_path / "exp.cfg"
    path.write_text(
        "# experiment setup\n"
        "function = sphere\n"
        "mode = atga\n"
        "\n"
        "trials = 4\n"
        "k2 = 0.1   # short form of twin_prob_min\n",
        encoding="utf-8",
    )
    spec = load_config(path)
    assert spec.function == "sphere"
    assert spec.mode == "atga"
    assert spec.trials == 4
    assert spec.seed is None
    assert spec.overrides == {"k2": "0.1"}


def test_load_config_unknown_key_reports_line(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("function = sphere\nshenanigans = 1\n", encoding="utf-8")
    with pytest.raises(ConfigError) as excinfo:
        load_config(path)
    assert ":2:" in str(excinfo.value)
    assert "shenanigans" in str(excinfo.value)


def test_load_config_malformed_line(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("function sphere\n", encoding="utf-8")
    with pytest.raises(ConfigError) as excinfo:
        load_config(path)
    assert ":1:" in str(excinfo.value)


def test_config_file_constraint_violation_exits_2(tmp_path, capsys):
    path = tmp_path / "exp.cfg"
    path.write_text(
        "function = sphere\nmode = atga\nk1 = 0.9\nk1_prime = 0.6\n", encoding="utf-8"
    )
    code = run_cli(["run", "--config", str(path), "--out", str(tmp_path)])
    assert code == 2
    assert "gate" in capsys.readouterr().err


def test_flags_override_config_file(tmp_path, capsys):
    path = tmp_path / "exp.cfg"
    path.write_text("function = sphere\nmode = sga\ntrials = 3\n", encoding="utf-8")
    code = run_cli(
        ["run", "--config", str(path), "--mode", "atga", "--trials", "2",
         "--seed", "5", "--out", str(tmp_path / "r"), *FAST_ARGS]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("sphere atga n_trials=2 ")
    assert (tmp_path / "r" / "sphere_atga_5.summary.csv").exists()


def test_compare_prints_table_and_writes_combined_csv(tmp_path, capsys):
    code = run_cli(
        ["compare", "--function", "sphere", "--trials", "2", "--seed", "3",
         "--out", str(tmp_path), *FAST_ARGS]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "SGA" in out and "ATGA" in out
    assert "mean_best" in out and "mean_convergence_gen" in out
    combined = tmp_path / "sphere_compare_3.summary.csv"
    assert combined.exists()
    assert len(combined.read_text(encoding="utf-8").splitlines()) == 3


def test_compare_all_produces_full_grid(tmp_path):
    code = run_cli(
        ["compare", "--all", "--trials", "2", "--seed", "3", "--out", str(tmp_path),
         *FAST_ARGS]
    )
    assert code == 0
    combined = tmp_path / "all_compare_3.summary.csv"
    lines = combined.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 11  # header + 5 function pairs
    functions = {line.split(",")[0] for line in lines[1:]}
    assert functions == {"himmelblau", "rastrigin", "rosenbrock", "schwefel", "sphere"}


def test_compare_requires_some_function(capsys):
    assert run_cli(["compare", "--trials", "2"]) == 2


def test_unreachable_server_exits_1(capsys):
    code = run_cli(
        ["run", "--function", "sphere", "--mode", "sga", "--trials", "1",
         "--server", "http://127.0.0.1:9", *FAST_ARGS]
    )
    assert code == 1
    assert "request failed" in capsys.readouterr().err
