from __future__ import annotations

import pytest

from statecomplexity import build_regular, parse_dfa, render_dfa
from statecomplexity.cli import main

from conftest import fig_ends_in_b, fig_ends_in_c


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_witness_gen_round_trips(tmp_path, capsys):
    out = tmp_path / "w.dfa"
    code, _, _ = run_cli(capsys, "witness", "gen", "regular", "4", "-o", str(out))
    assert code == 0
    assert parse_dfa(out.read_text()) == build_regular(4)


def test_witness_gen_with_dialect_to_stdout(capsys):
    code, stdout, _ = run_cli(capsys, "witness", "gen", "regular", "3", "--dialect", "a,b,-,c")
    assert code == 0
    assert parse_dfa(stdout).alphabet == ("a", "b", "c")


def test_witness_gen_out_of_range(capsys):
    code, _, stderr = run_cli(capsys, "witness", "gen", "twosided", "4")
    assert code == 2
    assert "n >= 5" in stderr


def test_op_union_on_the_worked_example(tmp_path, capsys):
    lhs = tmp_path / "lhs.dfa"
    rhs = tmp_path / "rhs.dfa"
    lhs.write_text(render_dfa(fig_ends_in_b()))
    rhs.write_text(render_dfa(fig_ends_in_c()))
    emitted = tmp_path / "union.dfa"
    code, stdout, _ = run_cli(
        capsys, "op", "union", str(lhs), str(rhs), "--emit", str(emitted)
    )
    assert code == 0
    assert stdout.strip() == "kappa=6"
    assert parse_dfa(emitted.read_text()).state_count == 6


def test_op_star_and_reverse(tmp_path, capsys):
    path = tmp_path / "w.dfa"
    run_cli(capsys, "witness", "gen", "regular", "4", "--dialect", "a,b", "-o", str(path))
    code, stdout, _ = run_cli(capsys, "op", "star", str(path))
    assert code == 0 and stdout.strip() == "kappa=12"
    path2 = tmp_path / "w3.dfa"
    run_cli(capsys, "witness", "gen", "regular", "3", "--dialect", "a,b,c", "-o", str(path2))
    code, stdout, _ = run_cli(capsys, "op", "reverse", str(path2))
    assert code == 0 and stdout.strip() == "kappa=8"


def test_op_complement_with_universe(tmp_path, capsys):
    path = tmp_path / "astar.dfa"
    path.write_text("states 1\nalphabet a\ninitial 0\nfinal 0\nrow a 0\n")
    code, stdout, _ = run_cli(capsys, "op", "complement", str(path), "--universe", "ab")
    assert code == 0
    assert stdout.strip() == "kappa=2"  # words over {a,b} containing a b


def test_op_missing_rhs_is_usage_error(tmp_path, capsys):
    path = tmp_path / "w.dfa"
    path.write_text(render_dfa(fig_ends_in_b()))
    code, _, stderr = run_cli(capsys, "op", "union", str(path))
    assert code == 2 and "right operand" in stderr


def test_measure_quantities(tmp_path, capsys):
    path = tmp_path / "w.dfa"
    run_cli(capsys, "witness", "gen", "regular", "3", "--dialect", "a,b,c", "-o", str(path))
    code, stdout, _ = run_cli(capsys, "measure", "kappa", str(path))
    assert code == 0 and stdout.strip() == "kappa=3"
    code, stdout, _ = run_cli(capsys, "measure", "semigroup", str(path))
    assert code == 0 and stdout.strip() == "semigroup=27"
    code, stdout, _ = run_cli(capsys, "measure", "atoms", str(path))
    assert code == 0 and stdout.strip() == "atoms=8"
    code, stdout, _ = run_cli(capsys, "measure", "atom-complexities", str(path))
    assert code == 0
    assert "S={}: kappa=7" in stdout and "S={0,1,2}: kappa=7" in stdout
    code, stdout, _ = run_cli(capsys, "measure", "quotients", str(path))
    assert code == 0
    assert stdout.count("kappa=3") == 3


def test_bad_file_is_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.dfa"
    path.write_text("states 2\nalphabet a\ninitial 0\nfinal 1\nrow a 0\n")
    code, _, stderr = run_cli(capsys, "measure", "kappa", str(path))
    assert code == 2 and "line" in stderr


def test_missing_file_is_exit_2(capsys):
    code, _, stderr = run_cli(capsys, "measure", "kappa", "no-such-file.dfa")
    assert code == 2


def test_verify_matching_subset_exits_zero(capsys):
    code, stdout, _ = run_cli(
        capsys, "verify", "--ids", "REG-PROD-U,REG-KAPPA", "--m", "3..4", "--n", "3..4"
    )
    assert code == 0
    lines = stdout.strip().splitlines()
    assert lines[0] == "id,m,n,expected,measured,match,elapsed_ms"
    assert any(line.startswith("REG-PROD-U,3,3,28,28,true,") for line in lines)
    assert any(line.startswith("REG-KAPPA,,3,3,3,true,") for line in lines)


def test_verify_mismatch_exits_one(capsys):
    # The two-sided reversal bound is documented above what the witness
    # can reach, so its rows report false and the exit code is 1.
    code, stdout, _ = run_cli(capsys, "verify", "--ids", "TID-REVERSE", "--n", "5..5")
    assert code == 1
    assert "TID-REVERSE,,5,17,9,false," in stdout


def test_verify_markdown_format(capsys):
    code, stdout, _ = run_cli(
        capsys, "verify", "--ids", "REG-STAR", "--n", "3..4", "--format", "markdown"
    )
    assert code == 0
    assert "## REG-STAR" in stdout


def test_verify_with_jobs(capsys):
    code, stdout, _ = run_cli(
        capsys, "verify", "--ids", "REG-BOOL-R-INTER", "--m", "3..4", "--n", "3..4", "--jobs", "2"
    )
    assert code == 0
    assert stdout.count("true") == 4


def test_verify_unknown_id(capsys):
    code, _, stderr = run_cli(capsys, "verify", "--ids", "BOGUS")
    assert code == 2 and "BOGUS" in stderr


def test_registry_list(capsys):
    code, stdout, _ = run_cli(capsys, "registry", "list")
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) == len(__import__("statecomplexity").registry())
    assert any(line.startswith("REG-PROD-U") and "m*2^n + 2^(n-1)" in line for line in lines)


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["op", "frobnicate", "x.dfa"])
    assert err.value.code == 2


def test_full_pipeline_witness_op_measure(tmp_path, capsys):
    # Generate dialect witnesses, concatenate them, re-measure the emitted
    # result: kappa, semigroup, and atom count must agree with the library.
    lhs = tmp_path / "lhs.dfa"
    rhs = tmp_path / "rhs.dfa"
    out = tmp_path / "prod.dfa"
    run_cli(capsys, "witness", "gen", "regular", "3", "--dialect", "a,b,-,c", "-o", str(lhs))
    run_cli(capsys, "witness", "gen", "regular", "3", "--dialect", "b,a,-,d", "-o", str(rhs))
    code, stdout, _ = run_cli(capsys, "op", "product", str(lhs), str(rhs), "--emit", str(out))
    assert code == 0 and stdout.strip() == "kappa=28"
    code, stdout, _ = run_cli(capsys, "measure", "kappa", str(out))
    assert code == 0 and stdout.strip() == "kappa=28"

    from statecomplexity import atoms, parse_dfa, reverse, trim_alphabet

    emitted = parse_dfa(out.read_text())
    assert emitted.state_count == 28
    code, stdout, _ = run_cli(capsys, "measure", "atoms", str(out))
    assert int(stdout.strip().split("=")[1]) == reverse(trim_alphabet(emitted)).kappa


def test_module_entry_point(tmp_path):
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "statecomplexity", "witness", "gen", "regular", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("states 3")
