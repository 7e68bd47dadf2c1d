# SECTION: Packages(Built-in)
import json
import shutil

# SECTION: Packages(Third-Party)
import pytest

# SECTION: Packages(Local)
from flatzinc_qubo.cli import EXIT_FAILURE, EXIT_GUARD, EXIT_INCONSISTENT, EXIT_OK, main


@pytest.fixture
def workdir(tmp_path, data_dir):
    for name in ("small_example.fzn", "inconsistent.fzn", "square.fzn"):
        shutil.copy(data_dir / name, tmp_path / name)
    return tmp_path


def _convert(workdir, name: str = "small_example.fzn"):
    assert main(["convert", str(workdir / name)]) == EXIT_OK
    return workdir / name.replace(".fzn", ".qubo")


# SECTION: convert / check
def test_convert_writes_both_files(workdir, capsys):

    # Initialize
    qubo = _convert(workdir)
    out = capsys.readouterr().out

    # Process
    assert qubo.exists()
    assert (workdir / "small_example.sub.json").exists()
    assert out.splitlines()[0].startswith("raw: ")
    assert any(line.startswith("qubo: bits=") for line in out.splitlines())
    assert out.rstrip().endswith("small_example.sub.json")


def test_convert_with_explicit_paths_and_flags(workdir, capsys):

    # Initialize
    output = workdir / "out" / "model.qubo"
    output.parent.mkdir()

    # Process
    code = main([
        "convert", str(workdir / "square.fzn"), "-o", str(output), "--sidecar", str(workdir / "model.json"),
        "--encoding", "binary", "--binary-rule", "recursive", "--penalty", "50", "--no-propagate"
    ])

    assert code == EXIT_OK
    assert output.exists() and (workdir / "model.json").exists()
    assert "propagated:" not in capsys.readouterr().out


def test_check_accepts_a_converted_file(workdir, capsys):

    # Initialize
    qubo = _convert(workdir)
    capsys.readouterr()

    # Process
    assert main(["check", str(qubo)]) == EXIT_OK
    assert capsys.readouterr().out == f"{qubo}: ok\n"


def test_check_rejects_a_lower_triangle_entry(tmp_path, capsys):

    # Initialize
    path = tmp_path / "bad.qubo"
    path.write_text("QUBO 2 1\nOFFSET 0\nSCALE 1\n1 0 3\n", encoding="utf-8")

    # Process
    assert main(["check", str(path)]) == EXIT_FAILURE
    assert "E601" in capsys.readouterr().out


def test_convert_reports_an_inconsistent_model(workdir, capsys):
    assert main(["convert", str(workdir / "inconsistent.fzn")]) == EXIT_INCONSISTENT
    assert capsys.readouterr().err.startswith("inconsistent: ")


# SECTION: solve
def test_solve_and_decode(workdir, capsys):

    # Initialize
    qubo = _convert(workdir)
    capsys.readouterr()

    # Process
    assert main(["solve", str(qubo), "--decode"]) == EXIT_OK
    out = capsys.readouterr().out

    assert "x = 0;" in out.splitlines()
    assert "y = 2;" in out.splitlines()
    assert out.splitlines()[-1] == "% energy = -2"


def test_solve_without_sidecar_prints_bits(workdir, capsys):

    # Initialize
    qubo = _convert(workdir)
    capsys.readouterr()

    # Process
    assert main(["solve", str(qubo)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()

    assert lines[0].startswith("% bits = ")
    assert lines[1] == "% energy = -2"


def test_solve_writes_to_a_file(workdir, capsys):

    # Initialize
    qubo = _convert(workdir)
    target = workdir / "solution.txt"

    # Process
    assert main(["solve", str(qubo), "--decode", "--output", str(target)]) == EXIT_OK
    assert "y = 2;" in target.read_text(encoding="utf-8")


def test_anneal_is_reproducible(workdir, capsys):

    # Initialize
    qubo = _convert(workdir)
    capsys.readouterr()
    argv = ["solve", str(qubo), "--decode", "--method", "anneal", "--seed", "5", "--sweeps", "300"]

    # Process
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv + ["--workers", "2"]) == EXIT_OK

    assert capsys.readouterr().out == first


def test_solve_with_a_missing_sidecar(workdir, capsys):

    # Initialize
    qubo = _convert(workdir)
    (workdir / "small_example.sub.json").unlink()

    # Process
    assert main(["solve", str(qubo), "--decode"]) == EXIT_FAILURE
    assert "not found" in capsys.readouterr().err


def test_solve_beyond_the_exhaustive_limit(tmp_path):

    # Initialize
    path = tmp_path / "wide.qubo"
    path.write_text("QUBO 26 0\nOFFSET 0\nSCALE 1\n", encoding="utf-8")

    # Process
    assert main(["solve", str(path)]) == EXIT_GUARD


def test_solve_a_malformed_file(tmp_path, capsys):

    # Initialize
    path = tmp_path / "bad.qubo"
    path.write_text("QUBO 1 1\nOFFSET 0\nSCALE 1\n0 0 0\n", encoding="utf-8")

    # Process
    assert main(["solve", str(path)]) == EXIT_FAILURE
    assert "E601" in capsys.readouterr().err


# SECTION: roundtrip
def test_roundtrip_json(workdir, capsys):

    # Process
    assert main(["roundtrip", str(workdir / "small_example.fzn"), "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)

    assert report["passed"] is True
    assert report["oracle_objective"] == "-2"
    assert report["stages"][0]["stage"] == "raw"


def test_roundtrip_of_an_inconsistent_model(workdir, capsys):
    assert main(["roundtrip", str(workdir / "inconsistent.fzn")]) == EXIT_OK
    assert "passed=True" in capsys.readouterr().out


def test_roundtrip_beyond_the_bit_limit(workdir):
    assert main(["roundtrip", str(workdir / "small_example.fzn"), "--max-bits", "2"]) == EXIT_GUARD


# SECTION: usage
@pytest.mark.parametrize("argv", [[], ["solve"], ["convert", "x.fzn", "--encoding", "gray"], ["bogus"]])
def test_usage_errors_exit_with_one(argv):

    # Process
    with pytest.raises(SystemExit) as error:
        main(argv)

    assert error.value.code == EXIT_FAILURE
