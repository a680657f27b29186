import json

import pytest

from dihedral_integral.cli import EXIT_INTERNAL, EXIT_NOT_INTEGRAL, EXIT_OK, EXIT_USAGE, main
from dihedral_integral.group import ConnectionSet, validate_connection_set

FANO = "n=7; s1=; s2=1,2,4"
SMALL = "n=3; s1=1,2; s2=0,1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "--set", FANO)
    assert code == EXIT_NOT_INTEGRAL
    assert out.startswith("not_integral") and "h=1" in out and "8" in out
    code, out, _ = run(capsys, "check", "--set", SMALL, "--format", "json")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "integral"


def test_check_numeric_advisory(capsys):
    code, out, _ = run(capsys, "check", "--set", FANO, "--format", "json", "--numeric")
    obj = json.loads(out)
    assert code == EXIT_NOT_INTEGRAL and obj["numeric_advisory"]["integral"] is False


def test_validation_error(capsys):
    code, out, err = run(capsys, "check", "--set", "n=7; s1=1; s2=")
    assert code == EXIT_USAGE and out == "" and "error" in err


def test_spectrum_exact_and_float(capsys):
    code, out, _ = run(capsys, "spectrum", "--set", SMALL)
    obj = json.loads(out)
    assert code == EXIT_OK and obj["exact"]
    got = {int(e["value"]): e["multiplicity"] for e in obj["eigenvalues"]}
    assert got == {4: 1, 0: 3, -2: 2}
    assert ConnectionSet.from_json({k: obj[k] for k in ("n", "s1", "s2")}) == validate_connection_set(3, [1, 2], [0, 1])
    code, out, _ = run(capsys, "spectrum", "--set", FANO, "--mode", "float", "--format", "text")
    assert code == EXIT_OK and len(out.splitlines()) == 4


def test_spectrum_exact_refuses_partial(capsys):
    code, out, err = run(capsys, "--json-errors", "spectrum", "--set", FANO)
    assert code == EXIT_USAGE and out == ""
    payload = json.loads(err)
    assert payload["error"] == "ExactPathUnavailable" and payload["h"] == 1 and payload["value"] == 8


def test_json_errors_after_subcommand(capsys):
    code, out, err = run(capsys, "spectrum", "--set", FANO, "--json-errors")
    assert code == EXIT_USAGE and json.loads(err)["exit_code"] == EXIT_USAGE


def test_json_file_input(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"n": 6, "s1": [3], "s2": [0, 2, 4]}))
    code, out, _ = run(capsys, "check", "--json-file", str(path))
    assert code == EXIT_OK and out.strip() == "integral"
    path.write_text("{not json")
    code, _, err = run(capsys, "check", "--json-file", str(path))
    assert code == EXIT_USAGE


def test_atoms(capsys):
    code, out, _ = run(capsys, "atoms", "--n", "6", "--format", "json")
    assert json.loads(out)["atoms"] == {"6": [0], "3": [3], "2": [2, 4], "1": [1, 5]}
    code, out, _ = run(capsys, "atoms", "--set", FANO)
    assert code == EXIT_OK and "3*[1] u [a]" in out
    code, _, _ = run(capsys, "atoms")
    assert code == EXIT_USAGE


def test_ramanujan(capsys):
    code, out, _ = run(capsys, "ramanujan", "--s", "1", "--n", "6")
    assert code == EXIT_OK and out.strip() == "1"
    code, out, _ = run(capsys, "ramanujan", "--s", "2", "--n", "3")
    assert out.strip() == "-1"
    code, _, _ = run(capsys, "ramanujan", "--s", "1", "--n", "0")
    assert code == EXIT_USAGE


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--set", SMALL, "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_OK and obj["integral"] is True
    code, out, _ = run(capsys, "oracle", "--set", FANO, "--dot")
    assert out.startswith("graph") and out.count("--") == 14 * 3 // 2


def test_dp_list(capsys):
    code, out, _ = run(capsys, "dp-list", "7")
    sets = json.loads(out)
    assert code == EXIT_OK and len(sets) == 30
    for obj in sets:
        ConnectionSet.from_json(obj)
    code, out, _ = run(capsys, "dp-list", "5", "--format", "text", "--include-empty-s2")
    assert len(out.splitlines()) == 24
    code, _, _ = run(capsys, "dp-list", "9")
    assert code == EXIT_USAGE


def test_census_to_files(tmp_path, capsys):
    rows, summ = tmp_path / "rows.jsonl", tmp_path / "summary.json"
    code, out, _ = run(
        capsys, "census", "--n", "5", "--nonempty-s2", "--format", "jsonl", "--out", str(rows), "--summary", str(summ)
    )
    assert code == EXIT_OK
    assert json.loads(out) == json.loads(summ.read_text())
    assert json.loads(out)["integral"] == 22
    lines = rows.read_text().splitlines()
    # 4 choices of s1 (two negation pairs) times 31 nonempty s2
    assert len(lines) == json.loads(out)["total"] == 4 * 31
    for line in lines:
        obj = json.loads(line)
        validate_connection_set(obj["n"], obj["s1"], obj["s2"])


def test_census_stdout_and_sample(capsys):
    code, out, _ = run(capsys, "census", "--n", "3")
    assert code == EXIT_OK and len(out.splitlines()) == 1 + 16
    code, out, _ = run(capsys, "census", "--n", "9", "--sample", "5", "--seed", "3", "--format", "jsonl")
    assert len(out.splitlines()) == 5
    code, _, _ = run(capsys, "census", "--n", "20")
    assert code == EXIT_USAGE


def test_internal_error_exit(monkeypatch, capsys):
    from dihedral_integral import cli
    from dihedral_integral.errors import InvariantViolation

    def boom(S):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli, "check_integral", boom)
    code, _, err = run(capsys, "--json-errors", "check", "--set", SMALL)
    assert code == EXIT_INTERNAL and json.loads(err)["error"] == "InvariantViolation"


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["spectrum"])
    assert info.value.code == 2
