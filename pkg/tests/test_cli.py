import json

import pytest

import config
from main import main, parse_degrees


def _run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_parse_degrees():
    assert parse_degrees("2,3") == (2, 3)
    assert parse_degrees("4") == (4,)


@pytest.mark.parametrize("degrees, expected", [("2,2", ["0", "4"]), ("2", ["4", "2", "2"])])
def test_chi(capsys, degrees, expected):
    code, payload, _ = _run_json(capsys, "chi", "-n", "3", "-D", degrees)
    assert code == config.EXIT_OK
    assert payload["chi"] == expected


def test_chi_single_section(capsys):
    code, payload, _ = _run_json(capsys, "chi", "-n", "3", "-D", "2", "-q", "1")
    assert code == config.EXIT_OK
    assert payload["chi"] == ["2"]


def test_invalid_spec_exits_with_validation_code(capsys):
    assert main(["chi", "-n", "3", "-D", "2,2,2"]) == config.EXIT_VALIDATION
    assert "error:" in capsys.readouterr().err


def test_missing_arguments(capsys):
    assert main(["count", "-n", "3", "-D", "2,2"]) == config.EXIT_VALIDATION
    assert main(["chi"]) == config.EXIT_VALIDATION


def test_polar(capsys):
    code, payload, _ = _run_json(capsys, "polar", "-n", "3", "-D", "2,2")
    assert code == config.EXIT_OK
    assert payload["rho"] == ["4", "8"]
    assert payload["agree"] is True


def test_count(capsys):
    code, payload, _ = _run_json(capsys, "count", "-n", "3", "-D", "2", "-d", "3")
    assert code == config.EXIT_OK
    assert payload["forms"]["wronski"] == "20"
    assert payload["polynomial"] == ["2", "0", "2"]


def test_count_table(capsys):
    assert main(["count", "-n", "3", "-D", "2,2", "-d", "2"]) == config.EXIT_OK
    out = capsys.readouterr().out
    assert "wronski" in out and "4" in out


def test_bound(capsys):
    code, payload, _ = _run_json(capsys, "bound", "-n", "3", "-D", "2,2", "-d", "2")
    assert code == config.EXIT_OK
    report = payload["report"]
    assert (report["alpha"], report["beta"], report["min_degree"]) == ("2", "2", "2")
    assert payload["attained"] is True


def test_verify_example_is_deterministic(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, payload, first = _run_json(capsys, "verify-example", "2", "--output", str(out_path))
    assert code == config.EXIT_OK
    assert payload["comparison"]["expected"] == payload["comparison"]["found"] == "4"
    assert payload["certificate"]["ok"] is True
    assert payload["bound_attained"] is True
    _, _, second = _run_json(capsys, "verify-example", "2")
    assert first == second
    assert json.loads(out_path.read_text()) == payload


def test_verify_example_rejects_unknown_target(capsys):
    assert main(["verify-example", "3"]) == config.EXIT_VALIDATION


def test_verify_field_from_files(capsys, tmp_path):
    field = tmp_path / "field.txt"
    field.write_text("z1 * z2 * z3\nz2^2 * z3 - z3\nz2 * z3^2 + 2 * z2\n")
    variety = tmp_path / "variety.txt"
    variety.write_text("# two quadrics\nz1^2 + z2^2 + z3^2 + 1\nz2^2 + 2 * z3^2 + 3\n")
    code, payload, _ = _run_json(
        capsys, "verify-field", "--field", str(field), "--variety", str(variety)
    )
    assert code == config.EXIT_OK
    assert payload["d"] == "2"
    assert payload["comparison"]["found"] == "4"
    assert payload["certificate"]["cofactors"]


def test_verify_field_needs_files(capsys):
    assert main(["verify-field"]) == config.EXIT_VALIDATION


def test_verify_field_missing_file(capsys, tmp_path):
    variety = tmp_path / "variety.txt"
    variety.write_text("z1^2 + z2^2 + z3^2 + 1\n")
    code = main(["verify-field", "--field", str(tmp_path / "absent.txt"), "--variety", str(variety)])
    assert code == config.EXIT_VALIDATION
    assert "no such file" in capsys.readouterr().err


def test_verify_field_unreadable_path(capsys, tmp_path):
    variety = tmp_path / "variety.txt"
    variety.write_text("z1^2 + z2^2 + z3^2 + 1\n")
    code = main(["verify-field", "--field", str(tmp_path), "--variety", str(variety)])
    assert code == config.EXIT_VALIDATION


def test_verify_field_zero_denominator(capsys, tmp_path):
    field = tmp_path / "field.txt"
    field.write_text("1/0 * z1\nz2\nz3\n")
    variety = tmp_path / "variety.txt"
    variety.write_text("z1^2 + z2^2 + z3^2 + 1\n")
    code = main(["verify-field", "--field", str(field), "--variety", str(variety)])
    assert code == config.EXIT_VALIDATION
    assert "division by zero" in capsys.readouterr().err


def test_identities_quick(capsys):
    code, payload, _ = _run_json(capsys, "identities", "--quick")
    assert code == config.EXIT_OK
    assert payload["violations"] == "0"
    assert all(suite["violations"] == "0" for suite in payload["suites"])
