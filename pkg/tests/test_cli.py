"""End-to-end command-line tests driven through main(argv)."""

import json

import pytest

from vpvlab.cli import main


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify2_json_report(capsys):
    code, out, _ = _run(
        capsys,
        ["verify2", "--s", "1", "--x", "0.3", "--y", "0.4", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {
        "lhs_log",
        "rhs_log",
        "abs_err",
        "rel_err",
        "degree_cap",
        "tail_bound",
        "terms",
    }
    # Round trip: the serialized logs regenerate abs_err bit-for-bit.
    lhs = complex(payload["lhs_log"]["re"], payload["lhs_log"]["im"])
    rhs = complex(payload["rhs_log"]["re"], payload["rhs_log"]["im"])
    assert abs(lhs - rhs) == payload["abs_err"]
    assert payload["abs_err"] <= 3e-8
    assert payload["tail_bound"] <= 1e-8


def test_verify2_csv_header(capsys):
    code, out, _ = _run(
        capsys, ["verify2", "--s", "2", "--x", "0.5", "--y", "0.3", "--format", "csv"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == (
        "label,lhs_log_re,lhs_log_im,rhs_log_re,rhs_log_im,"
        "abs_err,rel_err,degree_cap,tail_bound,terms"
    )
    assert len(lines) == 2
    assert lines[1].startswith("verify2,")


def test_verify3_runs(capsys):
    code, out, _ = _run(
        capsys,
        [
            "verify3",
            "--s",
            "1",
            "--t",
            "1",
            "--x",
            "0.2",
            "--y",
            "0.2",
            "--z",
            "0.2",
            "--format",
            "json",
        ],
    )
    assert code == 0
    assert json.loads(out)["rel_err"] <= 1e-7


def test_complex_flag_forms_agree(capsys):
    whole = ["scan", "--T", "14.134725", "--format", "json"]
    code_a, out_a, _ = _run(capsys, whole)
    assert code_a == 0
    code_b, out_b, _ = _run(
        capsys,
        ["verify2", "--s", "0.5+14.134725i", "--x", "0.2", "--y", "0.2", "--format", "json"],
    )
    code_c, out_c, _ = _run(
        capsys,
        [
            "verify2",
            "--s-re",
            "0.5",
            "--s-im",
            "14.134725",
            "--x",
            "0.2",
            "--y",
            "0.2",
            "--format",
            "json",
        ],
    )
    assert code_b == code_c == 0
    assert json.loads(out_b) == json.loads(out_c)


def test_conflicting_complex_forms_rejected(capsys):
    code, _, err = _run(
        capsys,
        ["verify2", "--s", "1", "--s-re", "1", "--x", "0.3", "--y", "0.4"],
    )
    assert code == 1
    assert "--s" in err


def test_missing_required_flag(capsys):
    code, _, err = _run(capsys, ["verify2", "--s", "1", "--x", "0.3"])
    assert code == 1
    assert "y" in err


def test_bad_complex_literal(capsys):
    code, _, err = _run(capsys, ["verify2", "--s", "one", "--x", "0.3", "--y", "0.4"])
    assert code == 1


def test_domain_error_exit_code(capsys):
    code, _, err = _run(capsys, ["verify2", "--s", "1", "--x", "0.9999", "--y", "0.4"])
    assert code == 1
    assert err


def test_unachievable_tolerance_exit_code(capsys):
    code, _, err = _run(
        capsys,
        [
            "verify2",
            "--s",
            "1",
            "--x",
            "0.9",
            "--y",
            "0.995",
            "--tol",
            "1e-10",
            "--degree-cap-max",
            "60",
        ],
    )
    assert code == 2
    assert err


def test_internal_errors_do_not_leak_tracebacks(capsys):
    # An unknown subcommand is a usage error, not an internal one.
    code, _, err = _run(capsys, ["frobnicate"])
    assert code == 1


def test_no_command_prints_usage(capsys):
    code, _, err = _run(capsys, [])
    assert code == 1
    assert "usage" in err.lower()


def test_help_exits_zero():
    with pytest.raises(SystemExit) as info:
        main(["--help"])
    assert info.value.code == 0


def test_catalog_json(capsys):
    code, out, _ = _run(capsys, ["catalog", "--format", "json"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 14
    for row in rows:
        assert row["rel_err"] <= 1e-6


def test_scan_csv_header_and_rows(capsys):
    code, out, _ = _run(
        capsys, ["scan", "--T", "0,5,14.134725", "--format", "csv"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == (
        "T,lhs_log_re,lhs_log_im,rhs_log_re,rhs_log_im,abs_err,"
        "li_s_x_re,li_s_x_im,li_t_y_re,li_t_y_im,"
        "exponent_dev,degree_cap,tail_bound"
    )
    assert len(lines) == 4


def test_probe_csv_carries_note(capsys):
    code, out, _ = _run(capsys, ["probe", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("delta,y,lhs_log_re")
    assert lines[0].endswith(",error")
    assert any(line.startswith("# note:") for line in lines)


def test_probe_json_carries_note(capsys):
    code, out, _ = _run(capsys, ["probe", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 3
    assert len(payload["rows"]) == 4
    assert "approach" in payload["note"]


def test_audit_csv(capsys):
    code, out, _ = _run(capsys, ["audit", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == (
        "name,verdict,printed_re,printed_im,series_re,series_im,"
        "discrepancy,corrected_re,corrected_im,corrected_formula,note"
    )
    assert len(lines) == 5
    verdicts = [line.split(",")[1] for line in lines[1:]]
    assert verdicts == [
        "MATCHES_PRINTED",
        "MATCHES_PRINTED",
        "MATCHES_CORRECTED",
        "MATCHES_CORRECTED",
    ]


def test_ez31_json(capsys):
    code, out, _ = _run(capsys, ["ez31", "--tol", "1e-10", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["value"] - (-0.1178759996505093)) <= 1e-9
    assert payload["tail_bound"] <= 1e-10


def test_visible_csv(capsys):
    code, out, _ = _run(
        capsys, ["visible", "--dimension", "2", "--degree-cap", "5", "--format", "csv"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "a,b"
    assert lines[1:] == [
        "1,1",
        "1,2",
        "2,1",
        "1,3",
        "3,1",
        "1,4",
        "2,3",
        "3,2",
        "4,1",
    ]


def test_polylog_extended_digits(capsys):
    code, out, _ = _run(
        capsys,
        [
            "polylog",
            "--s",
            "2",
            "--z",
            "0.5",
            "--precision",
            "extended:30",
            "--format",
            "human",
        ],
    )
    assert code == 0
    assert "0.582240526465011988703108064946" in out


def test_config_file_with_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("s = 1\nx = 0.3\ny = 0.4\nformat = csv\n# comment line\n")
    code, out, _ = _run(
        capsys, ["verify2", "--config", str(cfg), "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)  # flag wins over config's csv
    assert payload["rel_err"] <= 1e-7


def test_config_unknown_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("s = 1\nx = 0.3\ny = 0.4\nbogus = 7\n")
    code, _, err = _run(capsys, ["verify2", "--config", str(cfg)])
    assert code == 1
    assert "bogus" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = _run(
        capsys,
        [
            "verify2",
            "--s",
            "1",
            "--x",
            "0.3",
            "--y",
            "0.4",
            "--format",
            "json",
            "--output",
            str(target),
        ],
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["rel_err"] <= 1e-7


def test_tolerance_validation(capsys):
    code, _, err = _run(
        capsys, ["verify2", "--s", "1", "--x", "0.3", "--y", "0.4", "--tol", "-1"]
    )
    assert code == 1
