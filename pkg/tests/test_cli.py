"""Command-line interface, driven in-process through main(argv)."""

import json

import pytest

from ellipmono.cli import main, parse_param
from ellipmono.coefficients import threshold
from ellipmono.pi_expr import PiExpression


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_constants_csv(capsys):
    rc, out, err = run(capsys, "constants", "--names", "pi,ln2")
    assert rc == 0 and not err
    lines = out.strip().splitlines()
    assert lines[0] == "name,enclosure"
    assert lines[1].startswith('pi,"3.14159265358979323846')
    assert lines[2].startswith('ln2,"0.69314718055994530941')


def test_constants_json(capsys):
    rc, out, _ = run(capsys, "constants", "--format", "json",
                     "--names", "sqrt_two")
    assert rc == 0
    data = json.loads(out)
    assert set(data) == {"sqrt_two"}
    assert data["sqrt_two"].startswith("1.4142135623730950488")


def test_constants_unknown_name(capsys):
    rc, out, err = run(capsys, "constants", "--names", "feigenbaum")
    assert rc == 2
    assert "unknown constant" in err


def test_coeffs_b_exact_csv(capsys):
    rc, out, _ = run(capsys, "coeffs", "--kind", "b", "--n-max", "3")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,expression"
    assert lines[1] == '0,"1 * exp(pi/2)"'
    assert lines[4] == '3,"(pi^3 + 27*pi^2 + 150*pi)/3072 * exp(pi/2)"'


def test_coeffs_json_and_enclosure(capsys):
    rc, out, _ = run(capsys, "coeffs", "--kind", "b", "--n-max", "2",
                     "--enclosure", "--format", "json", "--digits", "12")
    assert rc == 0
    data = json.loads(out)
    assert data["kind"] == "b"
    assert data["column"] == "enclosure"
    assert len(data["rows"]) == 3
    assert data["rows"][1]["enclosure"].startswith("1.88907005003")


def test_coeffs_c_requires_p(capsys):
    rc, _, err = run(capsys, "coeffs", "--kind", "c", "--n-max", "2")
    assert rc == 2
    assert "--p" in err


def test_coeffs_c_with_p(capsys):
    rc, out, _ = run(capsys, "coeffs", "--kind", "c", "--n-max", "1",
                     "--p", "4", "--digits", "15")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,enclosure"
    assert lines[2].startswith('1,"-0.11092994996242')


def test_coeffs_q_exact(capsys):
    rc, out, _ = run(capsys, "coeffs", "--kind", "q", "--n-max", "1")
    assert rc == 0
    lines = out.strip().splitlines()
    assert "exp(pi/2)" in lines[1]
    assert "pi" in lines[1]


def test_eval_K(capsys):
    rc, out, _ = run(capsys, "eval", "--what", "K", "--m", "1/2")
    assert rc == 0
    assert out.startswith("1.85407467730137191843385034719")


def test_eval_alpha(capsys):
    rc, out, _ = run(capsys, "eval", "--what", "alpha")
    assert rc == 0
    assert out.startswith("0.81047738096535165547")


def test_eval_lt_residual(capsys):
    rc, out, _ = run(capsys, "eval", "--what", "lt", "--triple",
                     "1/2,1/2,2", "--x", "1/2")
    assert rc == 0
    assert "±" in out or "e-" in out  # a "mid ± rad" enclosure string


def test_eval_domain_error_exit_code(capsys):
    rc, _, err = run(capsys, "eval", "--what", "K", "--m", "2")
    assert rc == 2
    assert "error:" in err


def test_eval_missing_argument(capsys):
    rc, _, err = run(capsys, "eval", "--what", "g")
    assert rc == 2
    assert "--x" in err


def test_certify_json_and_exit(capsys):
    rc, out, _ = run(capsys, "certify", "--claim", "u_signs",
                     "--n-end", "20", "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert data["status"] == "Certified"
    assert data["runtime_ms"] == 0.0
    assert "generated_at" not in data
    assert list(data)[:4] == ["claim", "range", "status", "precision_used"]


def test_certify_timestamp_present_by_default(capsys):
    rc, out, _ = run(capsys, "certify", "--claim", "u_signs", "--n-end", "5")
    assert rc == 0
    assert "generated_at" in json.loads(out)


def test_certify_reproducible_output(capsys):
    args = ("certify", "--claim", "c_nonpos", "--n-start", "1",
            "--n-end", "30", "--p", "4", "--no-timestamp")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_certify_refuted_exit_code(capsys):
    rc, out, _ = run(capsys, "certify", "--claim", "c_nonneg",
                     "--n-start", "1", "--n-end", "5", "--p", "4",
                     "--no-timestamp")
    assert rc == 1
    assert json.loads(out)["status"] == "Refuted"


def test_certify_named_param(capsys):
    rc, out, _ = run(capsys, "certify", "--claim", "c_nonneg",
                     "--n-end", "30", "--p", "pi*exp(pi/2)/4",
                     "--no-timestamp")
    assert rc == 0
    assert json.loads(out)["boundary_zeros"] == ["n=1"]


def test_verify_small_grid(capsys):
    rc, out, _ = run(capsys, "verify", "--family", "P1_lower",
                     "--density", "20", "--no-timestamp")
    assert rc == 0
    assert json.loads(out)["status"] == "Certified"


def test_sharpness_refutes(capsys):
    rc, out, _ = run(capsys, "sharpness", "--family", "P1_lower",
                     "--epsilon", "1/100", "--no-timestamp")
    assert rc == 0
    assert json.loads(out)["status"] == "Refuted"


def test_sharpness_undecided_exit_code(capsys):
    rc, out, _ = run(capsys, "sharpness", "--family", "EKDIFF_upper",
                     "--epsilon", "1/1000", "--max-steps", "2",
                     "--no-timestamp")
    assert rc == 1
    assert json.loads(out)["status"] == "Undecided"


def test_bad_param_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["certify", "--claim", "c_nonneg", "--n-end", "5",
              "--p", "sqrt(2)"])
    assert exc.value.code == 2


def test_parse_param_forms():
    assert parse_param("3/7") == __import__("fractions").Fraction(3, 7)
    assert parse_param("threshold(1)") == threshold(1)
    named = parse_param("pi * exp(pi/2) / 4")
    assert isinstance(named, PiExpression)
    assert named == threshold(1)


def test_env_default_digits(capsys, monkeypatch):
    monkeypatch.setenv("ELLIPMONO_DIGITS", "8")
    rc, out, _ = run(capsys, "constants", "--names", "pi")
    assert rc == 0
    assert '"3.14159265 ' in out.splitlines()[1]


def test_env_invalid_integer(monkeypatch):
    monkeypatch.setenv("ELLIPMONO_PRECISION", "lots")
    with pytest.raises(SystemExit):
        main(["constants", "--names", "pi"])
