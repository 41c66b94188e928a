import json

import pytest

from skewres import GF343
from skewres.cli import main


def run(capsys, *args):
    code = main(list(args))
    return code, json.loads(capsys.readouterr().out)


def test_documented_examples(capsys):
    assert run(capsys, "div", "--mode", "right", "g*X^2+X+1", "X-g") == (0, {"Q": "g*X+4", "R": "1+4*g"})
    code, out = run(capsys, "check-residue-formula", "--j", "1", "X/((Y-1)*(Y-2))")
    assert code == 0 and out == {"sum": "0", "breakdown": {"1": "4", "2": "1", "0": "0", "inf": "0"}}
    code, out = run(capsys, "taylor", "--point", "1", "--prec", "0", "--method", "canonical", "Y")
    assert code == 0 and out["series"] == "1 + T"


def test_exact_bytes(capsys):
    main(["div", "--mode", "right", "g*X^2+X+1", "X-g"])
    assert capsys.readouterr().out == '{"Q":"g*X+4","R":"1+4*g"}\n'


def test_other_commands(capsys):
    code, out = run(capsys, "field-info")
    assert code == 0 and out["p"] == 5 and out["r"] == 2 and out["trace_one"] == "3"
    code, out = run(capsys, "div", "--mode", "left", "g*X", "X-g")
    assert code == 0 and set(out) == {"Q", "R"}
    code, out = run(capsys, "gcd", "--kind", "rgcd", "X^2-3", "X+g")
    assert code == 0 and out["result"] == "X+g"
    code, out = run(capsys, "gcd", "--kind", "llcm", "X-g", "X+g")
    assert code == 0 and "result" in out
    code, out = run(capsys, "bound", "X-g")
    assert code == 0 and out == {"g": "X+4*g", "N": "Y+2"}
    code, out = run(capsys, "sres", "--point", "1", "--j", "1", "X/((Y-1)*(Y-2))")
    assert code == 0 and out["value"] == "4" and out["partial"] == ["0", "4"]
    code, out = run(capsys, "sres", "--point", "inf", "1/(Y-1)")
    assert code == 0 and out["full"] is None and out["partial"] == ["4", "0"]
    code, out = run(capsys, "cres", "--point", "1", "--j", "1", "X/((Y-1)*(Y-2))")
    assert code == 0 and out["residue"] == "4"
    code, out = run(capsys, "chvar", "--C", "2", "--point", "1", "1/(Y-4)")
    assert code == 0 and out["equal"] is True


def test_error_exits(capsys):
    code, out = run(capsys, "div", "X+", "X")
    assert code == 2 and out["error"] == "ExpressionSyntaxError"
    code, out = run(capsys, "div", "1/X", "X")
    assert code == 2 and out["error"] == "NonCentralDenominator"
    code, out = run(capsys, "div", "X", "0")
    assert code == 3 and out["error"] == "DivisionByZero"
    code, out = run(capsys, "sres", "--point", "1", "--j", "1", "X/(Y-1)^2")
    assert code == 0
    code, out = run(capsys, "check-residue-formula", "--j", "1", "X/(Y-1)^2")
    assert code == 3 and out["error"] == "SimplePoleRequired"
    code, out = run(capsys, "chvar", "--C", "g", "--point", "1", "1/(Y-1)")
    assert code == 3 and out["error"] == "NonCentralCoefficient"


def test_config_flag(capsys, tmp_path):
    cfg = tmp_path / "f.json"
    cfg.write_text(json.dumps(GF343.to_dict()))
    code, out = run(capsys, "--config", str(cfg), "field-info")
    assert code == 0 and out["order"] == 343
    code, out = run(capsys, "field-info", "--config", str(cfg))
    assert code == 0 and out["order"] == 343
    bad = tmp_path / "bad.json"
    bad.write_text('{"p": 6, "r": 2, "modulus": [1, 0, 1]}')
    code, out = run(capsys, "--config", str(bad), "field-info")
    assert code == 3 and out["error"] == "ConfigError"


def test_check_failure_exit(capsys, monkeypatch):
    import skewres.cli as cli

    monkeypatch.setattr(cli, "residue_sum", lambda f, j: (1, {}))
    code, out = run(capsys, "check-residue-formula", "1/(Y-1)")
    assert code == 4 and out["sum"] == "1"


def test_selftest_is_deterministic(capsys):
    a = run(capsys, "--seed", "3", "selftest", "--trials", "2")
    b = run(capsys, "selftest", "--seed", "3", "--trials", "2")
    assert a == b and a[0] == 0 and a[1]["failed"] == 0


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
