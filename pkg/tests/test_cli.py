import json
import subprocess
import sys

import pytest

from binomia.cli import main, sample_exponents


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestExpand:
    def test_half_text(self, capsys):
        code, out, _ = run(capsys, "expand", "1/2", "--order", "3")
        assert code == 0
        assert out.strip() == "1 + 1/2*x - 1/8*x^2 + 1/16*x^3"

    def test_zero(self, capsys):
        assert run(capsys, "expand", "0", "--order", "4")[1].strip() == "1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "expand", "5", "--order", "5", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["command"] == "expand"
        assert doc["inputs"] == {"exponent": "5", "order": 5, "format": "json"}
        assert doc["results"]["coefficients"] == ["1", "5", "10", "10", "5", "1"]
        assert "warning" not in doc

    def test_negative_and_complex_literals(self, capsys):
        assert run(capsys, "expand", "-1", "--order", "3")[1].strip() == "1 - x + x^2 - x^3"
        assert run(capsys, "expand", "-1/2", "--order", "2")[1].strip() == "1 - 1/2*x + 3/8*x^2"
        assert run(capsys, "expand", "-i", "--order", "1")[1].strip() == "1 - i*x"
        out = run(capsys, "expand", "1/2+1/3i", "--order", "2", "--format", "json")[1]
        assert json.loads(out)["results"]["coefficients"] == ["1", "1/2+1/3i", "-13/72"]

    def test_latex(self, capsys):
        out = run(capsys, "expand", "1/2", "--order", "2", "--format", "latex")[1]
        assert out.strip() == r"1 + \frac{1}{2}x - \frac{1}{8}x^{2}"

    def test_float_exponent_hint(self, capsys):
        code, out, err = run(capsys, "expand", "0.5", "--order", "3")
        assert code == 2 and out == ""
        assert "use exact rational 1/2" in err

    @pytest.mark.parametrize("bad", ["abc", "1/0", "1+2"])
    def test_unparseable(self, capsys, bad):
        code, _, err = run(capsys, "expand", bad, "--order", "3")
        assert code == 2 and err

    def test_negative_order(self, capsys):
        assert run(capsys, "expand", "1", "--order", "-1")[0] == 2


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-order", "16", "--samples", "50", "--seed", "42")
        assert code == 0
        assert out.rstrip().endswith("RESULT: PASS")
        assert "FAIL]" not in out

    def test_minimal(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-order", "1", "--samples", "1", "--seed", "1")
        assert code == 0
        assert "[PASS] recurrence: c_1(n+1) - c_1(n) = c_0(n)" in out

    def test_zero_order_is_usage_error(self, capsys):
        assert run(capsys, "verify", "--max-order", "0")[0] == 2

    def test_deterministic(self, capsys):
        a = run(capsys, "verify", "--max-order", "12", "--samples", "20", "--seed", "7")[1]
        b = run(capsys, "verify", "--max-order", "12", "--samples", "20", "--seed", "7")[1]
        c = run(capsys, "verify", "--max-order", "12", "--samples", "20", "--seed", "8")[1]
        assert a == b
        assert a != c

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-order", "4", "--samples", "5", "--seed", "3", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert set(doc) == {"command", "inputs", "results"}
        assert doc["results"]["passed"] is True
        assert [r["name"] for r in doc["results"]["reports"]] == ["recurrence", "closed-form", "equivalence", "shift-multiply"]

    def test_failure_exit_code(self, capsys, monkeypatch):
        from binomia import cli
        from binomia.difference_calculus import FFPoly

        real = cli.derive_coefficient_polynomials
        monkeypatch.setattr(cli, "derive_coefficient_polynomials", lambda K: real(K).replace(2, FFPoly.term(2)))
        code, out, _ = run(capsys, "verify", "--max-order", "3", "--samples", "2", "--seed", "0")
        assert code == 1
        assert "RESULT: FAIL" in out

    def test_sampling(self):
        rats, gauss = sample_exponents(10, 5)
        assert len(rats) == 10 and len(gauss) == 2
        assert all(g.im != 0 for g in gauss)
        assert sample_exponents(10, 5) == (rats, gauss)


class TestEval:
    def test_half(self, capsys):
        code, out, _ = run(capsys, "eval", "1/2", "--x", "0.5", "--order", "64", "--format", "json")
        doc = json.loads(out)
        assert code == 0
        assert doc["results"]["final_abs_error"] < 1e-12
        assert len(doc["results"]["records"]) == 65

    def test_text_shows_final_error(self, capsys):
        out = run(capsys, "eval", "1/2", "--x", "0.5", "--order", "64")[1]
        line = [ln for ln in out.splitlines() if ln.startswith("final abs error:")][0]
        assert float(line.split(":")[1]) < 1e-12

    def test_x_zero(self, capsys):
        out = run(capsys, "eval", "1/2", "--x", "0", "--order", "8", "--format", "json")[1]
        assert all(r["partial_sum"] == 1.0 for r in json.loads(out)["results"]["records"])

    def test_divergent_warning(self, capsys):
        code, out, _ = run(capsys, "eval", "-1", "--x", "1.5", "--order", "16")
        assert code == 0
        assert "outside |x|<1" in out
        code, out, _ = run(capsys, "eval", "-1", "--x", "1.5", "--order", "16", "--format", "json")
        assert "outside |x|<1" in json.loads(out)["warning"]

    def test_float_exponent_accepted(self, capsys):
        out = run(capsys, "eval", "0.5", "--x", "0.5", "--order", "64", "--format", "json")[1]
        doc = json.loads(out)
        assert doc["results"]["exponent_kind"] == "float"
        assert doc["results"]["final_abs_error"] < 1e-12

    def test_complex(self, capsys):
        out = run(capsys, "eval", "i", "--x", "0.5", "--order", "64", "--format", "json")[1]
        ref = json.loads(out)["results"]["reference"]
        assert set(ref) == {"re", "im"}

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "eval", "1/2", "--x", "-1", "--order", "4")
        assert code == 2
        assert "outside principal real domain" in err

    @pytest.mark.parametrize("x", ["nan", "inf"])
    def test_nonfinite_x(self, capsys, x):
        assert run(capsys, "eval", "1/2", "--x", x, "--order", "4")[0] == 2

    def test_negative_x_value(self, capsys):
        code, out, _ = run(capsys, "eval", "-1/2", "--x", "-0.5", "--order", "40", "--format", "json")
        assert code == 0
        assert json.loads(out)["results"]["final_abs_error"] < 1e-10


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "binomia", "expand", "1/2", "--order", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 + 1/2*x - 1/8*x^2 + 1/16*x^3"
