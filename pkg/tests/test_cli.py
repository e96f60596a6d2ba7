import json
import subprocess
import sys

from padichyper.cli import main


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "padichyper", *args],
        capture_output=True,
        text=True,
    )
    return proc


class TestGammaCommand:
    def test_value(self, capsys):
        assert main(["gamma", "1/2", "--p", "5", "--K", "2"]) == 0
        out = capsys.readouterr().out
        assert "= 18" in out

    def test_p_divisible_denominator_is_usage_error(self, capsys):
        assert main(["gamma", "1/5", "--p", "5", "--K", "2"]) == 2


class TestGGCommand:
    def test_known_value_recovers_trace(self, capsys):
        # -27/4 at (a,b) = (1,1) over F_7; q*value*phi(b) is the trace 3
        assert main(["gg", "--p", "7", "--params", "1/4,3/4;1/3,2/3", "--t", "5"]) == 0
        out = capsys.readouterr().out
        assert "q * value = 0:3," in out

    def test_bad_params(self):
        assert main(["gg", "--p", "7", "--params", "1/4;1/3,2/3", "--t", "5"]) == 2


class TestCountCommand:
    def test_weierstrass(self, capsys):
        assert main(["count", "weier", "--p", "7", "--a", "1", "--b", "1"]) == 0
        assert "trace=3" in capsys.readouterr().out

    def test_hessian(self, capsys):
        assert main(["count", "hessian", "--p", "11", "--d", "2"]) == 0
        assert "affine=17" in capsys.readouterr().out

    def test_extension_coefficients(self, capsys):
        assert main(["count", "weier", "--p", "5", "--r", "2", "--a", "1,1", "--b", "2,0"]) == 0
        assert "projective=" in capsys.readouterr().out


class TestVerifyCommand:
    def test_all_pass_exit_zero(self, capsys):
        code = main(["verify", "mt1", "--pmin", "11", "--pmax", "13", "--r", "1"])
        out = capsys.readouterr().out
        assert code == 0
        assert "PASS" in out and "FAIL" not in out

    def test_json_format(self, capsys):
        code = main(
            ["verify", "lemma5", "--pmin", "7", "--pmax", "11", "--r", "1,2", "--format", "json"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["summary"]["failed"] == 0
        assert {rec["theorem"] for rec in doc["records"]} == {"LEMMA5"}

    def test_csv_to_file(self, tmp_path, capsys):
        out = tmp_path / "report.csv"
        code = main(
            ["verify", "ortho", "--pmin", "7", "--pmax", "7", "--r", "1", "--format", "csv", "--out", str(out)]
        )
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert lines[0].startswith("theorem,p,r,K,")

    def test_empty_prime_range_exits_2(self, capsys):
        assert main(["verify", "mt1", "--pmin", "24", "--pmax", "28"]) == 2

    def test_bad_r_list_exits_2(self):
        assert main(["verify", "mt1", "--r", "one"]) == 2

    def test_allow_p5_flag(self, capsys):
        code = main(
            ["verify", "hessian", "--pmin", "5", "--pmax", "5", "--r", "1", "--allow-p5", "--format", "json"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["summary"]["total"] > 0 and doc["summary"]["failed"] == 0

    def test_sample_flag(self, capsys):
        code = main(
            ["verify", "eq29", "--pmin", "13", "--pmax", "13", "--r", "1", "--sample", "3", "--format", "json"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["records"]) == 3


class TestSubprocessEntry:
    def test_module_invocation(self):
        proc = run_cli("gamma", "0", "--p", "7", "--K", "3")
        assert proc.returncode == 0
        assert "= 1" in proc.stdout

    def test_unknown_subcommand_exits_2(self):
        proc = run_cli("frobnicate")
        assert proc.returncode == 2

    def test_console_script_help(self):
        proc = run_cli("--help")
        assert proc.returncode == 0
        assert "verify" in proc.stdout
