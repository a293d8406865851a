"""Command line behavior: outputs, exit codes, seed resolution."""
import math

import numpy as np
import pytest

from opnorm import cli
from opnorm.cli import (
    EXIT_EXPONENT,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_VERIFY,
    EXIT_WRITE,
    SEED_ENV,
    build_parser,
    main,
    resolve_seed,
)
from opnorm.estimate import DEFAULT_SEED
from opnorm.io import MatrixParseError

LOSHU_CSV = "8,1,6\n3,5,7\n4,9,2\n"


@pytest.fixture
def loshu_csv(tmp_path):
    path = tmp_path / "loshu.csv"
    path.write_text(LOSHU_CSV)
    return str(path)


@pytest.fixture
def run(capsys):
    def _run(argv):
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


class TestSeedResolution:
    def test_flag_wins(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "7")
        assert resolve_seed(123) == 123

    def test_env_parsed_with_base_prefixes(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "0x10")
        assert resolve_seed(None) == 16
        monkeypatch.setenv(SEED_ENV, "42")
        assert resolve_seed(None) == 42

    def test_default(self, monkeypatch):
        monkeypatch.delenv(SEED_ENV, raising=False)
        assert resolve_seed(None) == DEFAULT_SEED

    def test_bad_env(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV, "not-a-number")
        with pytest.raises(MatrixParseError):
            resolve_seed(None)

    def test_bad_env_exit_code(self, monkeypatch, run, loshu_csv):
        monkeypatch.setenv(SEED_ENV, "junk")
        code, out, err = run(["norm", loshu_csv, "--p", "1", "--q", "2"])
        assert code == EXIT_PARSE
        assert SEED_ENV in err


class TestNorm:
    def test_exact_line(self, run, loshu_csv):
        code, out, err = run(["norm", loshu_csv, "--p", "1", "--q", "2"])
        assert code == EXIT_OK
        assert out == "10.3440804328 exact column-norm\n"

    def test_bracket_line(self, run, loshu_csv):
        code, out, err = run(["norm", loshu_csv, "--p", "2", "--q", "4"])
        assert code == EXIT_OK
        head, status, method, lo_part, hi_part = out.split()
        assert status == "bracket" and method == "rt-bracket"
        assert lo_part.startswith("lo=") and hi_part.startswith("hi=")
        assert float(head) == float(lo_part[3:])
        assert float(lo_part[3:]) <= float(hi_part[3:])

    def test_witness_flag(self, run, loshu_csv):
        code, out, err = run(["norm", loshu_csv, "--p", "1", "--q", "2", "--witness"])
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[1] == "witness:"
        coords = [complex(*map(float, line.split(","))) for line in lines[2:]]
        assert len(coords) == 3
        x = np.array(coords)
        val = float(np.linalg.norm(np.array([[8, 1, 6], [3, 5, 7], [4, 9, 2]]) @ x))
        assert abs(val / np.abs(x).sum() - math.sqrt(107.0)) <= 1e-6

    def test_rational_exponents(self, run, loshu_csv):
        code, out, err = run(["norm", loshu_csv, "--p", "3/2", "--q", "1"])
        assert code == EXIT_OK
        assert abs(float(out.split()[0]) - 15.0 * 3.0 ** (1.0 / 3.0)) <= 1e-9

    def test_bad_exponent(self, run, loshu_csv):
        code, out, err = run(["norm", loshu_csv, "--p", "0.5", "--q", "2"])
        assert code == EXIT_EXPONENT
        assert "invalid --p" in err

    def test_missing_file(self, run, tmp_path):
        code, out, err = run(["norm", str(tmp_path / "nope.csv"), "--p", "2", "--q", "2"])
        assert code == EXIT_PARSE
        assert "parse error" in err

    def test_malformed_csv(self, run, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,2\n3,x\n")
        code, out, err = run(["norm", str(path), "--p", "2", "--q", "2"])
        assert code == EXIT_PARSE
        assert "line 2 column 2" in err

    def test_deterministic_output(self, run, loshu_csv):
        a = run(["norm", loshu_csv, "--p", "2", "--q", "4", "--witness"])
        b = run(["norm", loshu_csv, "--p", "2", "--q", "4", "--witness"])
        assert a == b

    def test_unreachable_server(self, run, loshu_csv):
        code, out, err = run(["norm", loshu_csv, "--p", "1", "--q", "2",
                              "--server", "http://127.0.0.1:9"])
        assert code == EXIT_FAILURE
        assert "failed" in err


class TestWitnessCommand:
    def test_prints_value_and_coords(self, run, loshu_csv):
        code, out, err = run(["witness", loshu_csv, "--p", "2", "--q", "2"])
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert lines[0] == "value 15 exact"
        assert lines[1] == "witness:"
        assert len(lines) == 5


class TestScan:
    def test_writes_csv(self, run, loshu_csv, tmp_path):
        out_path = str(tmp_path / "grid.csv")
        code, out, err = run(["scan", loshu_csv, "--resolution", "2", "--out", out_path])
        assert code == EXIT_OK
        assert out == f"wrote 9 cells to {out_path}\n"
        lines = open(out_path).read().strip().split("\n")
        assert lines[0] == "u,v,value,status,method"
        assert len(lines) == 10
        assert lines[1] == "0,0,15,exact,closed-form"

    def test_byte_identical_across_runs(self, run, loshu_csv, tmp_path):
        a_path, b_path = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
        run(["scan", loshu_csv, "--resolution", "2", "--out", a_path])
        run(["scan", loshu_csv, "--resolution", "2", "--out", b_path])
        assert open(a_path, "rb").read() == open(b_path, "rb").read()

    def test_unwritable_out(self, run, loshu_csv, tmp_path):
        code, out, err = run(["scan", loshu_csv, "--resolution", "2",
                              "--out", str(tmp_path / "no-dir" / "x.csv")])
        assert code == EXIT_WRITE
        assert "cannot write" in err

    def test_service_rejection_is_failure(self, run, loshu_csv, tmp_path):
        code, out, err = run(["scan", loshu_csv, "--resolution", "1",
                              "--out", str(tmp_path / "x.csv")])
        assert code == EXIT_FAILURE
        assert "422" in err


class TestClassify:
    def test_magic(self, run, loshu_csv):
        code, out, err = run(["classify", loshu_csv])
        assert code == EXIT_OK and out == "magic-squared alpha=15\n"

    def test_complex_json(self, run, tmp_path):
        path = tmp_path / "perm.json"
        path.write_text('{"n": 2, "entries": [[[0,0],[0,-1]],[[1,0],[0,0]]]}')
        code, out, err = run(["classify", str(path)])
        assert code == EXIT_OK
        assert out == "unitary-permutation sigma=(2,1) phases=(0-1j,1)\n"


class TestVerify:
    def test_strictness_suite(self, run, loshu_csv):
        code, out, err = run(["verify", loshu_csv, "--suite", "strictness"])
        assert code == EXIT_OK
        lines = out.strip().split("\n")
        assert all(line.startswith("PASS strictness:") for line in lines[:-1])
        assert lines[-1] == "3/3 checks passed"

    def test_all_suites(self, run, loshu_csv):
        code, out, err = run(["verify", loshu_csv])
        assert code == EXIT_OK
        assert out.strip().split("\n")[-1].endswith("checks passed")

    def test_failure_exit_code(self, run, loshu_csv, monkeypatch):
        # a failing check from the service must map to the verify exit code
        def fake_post(server, path, payload):
            return {"passed": False, "checks": [
                {"name": "made-up", "passed": False, "detail": "boom"}]}

        monkeypatch.setattr(cli, "_post", fake_post)
        code, out, err = run(["verify", loshu_csv])
        assert code == EXIT_VERIFY
        assert "FAIL made-up: boom" in out
        assert "0/1 checks passed" in out


class TestParser:
    def test_serve_wiring(self):
        args = build_parser().parse_args(["serve", "--port", "9001"])
        assert args.func is cli.cmd_serve
        assert args.port == 9001

    def test_norm_requires_exponents(self, capsys):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["norm", "m.csv"])
        capsys.readouterr()
