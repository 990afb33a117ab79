import json
import subprocess
import sys

import pytest

BASE = [sys.executable, "-m", "cohomrep"]


def run(*args, check=True):
    proc = subprocess.run(BASE + list(args), capture_output=True, text=True)
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


class TestCatalog:
    def test_u11_json(self):
        out = json.loads(run("catalog", "--kind", "U", "--p", "1", "--q", "1",
                             "--format", "json").stdout)
        assert out["schema"] == "v1"
        assert len(out["data"]) == 3
        assert all(row["provenance"] == "computed" for row in out["data"])

    def test_md_table_has_provenance_column(self):
        out = run("catalog", "--kind", "O", "--p", "2", "--q", "2", "--format", "md").stdout
        header = out.splitlines()[0]
        assert "provenance" in header and "degree" in header

    def test_cap_exit_code(self):
        proc = run("catalog", "--kind", "U", "--p", "9", "--q", "9", check=False)
        assert proc.returncode == 65
        assert "cap" in proc.stderr


class TestLefschetz:
    def test_opq_guaranteed(self):
        out = json.loads(run("lefschetz", "--mode", "restriction", "--G", "O:3,4",
                             "--degree", "3").stdout)
        row = out["data"][0]
        assert row["status"] == "guaranteed" and row["anchor"] == "Thm opq"

    def test_strict_exit_on_failed_criterion(self):
        proc = run("lefschetz", "--mode", "restriction", "--G", "U:2,2", "--H", "U:2,1",
                   "--component", "2;2,1", "--strict", check=False)
        assert proc.returncode == 2
        row = json.loads(proc.stdout)["data"][0]
        assert row["status"] == "fails-criterion"

    def test_conjecture_row(self):
        out = json.loads(run("lefschetz", "--mode", "cup", "--G", "O:3,6", "--H", "O:3,5",
                             "--component", "1,1,1", "--r", "1").stdout)
        assert out["data"][0]["status"] == "conjectured"
        assert out["data"][0]["anchor"] == "Conj C100"

    def test_usage_error_exit(self):
        proc = run("lefschetz", "--mode", "restriction", "--G", "O:3,4",
                   "--bogus-flag", check=False)
        assert proc.returncode == 64


class TestBranch:
    def test_lr(self):
        out = json.loads(run("branch", "--op", "lr", "--lam", "2,1", "--mu", "1",
                             "--nu", "1,1").stdout)
        assert out["data"][0]["coefficient"] == 1

    def test_restrict_o_csv(self):
        out = run("branch", "--op", "restrict-o", "--lam", "1,1", "--p", "2", "--q", "4",
                  "--r", "1", "--format", "csv").stdout
        lines = out.strip().splitlines()
        assert len(lines) == 2 and "contains" in lines[0]


class TestGeometry:
    def test_verify_integral_unit_disk(self):
        out = json.loads(run("geometry", "verify-integral", "--s", "0", "--p", "2",
                             "--n", "1", "--samples", "200000", "--seed", "7").stdout)
        row = out["data"][0]
        assert abs(row["estimate"] - 3.14159) < 0.05
        assert row["within_3sigma"]

    def test_thresholds(self):
        out = json.loads(run("geometry", "thresholds", "--p", "2", "--q", "5",
                             "--r", "1").stdout)
        row = out["data"][0]
        assert row["dx_limit_ones"] == 6
        assert row["l2_iso_max_degree"] == 2


class TestDeterminism:
    @pytest.mark.parametrize("args", [
        ["catalog", "--kind", "O", "--p", "2", "--q", "3", "--format", "json"],
        ["catalog", "--kind", "O", "--p", "2", "--q", "3", "--format", "md"],
        ["geometry", "verify-integral", "--s", "2", "--p", "1", "--n", "2",
         "--samples", "100000", "--seed", "13"],
        ["geometry", "jacobi", "--p", "2", "--q", "2", "--r", "2", "--seed", "5"],
        ["lefschetz", "--mode", "tensor", "--G", "O:3,9", "--degrees", "1,1",
         "--component", "1,1,1;1,1,1"],
    ])
    def test_byte_identical_repeats(self, args):
        a = run(*args).stdout
        b = run(*args).stdout
        assert a == b and a


class TestConfig:
    def test_config_file_and_flag_override(self, tmp_path):
        cfg = tmp_path / "cohomrep.conf"
        cfg.write_text("format = md\nseed = 3\n")
        out = run("catalog", "--kind", "U", "--p", "1", "--q", "1",
                  "--config", str(cfg)).stdout
        assert out.startswith("| ")  # md from config
        out = run("catalog", "--kind", "U", "--p", "1", "--q", "1",
                  "--config", str(cfg), "--format", "json").stdout
        assert out.lstrip().startswith("{")  # flag wins

    def test_bad_config_key(self, tmp_path):
        cfg = tmp_path / "bad.conf"
        cfg.write_text("bogus = 1\n")
        proc = run("catalog", "--kind", "U", "--p", "1", "--q", "1",
                   "--config", str(cfg), check=False)
        assert proc.returncode == 64
