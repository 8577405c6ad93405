"""Command-line surface: exit codes, output files, config handling."""

import subprocess
import sys

import pytest

from grunwald.cli import main


@pytest.fixture(autouse=True)
def outdir(tmp_path, monkeypatch):
    monkeypatch.setenv("GRUNWALD_OUTDIR", str(tmp_path))
    return tmp_path


class TestExitCodes:
    def test_verify_order_pass(self, capsys):
        code = main(["verify-order", "--order", "2", "--shift", "1",
                     "--alpha", "3/2"])
        assert code == 0
        out = capsys.readouterr().out
        assert "observed order 2" in out
        assert "PASS" in out

    def test_verify_order_fail_is_one(self, capsys):
        code = main(["verify-order", "--order", "4", "--family", "lubich",
                     "--shift", "1", "--alpha", "3/2", "--expect", "4"])
        assert code == 1
        assert "observed order 1" in capsys.readouterr().out

    def test_argparse_usage_error_is_two(self):
        with pytest.raises(SystemExit) as info:
            main(["steady", "--scheme", "order9"])
        assert info.value.code == 2

    def test_domain_usage_error_is_two(self, capsys):
        code = main(["weights", "--order", "9", "--alpha", "1.5"])
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_subcommand_is_two(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2


class TestWeights:
    def test_stdout_csv(self, capsys):
        code = main(["weights", "--order", "2", "--shift", "1",
                     "--alpha", "1.5", "--count", "3"])
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "k,weight"
        assert len(lines) == 5
        assert float(lines[1].split(",")[1]) == pytest.approx(0.76072577, rel=1e-6)

    def test_file_output(self, outdir, capsys):
        code = main(["weights", "--order", "1", "--alpha", "1.5",
                     "--count", "2", "--output", "w.csv"])
        assert code == 0
        assert (outdir / "w.csv").exists()


class TestConvergenceCommands:
    def test_steady_writes_csv(self, outdir, capsys):
        code = main(["steady", "--scheme", "order2", "--alphas", "1.5",
                     "--n", "16,32"])
        assert code == 0
        text = (outdir / "steady.csv").read_text()
        assert text.startswith("# problem=steady-poly")
        assert "16,0,1.5,order2," in text

    def test_diffusion_with_json_mirror(self, outdir):
        code = main(["diffusion", "--scheme", "order2", "--alphas", "1.5",
                     "--n", "16", "--json"])
        assert code == 0
        assert (outdir / "diffusion.csv").exists()
        assert (outdir / "diffusion.json").exists()

    def test_diffusion_step_rule(self, outdir):
        code = main(["diffusion", "--scheme", "order3", "--alphas", "1.9",
                     "--n", "16", "--m-rule", "ceil-n-3-2"])
        assert code == 0
        assert ",64,1.9,order3," in (outdir / "diffusion.csv").read_text()


class TestScan:
    def test_writes_rows_and_exits_zero(self, outdir, capsys):
        code = main(["scan", "--order", "2", "--shift", "1",
                     "--alpha-min", "1.2", "--alpha-max", "1.8",
                     "--points", "4", "--n", "32"])
        assert code == 0
        lines = (outdir / "scan_p2_r1.csv").read_text().splitlines()
        assert lines[1].startswith("alpha,max_rayleigh")
        assert len(lines) == 2 + 4
        assert all(line.split(",")[4] == "yes" for line in lines[2:])


class TestReproduceTable:
    def test_table3_passes(self, outdir, capsys):
        code = main(["reproduce-table", "--table", "3"])
        assert code == 0
        assert (outdir / "table3_diff.csv").exists()
        assert "PASS" in capsys.readouterr().out


class TestProperties:
    def test_properties_pass(self, capsys):
        code = main(["properties", "--seed", "5"])
        assert code == 0
        assert "0 failed" in capsys.readouterr().out


class TestConfigFile:
    def test_config_supplies_defaults(self, outdir, tmp_path, capsys):
        config = tmp_path / "run.cfg"
        config.write_text(
            "# benchmark slice\n"
            "scheme = order2\n"
            "alphas = 1.5\n"
            "n = 16,32\n"
        )
        code = main(["steady", "--config", str(config)])
        assert code == 0
        text = (outdir / "steady.csv").read_text()
        assert "order2" in text and ",1.5," in text
        assert "64" not in text.split("\n", 2)[2]

    def test_flags_override_config(self, outdir, tmp_path):
        config = tmp_path / "run.cfg"
        config.write_text("scheme = order2\nalphas = 1.5\nn = 16\n")
        code = main(["steady", "--config", str(config),
                     "--scheme", "order3"])
        assert code == 0
        assert "order3" in (outdir / "steady.csv").read_text()

    def test_unknown_key_is_usage_error(self, tmp_path, capsys):
        config = tmp_path / "run.cfg"
        config.write_text("tablecloth = 3\n")
        code = main(["steady", "--config", str(config)])
        assert code == 2
        assert "unknown key" in capsys.readouterr().err

    def test_missing_config_is_usage_error(self, capsys):
        code = main(["steady", "--config", "/nonexistent.cfg"])
        assert code == 2


class TestEntryPoint:
    def test_module_invocation(self):
        result = subprocess.run(
            [sys.executable, "-m", "grunwald", "verify-order",
             "--order", "2", "--shift", "1", "--alpha", "3/2"],
            capture_output=True, text=True,
        )
        assert result.returncode == 0
        assert "PASS" in result.stdout


class TestOutputResolution:
    def test_absolute_output_wins(self, tmp_path, capsys):
        target = tmp_path / "elsewhere" / "w.csv"
        target.parent.mkdir()
        code = main(["weights", "--order", "1", "--alpha", "1.5",
                     "--count", "1", "--output", str(target)])
        assert code == 0
        assert target.exists()

    def test_outdir_flag_beats_env(self, tmp_path, capsys):
        other = tmp_path / "flagdir"
        code = main(["steady", "--alphas", "1.5", "--n", "16",
                     "--outdir", str(other)])
        assert code == 0
        assert (other / "steady.csv").exists()
