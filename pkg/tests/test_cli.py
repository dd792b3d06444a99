import json

import numpy as np
import pytest

from dunklpauli.cli import EXIT_BAD_CONFIG, EXIT_OK, EXIT_VERIFY_FAILED, RunConfig, main


def run(argv):
    return main(argv)


class TestConfig:
    def test_dump_config_round_trip(self, tmp_path):
        cfg_path = tmp_path / "cfg.json"
        code = run(
            [
                "spectrum",
                "--nu1",
                "0.2",
                "--nu2=-0.2",
                "--theta",
                "0.5",
                "--cutoff",
                "8",
                "--out",
                str(tmp_path / "s.csv"),
                "--dump-config",
                str(cfg_path),
            ]
        )
        assert code == EXIT_OK
        cfg = RunConfig.from_json(cfg_path.read_text())
        assert cfg == RunConfig(
            subcommand="spectrum",
            nu1=0.2,
            nu2=-0.2,
            theta=0.5,
            cutoff=8.0,
            out=str(tmp_path / "s.csv"),
        )
        # re-serialization is stable too
        assert RunConfig.from_json(cfg.to_json()) == cfg


class TestSpectrumCommand:
    def test_writes_table_with_header(self, tmp_path):
        out = tmp_path / "spec.csv"
        assert run(["spectrum", "--cutoff", "7.5", "--out", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "n,l,m_s,branch,K_minus,K_plus,energy_over_omega"
        assert len(lines) > 1

    def test_constraint_violation_exits_2(self, tmp_path, capsys):
        code = run(
            ["spectrum", "--nu1", "0.4", "--nu2", "0.4", "--theta", "1.0", "--out", str(tmp_path / "x.csv")]
        )
        assert code == EXIT_BAD_CONFIG
        assert "compatibility" in capsys.readouterr().err

    def test_invalid_nu_exits_2(self, tmp_path):
        code = run(["spectrum", "--nu1=-0.8", "--out", str(tmp_path / "x.csv")])
        assert code == EXIT_BAD_CONFIG

    def test_deterministic_output(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["spectrum", "--nu1", "0.3", "--nu2=-0.3", "--theta", "0.5", "--cutoff", "14"]
        assert run(args + ["--out", str(a)]) == EXIT_OK
        assert run(args + ["--out", str(b)]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()

    def test_json_format(self, tmp_path):
        out = tmp_path / "spec.json"
        assert run(["spectrum", "--cutoff", "7.5", "--format", "json", "--out", str(out)]) == EXIT_OK
        data = json.loads(out.read_text())
        assert data["schema_version"] == 1
        assert data["states"][0]["energy_over_omega"] == pytest.approx(3.0)


class TestThermoCommand:
    def test_csv_grid(self, tmp_path):
        out = tmp_path / "t.csv"
        code = run(
            [
                "thermo",
                "--theta",
                "0.5",
                "--nu1",
                "0.2",
                "--nu2=-0.2",
                "--tmin",
                "0.1",
                "--tmax",
                "10",
                "--tsteps",
                "11",
                "--out",
                str(out),
            ]
        )
        assert code == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "sector,nu,theta,T,Z,F,U,S,C_V,e0_mode"
        assert len(lines) == 12

    def test_bad_grid_exits_2(self, tmp_path):
        code = run(["thermo", "--tmin", "5", "--tmax", "1", "--out", str(tmp_path / "t.csv")])
        assert code == EXIT_BAD_CONFIG

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["thermo", "--theta", "1.0", "--tsteps", "40"]
        run(args + ["--out", str(a)])
        run(args + ["--out", str(b)])
        assert a.read_bytes() == b.read_bytes()


class TestSweepCommand:
    def test_sweep_lists(self, tmp_path):
        out = tmp_path / "sw.csv"
        code = run(
            [
                "sweep",
                "--sector=-1",
                "--nu-list",
                "0,0.25",
                "--theta-list",
                "0,0.5,1.0",
                "--tsteps",
                "4",
                "--out",
                str(out),
            ]
        )
        assert code == EXIT_OK
        assert len(out.read_text().splitlines()) == 1 + 2 * 3 * 4


@pytest.fixture(scope="module")
def figdir(tmp_path_factory):
    d = tmp_path_factory.mktemp("figs")
    assert run(["figures", "--tsteps", "30", "--tmax", "10", "--out", str(d)]) == EXIT_OK
    return d


class TestFiguresCommand:
    def test_all_families_emitted(self, figdir):
        names = {p.name for p in figdir.iterdir()}
        assert names == {
            "fig_partition_even.csv",
            "fig_partition_odd.csv",
            "fig_internal_energy_even.csv",
            "fig_internal_energy_odd.csv",
            "fig_entropy_even.csv",
            "fig_entropy_odd.csv",
            "fig_heat_capacity.csv",
        }

    def _columns(self, path):
        lines = path.read_text().splitlines()
        header = lines[0].split(",")
        data = np.array([[float(x) for x in ln.split(",")] for ln in lines[1:]])
        return header, data

    def test_entropy_identical_across_sectors(self, figdir):
        h1, d1 = self._columns(figdir / "fig_entropy_even.csv")
        h2, d2 = self._columns(figdir / "fig_entropy_odd.csv")
        assert np.allclose(d1, d2, rtol=0, atol=1e-13)

    def test_heat_capacity_approaches_two(self, figdir):
        _, data = self._columns(figdir / "fig_heat_capacity.csv")
        assert np.allclose(data[-1, 1:], 2.0, atol=1e-2)

    def test_partition_monotone_in_T(self, figdir):
        _, data = self._columns(figdir / "fig_partition_even.csv")
        assert np.all(np.diff(data[:, 1:], axis=0) > 0)


class TestVerifyCommand:
    def test_radial_suite_passes(self, tmp_path):
        code = run(["verify", "--suite", "radial", "--out", str(tmp_path)])
        assert code == EXIT_OK
        report = (tmp_path / "verify_report.csv").read_text()
        assert "fd_eigensolver_vs_closed_form,PASS" in report
        table = (tmp_path / "verify_radial.csv").read_text().splitlines()
        assert table[0] == "K_plus,n,E_analytic,E_numeric,abs_error"
        assert len(table) == 17  # 4 K values x 4 levels

    def test_injected_energy_offset_fails(self, tmp_path):
        code = run(
            [
                "verify",
                "--suite",
                "radial",
                "--inject-energy-offset",
                "0.1",
                "--out",
                str(tmp_path),
            ]
        )
        assert code == EXIT_VERIFY_FAILED
        assert "ode_residual,FAIL" in (tmp_path / "verify_report.csv").read_text()
