import subprocess
import sys

import numpy as np
import pytest

from kitaev_dst.cli import fmt, main
from kitaev_dst.spectral import WORKERS_ENV


def read(path):
    lines = path.read_text().splitlines()
    return lines[0].split(","), [row.split(",") for row in lines[1:]]


def test_pbc_gap(tmp_path):
    out = tmp_path / "gap.csv"
    assert main(["pbc-gap", "--L", "51", "--delta", "0.2", "--out", str(out)]) == 0
    header, rows = read(out)
    assert header == ["mu", "gap"]
    assert len(rows) == 601
    mu = np.array([float(r[0]) for r in rows])
    gap = np.array([float(r[1]) for r in rows])
    assert mu[0] == -3.0 and mu[-1] == 3.0
    assert gap[np.argmin(np.abs(mu + 2))] <= 1e-12


@pytest.mark.parametrize("kind", ["singular", "eigen", "perturbative", "effective"])
def test_spectrum_kinds(tmp_path, kind):
    out = tmp_path / "s.csv"
    assert main(["spectrum", "--L", "5", "--delta", "0.3", "--kind", kind, "--out", str(out)]) == 0
    header, rows = read(out)
    assert header[0] == "zeta" and len(rows) == 5
    assert [r[0] for r in rows] == ["1", "2", "3", "4", "5"]


def test_spectrum_representations_agree(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    base = ["spectrum", "--L", "9", "--t", "0.8", "--delta", "0.4", "--mu", "0.3"]
    main(base + ["--out", str(a)])
    main(base + ["--representation", "position", "--out", str(b)])
    va = np.array([float(r[1]) for r in read(a)[1]])
    vb = np.array([float(r[1]) for r in read(b)[1]])
    np.testing.assert_allclose(va, vb, atol=1e-12)
    assert np.all(np.diff(va) <= 0)


def test_spectrum_two_site_example(tmp_path):
    out = tmp_path / "s.csv"
    main(["spectrum", "--L", "2", "--delta", "0.5", "--kind", "perturbative", "--out", str(out)])
    assert float(read(out)[1][0][1]) == pytest.approx(-0.875)


def test_perturbative_needs_hopping(tmp_path, capsys):
    code = main(["spectrum", "--L", "3", "--t", "0", "--delta", "1", "--kind", "effective", "--out", str(tmp_path / "x")])
    assert code == 1
    assert "requires t > 0" in capsys.readouterr().err


def test_phase_diagram(tmp_path):
    out = tmp_path / "pd.csv"
    argv = ["phase-diagram", "--L", "21", "--eta-steps", "3", "--mu-steps", "5", "--workers", "1", "--out", str(out)]
    assert main(argv) == 0
    header, rows = read(out)
    assert header == ["eta", "mu_tilde", "d0", "topological"]
    assert len(rows) == 15
    assert {r[3] for r in rows} <= {"0", "1"}
    mid = next(r for r in rows if float(r[0]) == 0.5 and float(r[1]) == 0.0)
    assert mid[3] == "1"


def test_phase_diagram_bytes_independent_of_workers(tmp_path):
    outs = []
    for w in ("1", "8"):
        out = tmp_path / f"pd{w}.csv"
        main(["phase-diagram", "--L", "15", "--eta-steps", "6", "--mu-steps", "7", "--workers", w, "--out", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_workers_env_used(tmp_path, monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "0")
    argv = ["phase-diagram", "--L", "5", "--eta-steps", "2", "--mu-steps", "2", "--out", str(tmp_path / "p.csv")]
    assert main(argv) == 1
    assert main(argv + ["--workers", "2"]) == 0
    monkeypatch.setenv(WORKERS_ENV, "2")
    assert main(argv) == 0


def test_zero_modes(tmp_path, capsys):
    out = tmp_path / "zm.csv"
    assert main(["zero-modes", "--L", "51", "--eta", "0.3", "--mu-tilde", "0.1", "--out", str(out)]) == 0
    header, rows = read(out)
    assert header == ["index", "phiA", "phiB", "psiA", "psiB"]
    assert len(rows) == 51
    err = capsys.readouterr().err
    summary = dict(line.split("=") for line in err.strip().splitlines())
    assert set(summary) == {"d0", "residual_left", "residual_right", "xi_A", "r2_A", "xi_B", "r2_B"}
    assert float(summary["xi_B"]) > 0 and float(summary["r2_B"]) >= 0.99


def test_zero_modes_sweet_spot(tmp_path):
    out = tmp_path / "zm.csv"
    assert main(["zero-modes", "--L", "7", "--eta", "0.5", "--mu-tilde", "0", "--method", "svd", "--out", str(out)]) == 0
    rows = read(out)[1]
    assert float(rows[0][4]) == pytest.approx(1.0)
    assert float(rows[-1][3]) == pytest.approx(1.0)


def test_zero_modes_trivial_point(tmp_path, capsys):
    code = main(["zero-modes", "--L", "21", "--eta", "0.5", "--mu-tilde", "2.5", "--out", str(tmp_path / "z.csv")])
    assert code == 1
    err = capsys.readouterr().err
    assert err.startswith("kitaev-dst zero-modes: error:") and "trivial" in err
    assert not (tmp_path / "z.csv").exists()


def test_zero_modes_bytes_reproducible(tmp_path):
    outs = []
    for w in ("1", "8"):
        out = tmp_path / f"z{w}.csv"
        main(["zero-modes", "--L", "51", "--eta", "0.3", "--mu-tilde", "0.1", "--seed", "3", "--workers", w, "--out", str(out)])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_zero_mode_mus(tmp_path):
    out = tmp_path / "mus.csv"
    assert main(["zero-mode-mus", "--L", "3", "--delta", "0.0", "--out", str(out)]) == 0
    header, rows = read(out)
    assert header == ["zeta", "mu_tilde"]
    np.testing.assert_allclose([float(r[1]) for r in rows], [-np.sqrt(2), 0.0, np.sqrt(2)], atol=1e-15)


@pytest.mark.parametrize(
    "argv",
    [
        ["pbc-gap", "--L", "0", "--delta", "0.2"],
        ["pbc-gap", "--L", "5", "--delta", "0.2", "--mu-steps", "1"],
        ["phase-diagram", "--L", "5", "--eta-max", "1.5"],
        ["phase-diagram", "--L", "5", "--threshold", "0"],
        ["zero-modes", "--L", "5", "--eta", "2", "--mu-tilde", "0"],
        ["zero-mode-mus", "--L", "5", "--t", "0", "--delta", "0.2"],
    ],
)
def test_invalid_input_exit_code(tmp_path, argv, capsys):
    assert main(argv + ["--out", str(tmp_path / "o.csv")]) == 1
    assert "error:" in capsys.readouterr().err


def test_unwritable_output(tmp_path, capsys):
    assert main(["zero-mode-mus", "--L", "3", "--delta", "0.1", "--out", str(tmp_path / "missing" / "o.csv")]) == 1
    assert "cannot write" in capsys.readouterr().err


def test_floats_round_trip():
    rng = np.random.default_rng(0)
    for x in np.concatenate([rng.standard_normal(200) * 10.0 ** rng.integers(-300, 300, 200), [0.0, -0.0, 1e-320]]):
        assert float(fmt(x)) == x


def test_module_entry_point(tmp_path):
    out = tmp_path / "m.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "kitaev_dst", "zero-mode-mus", "--L", "2", "--delta", "0.1", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.read_text().startswith("zeta,mu_tilde\n1,")
