import math
import os
import subprocess

import numpy as np
import pytest

import fracfem


def test_gamma_and_power_rule():
    assert fracfem.gamma(3.5) == pytest.approx(math.gamma(3.5), rel=1e-13)
    assert fracfem.rl_integral_power(1.25, -0.25, 0.5) == pytest.approx(math.gamma(0.75) * 0.5, rel=1e-13)
    with pytest.raises(fracfem.DomainError):
        fracfem.gamma(-1.0)


def test_mesh_and_stiffness():
    mesh = fracfem.Mesh(4, delta=2.0)
    assert mesh.nodes == pytest.approx([0, 1 / 16, 1 / 4, 9 / 16, 1])
    a = fracfem.assemble_lead(fracfem.Mesh(2), 1.5)
    assert a.shape == (1, 1)
    assert a[0, 0] == pytest.approx(-(4 - 16 * 0.5**1.5) / math.gamma(2.5), rel=1e-12)
    b = fracfem.assemble_lead(fracfem.Mesh(8), 1.4)
    assert np.allclose(b[1:, 1:], b[:-1, :-1], rtol=1e-12, atol=0)
    with pytest.raises(fracfem.ArgumentError):
        fracfem.Mesh(1)


def test_reconstruction_solve():
    alpha = 1.5
    sol = fracfem.solve(alpha, example="a", m=32)
    assert sol.mu_h == pytest.approx(1 / math.gamma(alpha + 2) - 2 / math.gamma(alpha + 3), rel=1e-13)
    assert sol.mu_h == pytest.approx(fracfem.exact_mu(alpha), rel=1e-14)
    assert len(sol.coeffs) == 31
    assert sol(1.0) == 0.0
    with pytest.raises(fracfem.ArgumentError):
        fracfem.solve(1.25, bc="mixed")
    mixed = fracfem.solve(1.75, example="c", potential=True, bc="mixed", m=32)
    assert math.isfinite(mixed.mu_h)


def test_convergence_table():
    rows = fracfem.convergence_table(alpha=[1.5], example="a", method="standard", levels="4..6")
    assert [r["k"] for r in rows] == [4, 5, 6]
    assert rows[0]["rate_linf"] is None
    assert rows[0]["err_mu"] is None
    assert rows[2]["rate_linf"] == pytest.approx(0.5, abs=0.05)
    assert rows[0]["expected_linf"] == pytest.approx(0.5)


def test_experiment_errors():
    with pytest.raises(fracfem.ArgumentError):
        fracfem.run_experiment('{"levels": "6..5"}')
    text = fracfem.run_experiment('{"alpha": 1.5, "levels": "3..3", "format": "markdown"}')
    assert text.startswith("### alpha = 1.5")


@pytest.mark.skipif("FRACFEM_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module():
    args = [os.environ["FRACFEM_CLI"], "--alpha", "1.25", "--levels", "3..4", "--method", "recon"]
    out = subprocess.run(args, check=True, capture_output=True, text=True).stdout
    assert out.splitlines()[0] == fracfem.CSV_HEADER
    same = fracfem.run_experiment('{"alpha": 1.25, "levels": "3..4", "method": "recon"}')
    assert out == same
