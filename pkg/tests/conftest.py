"""Shared fixtures: the expensive dense solves are computed once per
session and reused by the acceptance criteria."""

import numpy as np
import pytest

import ptspec as ps

PTHO_ALPHA = 1.5
PTHO_C = 1.0
PTHO_HALFWIDTH = 12.0

ANGULAR_ELL = 1.0
ANGULAR_EPS = 0.1
# reality tolerance for the angular runs: exact double degeneracies split
# by up to ~2e-5 at npoints=1024, partly into the imaginary direction, so
# the default 1e-7 would misread rounding-split pairs as complex
ANGULAR_REALITY_TOL = 1e-4


def solve_ptho(alpha, c, npoints, want_vectors=False):
    model = ps.PthoParams(alpha=alpha, c=c)
    g = ps.contour_for(model, npoints=npoints, halfwidth=PTHO_HALFWIDTH)
    return ps.solve_spectrum(model, g, want_vectors=want_vectors)


@pytest.fixture(scope="session")
def ptho_2000():
    return solve_ptho(PTHO_ALPHA, PTHO_C, 2000, want_vectors=True)


@pytest.fixture(scope="session")
def ptho_1000():
    return solve_ptho(PTHO_ALPHA, PTHO_C, 1000)


@pytest.fixture(scope="session")
def ptho_2000_c05():
    return solve_ptho(PTHO_ALPHA, 0.5, 2000)


@pytest.fixture(scope="session")
def ptho_2000_c20():
    return solve_ptho(PTHO_ALPHA, 2.0, 2000)


@pytest.fixture(scope="session")
def ptho_harmonic():
    return solve_ptho(0.5, 1.0, 2000)


@pytest.fixture(scope="session")
def angular_1024():
    model = ps.AngularParams(ell=ANGULAR_ELL, eps=ANGULAR_EPS)
    g = ps.contour_for(model, npoints=1024)
    return ps.solve_spectrum(model, g, want_vectors=True,
                             reality_tol=ANGULAR_REALITY_TOL)


@pytest.fixture(scope="session")
def ptho_scan():
    family = ps.ptho_numeric_family(c=PTHO_C, npoints=600, halfwidth=10.0)
    return ps.scan_parameter(family, 0.5, 2.5, 41, 6, crossing_tol=5e-3)


def ode_residual(wavefunction, potential, energy, grid):
    """Energy-relative discrete residual of an analytic eigenfunction:
    || (-D2 + V - E) psi || / (||psi|| max(1, |E|)) with the 3-point
    Laplacian on a uniform grid."""
    h = grid[1] - grid[0]
    psi = wavefunction(grid)
    v = potential(grid)
    lap = (psi[2:] - 2.0 * psi[1:-1] + psi[:-2]) / h ** 2
    r = -lap + (v[1:-1] - energy) * psi[1:-1]
    return (np.linalg.norm(r) / np.linalg.norm(psi[1:-1])
            / max(1.0, abs(energy)))
