"""Closed-form solutions of the two solvable complex-contour models.

Two families are covered:

* the singular harmonic oscillator on a straight line shifted below the
  real axis (coupling alpha, shift c), with the two-branch spectrum
  E = 4n + 2 +/- 2 alpha;
* the trigonometric Poschl-Teller angular equation on the shifted
  periodic interval (strengths ell and lam, interval multiplier big_m,
  shift eps), analytically solvable for lam = 0, big_m = 2 with spectrum
  E = (k +/- alpha + 1/2)^2, alpha = ell + 1/2.

The +/- label is the quasi-parity of the branch.  Wavefunctions are
returned unnormalized (overall constant fixed to 1): every consumer in
this package compares normalization-insensitive quantities only.
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import UnsupportedModel
from .specfun import (cpow, gegenbauer, gegenbauer_is_degenerate,
                      gegenbauer_renormalized, hyp2f1, laguerre)


@dataclass(frozen=True)
class PthoParams:
    """Shifted singular harmonic oscillator: coupling alpha > 0, downward
    contour shift c (must be positive unless alpha = 1/2, where the
    singular term vanishes)."""
    alpha: float
    c: float

    def __post_init__(self):
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.c <= 0 and self.alpha != 0.5:
            raise ValueError("shift c must be positive when the singular "
                             "term is present (alpha != 1/2)")


@dataclass(frozen=True)
class AngularParams:
    """Periodic Poschl-Teller angular equation.

    ell drives the ell(ell+1)/sin^2 term, lam the lam(lam+1)/cos^2 term,
    big_m the interval multiplier, eps > 0 the downward contour shift.
    Closed-form results exist only for lam = 0, big_m = 2.
    """
    ell: float
    eps: float
    lam: float = 0.0
    big_m: int = 2

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError("ell must be non-negative")
        if self.eps <= 0:
            raise ValueError("contour shift eps must be positive")

    @property
    def alpha(self):
        return self.ell + 0.5


@dataclass(frozen=True)
class HypergeomIndices:
    """Parameters (u, v) of one hypergeometric solution branch, together
    with the separation constant beta they encode: 2u = 1/2 - beta + s*alpha
    and 2v = 1/2 + beta + s*alpha for branch sign s."""
    u: float
    v: float
    beta: float


@dataclass(frozen=True)
class AnalyticLevel:
    """One closed-form level: polynomial index, quasi-parity sign, energy,
    and an eigenfunction evaluator (callable on the real contour
    parameter).  ``degenerate`` marks levels whose naive polynomial factor
    vanishes identically and was replaced by its renormalized limit."""
    index: int
    qparity: int
    energy: float
    eigenfunction: object = field(compare=False, default=None)
    degenerate: bool = False


def _check_sign(qparity):
    if qparity not in (+1, -1):
        raise ValueError("qparity must be +1 or -1")


def _check_angular(p):
    if p.lam != 0.0 or p.big_m != 2:
        raise UnsupportedModel("closed forms require lam = 0 and big_m = 2")


def ptho_energy(n, qparity, p: PthoParams):
    """E = 4n + 2 + qparity * 2 alpha; independent of the shift c."""
    _check_sign(qparity)
    if n < 0:
        raise ValueError("level index must be non-negative")
    return 4.0 * n + 2.0 + qparity * 2.0 * p.alpha


def ptho_wavefunction(n, qparity, p: PthoParams, x):
    """Unnormalized oscillator eigenfunction evaluated at real contour
    parameter x:

        (x - ic)^(s*alpha + 1/2) exp(-(x - ic)^2 / 2) L_n^(s*alpha)((x - ic)^2)
    """
    _check_sign(qparity)
    z = np.asarray(x, dtype=float) - 1j * p.c
    return (cpow(z, qparity * p.alpha + 0.5)
            * np.exp(-z * z / 2.0)
            * laguerre(n, qparity * p.alpha, z * z))


def ptho_levels(p: PthoParams, nmax):
    """All analytic levels with index <= nmax on both quasi-parity
    branches, sorted by energy."""
    levels = []
    for n in range(nmax + 1):
        for s in (-1, +1):
            levels.append(AnalyticLevel(
                index=n, qparity=s, energy=ptho_energy(n, s, p),
                eigenfunction=(lambda x, n=n, s=s: ptho_wavefunction(n, s, p, x))))
    levels.sort(key=lambda lv: lv.energy)
    return levels


def angular_energy(k, qparity, p: AngularParams):
    """E = (k + qparity * alpha + 1/2)^2 with alpha = ell + 1/2."""
    _check_sign(qparity)
    _check_angular(p)
    if k < 0:
        raise ValueError("level index must be non-negative")
    return (k + qparity * p.alpha + 0.5) ** 2


def angular_wavefunction(k, qparity, p: AngularParams, phi):
    """Unnormalized angular eigenfunction at the shifted point phi - i eps:

        (sin z)^(1/2 + s*alpha) C_k^(1/2 + s*alpha)(cos z),  z = phi - i eps.

    On the degenerate set of the Gegenbauer family (weight parameter a
    non-positive integer and k large enough, where the naive polynomial
    vanishes identically) the renormalized limiting polynomial is used
    instead; ``angular_is_degenerate`` reports when that happened.
    """
    _check_sign(qparity)
    _check_angular(p)
    z = np.asarray(phi, dtype=float) - 1j * p.eps
    expo = 0.5 + qparity * p.alpha
    if gegenbauer_is_degenerate(k, expo):
        poly = gegenbauer_renormalized(k, expo, np.cos(z))
    else:
        poly = gegenbauer(k, expo, np.cos(z))
    return cpow(np.sin(z), expo) * poly


def angular_is_degenerate(k, qparity, p: AngularParams):
    """True when the (k, qparity) level's polynomial factor required the
    renormalized limit."""
    return gegenbauer_is_degenerate(k, 0.5 + qparity * p.alpha)


def hypergeom_indices(k, qparity, p: AngularParams):
    """Indices of the terminating hypergeometric branch for level k.

    Inverts the termination condition 2u = -2k, giving the bookkeeping
    value beta = 2k + 1/2 + qparity * alpha; shipped energies never use
    beta.
    """
    _check_sign(qparity)
    beta = 2.0 * k + 0.5 + qparity * p.alpha
    u = 0.5 * (0.5 - beta + qparity * p.alpha)
    v = 0.5 * (0.5 + beta + qparity * p.alpha)
    return HypergeomIndices(u=u, v=v, beta=beta)


def hypergeom_solution(qparity, idx: HypergeomIndices, p: AngularParams, phi):
    """General hypergeometric solution branch at the shifted point:

        (sin z)^(1/2 + s*alpha) 2F1(u, v; 1 + s*alpha; sin^2 z).
    """
    _check_sign(qparity)
    if p.lam != 0.0:
        raise UnsupportedModel("hypergeometric solutions require lam = 0")
    z = np.asarray(phi, dtype=float) - 1j * p.eps
    s2 = np.sin(z) ** 2
    if np.ndim(s2) == 0:
        f = hyp2f1(idx.u, idx.v, 1.0 + qparity * p.alpha, s2)
    else:
        f = np.array([hyp2f1(idx.u, idx.v, 1.0 + qparity * p.alpha, zz)
                      for zz in s2.ravel()]).reshape(s2.shape)
    return cpow(np.sin(z), 0.5 + qparity * p.alpha) * f


def termination_levels(p: AngularParams, kmax):
    """All angular levels with index <= kmax on both quasi-parity branches,
    sorted by energy.  Degenerate-family levels carry degenerate=True."""
    _check_angular(p)
    levels = []
    for k in range(kmax + 1):
        for s in (-1, +1):
            levels.append(AnalyticLevel(
                index=k, qparity=s, energy=angular_energy(k, s, p),
                eigenfunction=(lambda phi, k=k, s=s:
                               angular_wavefunction(k, s, p, phi)),
                degenerate=angular_is_degenerate(k, s, p)))
    levels.sort(key=lambda lv: lv.energy)
    return levels
