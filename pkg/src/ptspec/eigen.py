"""Dense non-Hermitian spectra: solve, classify, verify, scan.

The eigensolver itself delegates to LAPACK's balanced Hessenberg-QR
driver (scipy.linalg.eig); everything around it -- reality/conjugate-pair
classification, PT-defect of eigenvectors, matching against closed-form
levels, and coupling scans with crossing refinement -- lives here.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.optimize import minimize_scalar

from .contour import Contour, HamiltonianMatrix, build_hamiltonian, contour_for
from .exceptions import (InsufficientLevels, NonConvergence,
                         UnpairedComplexValue)
from .models import PthoParams

REAL = "real"
PAIR = "pair"
SPURIOUS = "spurious"

DEFAULT_REALITY_TOL = 1e-7
DEFAULT_SPURIOUS_FACTOR = 0.5
DEFAULT_CROSSING_TOL = 1e-3
DEFAULT_ORDER_CAP = 4096
BACKWARD_ERROR_TOL = 1e-10
# maximum relative distance of a retained eigenvalue to the conjugate of
# the multiset before the input is declared non-PT-structured
PAIR_CLOSURE_TOL = 0.1


@dataclass
class SpectrumResult:
    """Eigenvalues sorted by (Re, Im), optional unit eigenvectors aligned
    column-for-column, per-value classification, per-vector PT defect."""
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray = None
    classifications: list = None
    pt_defects: np.ndarray = None

    def real_values(self):
        """Retained real eigenvalues (classification 'real'), ascending."""
        if self.classifications is None:
            raise ValueError("spectrum has not been classified")
        mask = np.array([c == REAL for c in self.classifications])
        return self.eigenvalues[mask].real

    def retained(self):
        """All non-spurious eigenvalues, in sorted order."""
        if self.classifications is None:
            return self.eigenvalues
        mask = np.array([c != SPURIOUS for c in self.classifications])
        return self.eigenvalues[mask]


def _sort_order(values):
    return np.lexsort((values.imag, values.real))


def eig_dense(h: HamiltonianMatrix, want_vectors=False,
              order_cap=DEFAULT_ORDER_CAP):
    """Full spectrum of the discretized operator.

    Eigenvalues come back sorted by real part (imaginary part breaks
    ties).  With want_vectors, eigenvectors are normalized to unit
    Euclidean norm and the backward error ||Hv - Ev|| / ||H|| of every
    pair is verified against 1e-10.
    """
    if h.order > order_cap:
        raise ValueError(f"matrix order {h.order} exceeds cap {order_cap}")
    m = h.matrix
    try:
        if want_vectors:
            values, vectors = scipy.linalg.eig(m, check_finite=False)
        else:
            values = scipy.linalg.eigvals(m, check_finite=False)
            vectors = None
    except scipy.linalg.LinAlgError as exc:   # QR iteration failed to deflate
        raise NonConvergence(str(exc)) from exc
    order = _sort_order(values)
    values = values[order]
    if vectors is not None:
        vectors = vectors[:, order]
        vectors = vectors / np.linalg.norm(vectors, axis=0, keepdims=True)
        hnorm = np.linalg.norm(m, ord=1)
        resid = np.linalg.norm(m @ vectors - vectors * values, axis=0) / hnorm
        worst = float(resid.max())
        if worst > BACKWARD_ERROR_TOL:
            raise NonConvergence(
                f"eigenpair backward error {worst:.3e} exceeds "
                f"{BACKWARD_ERROR_TOL:.0e}")
    return SpectrumResult(eigenvalues=values, eigenvectors=vectors)


def classify_spectrum(values, reality_tol=DEFAULT_REALITY_TOL,
                      spurious_cut=np.inf, pair_tol=None):
    """Label each eigenvalue real / conjugate-pair / spurious.

    A value is real when |Im| <= reality_tol * max(1, |Re|); values with
    Re above spurious_cut are grid artifacts.  The input multiset must
    be closed under conjugation up to PAIR_CLOSURE_TOL (relative): an
    eigenvalue whose mirror image is missing altogether means the
    operator was never PT-structured, and raises UnpairedComplexValue.

    The remaining complex values are matched greedily into conjugate
    pairs (nearest partner first) within pair_tol, which scales like
    reality_tol (default 1000x it).  Leftovers exist because rounding
    on a strongly non-normal matrix scatters partners by far more than
    machine epsilon: a leftover within pair_tol of the axis is a
    rounding-perturbed real eigenvalue and is demoted to real, one
    farther out is genuinely complex and keeps the pair label (closure
    of the whole multiset was already verified).
    """
    values = np.asarray(values, dtype=complex)
    values = values[_sort_order(values)]
    if pair_tol is None:
        pair_tol = 1000.0 * reality_tol
    scale = np.maximum(1.0, np.abs(values.real))
    labels = [None] * len(values)
    for i, v in enumerate(values):
        if v.real > spurious_cut:
            labels[i] = SPURIOUS
        elif abs(v.imag) <= reality_tol * scale[i]:
            labels[i] = REAL

    retained = values[[lab != SPURIOUS for lab in labels]]
    if len(retained):
        closure = np.abs(retained[:, None] - np.conj(retained)[None, :])
        defect = closure.min(axis=1) / np.maximum(1.0, np.abs(retained))
        worst = int(np.argmax(defect))
        if defect[worst] > PAIR_CLOSURE_TOL:
            raise UnpairedComplexValue(
                f"eigenvalue {retained[worst]} has no conjugate partner: "
                f"closure defect {defect[worst]:.3e} exceeds "
                f"{PAIR_CLOSURE_TOL}")

    pending = [i for i, lab in enumerate(labels) if lab is None]
    upper = [i for i in pending if values[i].imag > 0]
    lower = set(i for i in pending if values[i].imag <= 0)
    for i in upper:
        best, best_d = None, np.inf
        for j in lower:
            d = abs(values[i] - np.conj(values[j]))
            if d < best_d:
                best, best_d = j, d
        if best is not None and best_d <= pair_tol * scale[i]:
            labels[i] = labels[best] = PAIR
            lower.remove(best)
    for i in pending:
        if labels[i] is None:
            labels[i] = (REAL if abs(values[i].imag) <= pair_tol * scale[i]
                         else PAIR)
    return SpectrumResult(eigenvalues=values, classifications=labels)


def pt_defect(v, g: Contour = None):
    """Distance of a vector from exact PT symmetry on a reflection-
    symmetric grid: min over a unit phase of
    || conj(reverse(v)) - exp(i theta) v || / ||v||.

    The minimizing phase is theta = arg(<v, conj(reverse(v))>), so no
    search is needed.  Zero for PT-symmetric vectors, sqrt(2) for
    maximally asymmetric ones.  Invariant under scaling and global phase.
    """
    v = np.asarray(v, dtype=complex)
    w = np.conj(v[::-1])
    ip = np.vdot(v, w)
    theta = np.angle(ip) if ip != 0 else 0.0
    return float(np.linalg.norm(w - np.exp(1j * theta) * v)
                 / np.linalg.norm(v))


def solve_spectrum(model, contour, want_vectors=False,
                   reality_tol=DEFAULT_REALITY_TOL,
                   spurious_factor=DEFAULT_SPURIOUS_FACTOR,
                   order_cap=DEFAULT_ORDER_CAP):
    """Assemble, diagonalize and classify in one call.

    spurious_factor sets the artifact cutoff at factor * 4/h^2, the top
    of the 3-point stencil's dispersion range.
    """
    ham = build_hamiltonian(model, contour)
    raw = eig_dense(ham, want_vectors=want_vectors, order_cap=order_cap)
    cut = spurious_factor * 4.0 / ham.gridstep ** 2
    result = classify_spectrum(raw.eigenvalues, reality_tol=reality_tol,
                               spurious_cut=cut)
    if want_vectors:
        result.eigenvectors = raw.eigenvectors
        result.pt_defects = np.array(
            [pt_defect(raw.eigenvectors[:, i], contour)
             for i in range(raw.eigenvectors.shape[1])])
    return result


@dataclass
class MatchEntry:
    numeric: float
    analytic: float
    abs_err: float
    rel_err: float


@dataclass
class MatchReport:
    entries: list
    tol: float

    @property
    def passed(self):
        return all(e.rel_err <= self.tol for e in self.entries)

    @property
    def worst_rel_err(self):
        return max(e.rel_err for e in self.entries)

    @property
    def worst_abs_err(self):
        return max(e.abs_err for e in self.entries)


def match_spectra(numeric: SpectrumResult, analytic_levels, count, tol):
    """Pair the lowest `count` numeric real eigenvalues with the sorted
    closed-form multiset and report per-level errors.

    Relative error is measured against max(1, |analytic|) so zero-energy
    levels stay meaningful.
    """
    real = np.sort(numeric.real_values())
    if len(real) < count:
        raise InsufficientLevels(
            f"only {len(real)} real levels retained, need {count}")
    energies = sorted(lv.energy for lv in analytic_levels)
    if len(energies) < count:
        raise InsufficientLevels(
            f"only {len(energies)} analytic levels supplied, need {count}")
    entries = []
    for num, ana in zip(real[:count], energies[:count]):
        abs_err = abs(num - ana)
        entries.append(MatchEntry(numeric=float(num), analytic=float(ana),
                                  abs_err=abs_err,
                                  rel_err=abs_err / max(1.0, abs(ana))))
    return MatchReport(entries=entries, tol=tol)


@dataclass
class Crossing:
    param: float
    pair: tuple
    gap: float


@dataclass
class ScanResult:
    params: np.ndarray
    energies: list                      # one array of retained levels per param
    crossings: list = field(default_factory=list)
    failures: list = field(default_factory=list)


def scan_parameter(spectrum_fn, lo, hi, steps, levels,
                   crossing_tol=DEFAULT_CROSSING_TOL, refine=True):
    """Sweep a spectrum-producing family and locate unavoided crossings.

    spectrum_fn(param) must return the retained low-lying eigenvalues
    (complex, enough of them to cover `levels`).  Adjacent-gap local
    minima over the sweep are refined by bounded scalar minimization of
    the gap; a refined minimum below crossing_tol is reported as a
    crossing of that level pair.  A family evaluation that raises is
    recorded as a failure and its grid point skipped.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    params = np.linspace(lo, hi, steps)
    cache = {}

    def retained(p):
        p = float(p)
        if p not in cache:
            vals = np.asarray(spectrum_fn(p), dtype=complex)
            vals = vals[_sort_order(vals)]
            if len(vals) < levels:
                raise InsufficientLevels(
                    f"family produced {len(vals)} levels, need {levels}")
            cache[p] = vals[:levels]
        return cache[p]

    energies, ok, failures = [], [], []
    for p in params:
        try:
            energies.append(retained(p))
            ok.append(True)
        except Exception as exc:        # record and skip the bad point
            energies.append(None)
            ok.append(False)
            failures.append((float(p), str(exc)))

    def gap(p, i):
        vals = retained(p)
        return abs(vals[i + 1] - vals[i])

    crossings = []
    for i in range(levels - 1):
        gaps = np.array([abs(e[i + 1] - e[i]) if e is not None else np.nan
                         for e in energies])
        for j in range(len(params)):
            if np.isnan(gaps[j]):
                continue
            left = gaps[j - 1] if j > 0 and not np.isnan(gaps[j - 1]) else np.inf
            right = (gaps[j + 1] if j + 1 < len(gaps)
                     and not np.isnan(gaps[j + 1]) else np.inf)
            if not (gaps[j] <= left and gaps[j] < right):
                continue
            p_lo = params[max(j - 1, 0)]
            p_hi = params[min(j + 1, len(params) - 1)]
            p_star, g_star = params[j], gaps[j]
            if refine and p_hi > p_lo:
                try:
                    res = minimize_scalar(lambda p: gap(p, i), bounds=(p_lo, p_hi),
                                          method="bounded",
                                          options={"xatol": 1e-4, "maxiter": 60})
                    if res.fun < g_star:
                        p_star, g_star = float(res.x), float(res.fun)
                except Exception as exc:
                    failures.append((float(params[j]), str(exc)))
            if g_star < crossing_tol:
                crossings.append(Crossing(param=p_star, pair=(i, i + 1),
                                          gap=g_star))
    crossings.sort(key=lambda c: (c.param, c.pair))
    return ScanResult(params=params, energies=energies,
                      crossings=crossings, failures=failures)


def crossing_params(scan: ScanResult, merge_tol=1e-2):
    """Distinct crossing parameter values, merging repeats from different
    level pairs that meet at the same point."""
    out = []
    for c in sorted(scan.crossings, key=lambda c: c.param):
        if not out or abs(c.param - out[-1]) > merge_tol:
            out.append(c.param)
        else:
            out[-1] = 0.5 * (out[-1] + c.param)
    return out


def ptho_analytic_family(c=1.0, nmax=8):
    """Closed-form oscillator family for scans: alpha -> exact energies."""
    def spectrum(alpha):
        energies = [4.0 * n + 2.0 + s * 2.0 * alpha
                    for n in range(nmax + 1) for s in (-1, +1)]
        return np.sort(np.array(energies, dtype=complex))
    return spectrum


def ptho_numeric_family(c=1.0, npoints=600, halfwidth=10.0,
                        reality_tol=DEFAULT_REALITY_TOL,
                        spurious_factor=DEFAULT_SPURIOUS_FACTOR):
    """Discretized oscillator family for scans.

    Only the spurious cutoff is applied; no reality/pair classification.
    Inside the tiny exceptional-point window around a crossing the
    colliding levels are complex, and at the crossing itself rounding
    breaks their exact conjugate pairing, so classification would reject
    precisely the points the scan is after.
    """
    def spectrum(alpha):
        model = PthoParams(alpha=alpha, c=c)
        g = contour_for(model, npoints=npoints, halfwidth=halfwidth)
        ham = build_hamiltonian(model, g)
        values = eig_dense(ham).eigenvalues
        cut = spurious_factor * 4.0 / ham.gridstep ** 2
        return values[values.real <= cut]
    return spectrum
