"""
Resonance structure from the roots of the reduced denominators.
"""

import dataclasses
import warnings
import numpy as np
import scipy.linalg
from numpy.polynomial import Polynomial
from numpy.polynomial.polynomial import polycompanion
from .features import detect_features, peaks
from ..response.reduced import _require_zero
from ..utils.errors import ParameterError
from ..utils.logger import get_logger

logger = get_logger(__name__)

CASES = ('eq13', 'eq14', 'eq16')
ROOT_RESIDUAL_TOL = 1e-8
LEADING_COEFFICIENT_TOL = 1e-12
# Multiple of the largest linewidth within which a root counts as resonant.
RESONANCE_WIDTH_FACTOR = 5


@dataclasses.dataclass(frozen=True, eq=False)
class RootReport:
    """
    case : str
        'eq13' (bare cavity), 'eq14' (atoms) or 'eq16' (linear coupling with atoms).
    coefficients : array
        complex coefficients in increasing powers of delta.
    roots : array
        all complex roots, sorted by real part.
    resonant : array
        roots with |Im| below threshold.
    threshold : float
    residuals : array
        |denominator(root)| for each root.
    """
    case: str
    coefficients: np.ndarray
    roots: np.ndarray
    resonant: np.ndarray
    threshold: float
    residuals: np.ndarray

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def to_dict(self):
        return {'case': self.case,
                'coefficients': [[float(c.real), float(c.imag)] for c in self.coefficients],
                'roots': [[float(r.real), float(r.imag)] for r in self.roots],
                'resonant': [[float(r.real), float(r.imag)] for r in self.resonant],
                'threshold': float(self.threshold),
                'max_residual': float(np.max(self.residuals))}


def _linear(constant):
    """constant - i delta"""
    return Polynomial([constant, -1j])


def denominator_polynomial(case, p):
    """
    Reduced denominator as a polynomial in delta.

    eq13: chi_c
    eq14: Ga^2 chi_b + chi_c (chi_a chi_b + Omega^2)
    eq16: chi_b chi_d Ga^2 + (chi_a chi_b + Omega^2)(chi_c chi_d - 2 i G1^2 omega_m)
    """
    chi_a = _linear(p.gamma_1 + 1j * p.Delta_a)
    chi_b = _linear(p.gamma_2 + 1j * p.Delta_b)
    chi_c = _linear(p.kappa + 1j * p.Delta_o)
    chi_d = Polynomial([p.omega_m * p.omega_m_eff, -1j * p.gamma_m, -1])
    if case == 'eq13':
        _require_zero(p, ['G1', 'G2', 'Ga', 'eps_m'], case)
        return chi_c
    if case == 'eq14':
        _require_zero(p, ['G1', 'G2', 'eps_m'], case)
        return p.Ga ** 2 * chi_b + chi_c * (chi_a * chi_b + p.Omega ** 2)
    if case == 'eq16':
        _require_zero(p, ['G2', 'eps_m'], case)
        return chi_b * chi_d * p.Ga ** 2 + (chi_a * chi_b + p.Omega ** 2) * (chi_c * chi_d - 2j * p.G1 ** 2 * p.omega_m)
    raise ParameterError('case must be one of ' + ', '.join(CASES) + ', got ' + str(case))


def denominator_roots(case, p, ss=None):
    """
    All roots of a reduced denominator.

    Parameters
    ----------
    case : str
        'eq13', 'eq14' or 'eq16'.
    p : SystemParams
    ss : SteadyState, optional
        unused; the reduced denominators do not depend on the operating point.

    Returns
    -------
    RootReport

    Notes
    -----
    Roots are the eigenvalues of the companion matrix. A root is resonant when
    |Im(root)| <= 5 max(kappa, gamma_1, gamma_m).
    The leading coefficient of these denominators is a unit power of -i, so the ill-conditioning warning
    only fires for hand-built parameter sets.
    """
    poly = denominator_polynomial(case, p)
    coef = np.asarray(poly.coef, dtype=complex)
    scale = np.max(np.abs(coef))
    if abs(coef[-1]) < LEADING_COEFFICIENT_TOL * scale:
        msg = 'Leading coefficient of the ' + case + ' denominator is ' + str(abs(coef[-1])) + ', roots are ill-conditioned'
        logger.warning(msg)
        warnings.warn(msg)
    roots = scipy.linalg.eigvals(polycompanion(coef))
    roots = roots[np.lexsort((roots.imag, roots.real))]
    residuals = np.abs(poly(roots))
    if np.any(residuals > ROOT_RESIDUAL_TOL * scale):
        logger.warning('Root residual ' + str(np.max(residuals)) + ' above tolerance for ' + case)
    threshold = RESONANCE_WIDTH_FACTOR * max(p.kappa, p.gamma_1, p.gamma_m)
    resonant = roots[np.abs(roots.imag) <= threshold]
    return RootReport(case=case, coefficients=coef, roots=roots, resonant=resonant,
                      threshold=threshold, residuals=residuals)


def feature_root_coherence(case, p, ss, profile, min_prominence=None):
    """
    Number of detected peaks and of resonant roots for the same scenario.

    Returns
    -------
    n_peaks, n_resonant : int
    """
    report = denominator_roots(case, p, ss)
    n_peaks = len(peaks(detect_features(profile, min_prominence=min_prominence)))
    return n_peaks, len(report.resonant)
