"""
Reduced output quadratures for special coupling configurations.

Each function returns eps_out exactly as printed for that case. The bare-cavity and the
linear-plus-atomic expressions carry a factor eps_p in the numerator that the other two do not;
they coincide with the full closed form when eps_p = 1.
"""

import numpy as np
from .susceptibility import susceptibilities
from ..utils.errors import PreconditionError, PoleError
from ..utils.constants import POLE_TOL


def _require_zero(p, names, case):
    for name in names:
        if getattr(p, name) != 0:
            raise PreconditionError(case + ' requires ' + name + ' = 0, got ' + str(getattr(p, name)))


def _divide(num, den, scale, delta):
    if abs(den) <= POLE_TOL * scale:
        raise PoleError('Reduced denominator vanishes at delta = ' + str(delta), delta=delta, magnitude=abs(den))
    return complex(num / den)


def _ladder(p, delta):
    """chi_a, chi_b, chi_c, chi_d without needing a steady state."""
    d = float(delta)
    chi_a = p.gamma_1 - 1j * d + 1j * p.Delta_a
    chi_b = p.gamma_2 - 1j * d + 1j * p.Delta_b
    chi_c = -1j * d + 1j * p.Delta_o + p.kappa
    chi_d = -1j * p.gamma_m * d - d ** 2 + p.omega_m * p.omega_m_eff
    return chi_a, chi_b, chi_c, chi_d


def reduced_bare(p, delta):
    """
    Bare cavity (G1 = G2 = Ga = eps_m = 0).

    eps_out = sqrt(2 kappa) eps_p / (-i delta + i Delta_o + kappa)
    """
    _require_zero(p, ['G1', 'G2', 'Ga', 'eps_m'], 'reduced_bare')
    _, _, chi_c, _ = _ladder(p, delta)
    return _divide(np.sqrt(2 * p.kappa) * p.eps_p, chi_c, abs(chi_c) + p.kappa, delta)


def reduced_atoms(p, delta):
    """
    Atoms only (G1 = G2 = eps_m = 0).

    eps_out = sqrt(2 kappa) (chi_a chi_b + Omega^2) / (Ga^2 chi_b + chi_c (chi_a chi_b + Omega^2))
    """
    _require_zero(p, ['G1', 'G2', 'eps_m'], 'reduced_atoms')
    chi_a, chi_b, chi_c, _ = _ladder(p, delta)
    n = chi_a * chi_b + p.Omega ** 2
    first = p.Ga ** 2 * chi_b
    second = chi_c * n
    return _divide(np.sqrt(2 * p.kappa) * n, first + second, max(abs(first), abs(second)), delta)


def reduced_linear(p, ss, delta):
    """
    Linear coupling only (G2 = Ga = 0); eps_m is allowed.

    eps_out = sqrt(2 kappa) chi_d / (i eps_m G1 omega_m - i G G1 omega_m + chi_c chi_d)
    """
    _require_zero(p, ['G2', 'Ga'], 'reduced_linear')
    chi = susceptibilities(p, ss, delta)
    first = 1j * chi.eps_m * p.G1 * p.omega_m
    second = -1j * chi.G * p.G1 * p.omega_m
    third = chi.chi_c * chi.chi_d
    scale = max(abs(first), abs(second), abs(third))
    return _divide(np.sqrt(2 * p.kappa) * chi.chi_d, first + second + third, scale, delta)


def reduced_linear_atoms(p, ss, delta):
    """
    Linear coupling with atoms (G2 = eps_m = 0).

    eps_out = sqrt(2 kappa) eps_p chi_d (chi_a chi_b + Omega^2) / (chi_b chi_d Ga^2 + (chi_a chi_b + Omega^2)(chi_c chi_d - 2 i G1^2 omega_m))
    """
    _require_zero(p, ['G2', 'eps_m'], 'reduced_linear_atoms')
    chi_a, chi_b, chi_c, chi_d = _ladder(p, delta)
    n = chi_a * chi_b + p.Omega ** 2
    first = chi_b * chi_d * p.Ga ** 2
    second = n * (chi_c * chi_d - 2j * p.G1 ** 2 * p.omega_m)
    num = np.sqrt(2 * p.kappa) * p.eps_p * chi_d * n
    return _divide(num, first + second, max(abs(first), abs(second)), delta)
