"""
Time-domain integration of the linearised drift equations.

Independent of any closed form: the fluctuations start at zero, are driven by the probe and the
phonon pump, and the cavity amplitude is projected onto exp(-i delta t) once transients have died out.
"""

import numpy as np
from scipy.integrate import trapezoid
from .sideband import drift_matrix, drive_vectors, check_stability
from ..utils.errors import ParameterError, ConvergenceError
from ..utils.constants import TWO_PI
from ..utils.logger import get_logger

logger = get_logger(__name__)

IC = 2
# Fraction of the horizon kept for projection.
ANALYSIS_FRACTION = 0.2
CONVERGENCE_TOL = 1e-3
# Mechanical periods per projection window at zero detuning.
ZERO_DETUNING_WINDOW = 5


def max_time_step(p, M, delta):
    """Largest admissible step: 50 steps per period of the fastest rate in the problem."""
    fastest = max(abs(delta), p.omega_m, abs(p.Delta_o), np.max(np.abs(np.linalg.eigvals(M))))
    return TWO_PI / (50 * fastest)


def _rk4(M, b_plus, b_minus, delta, dt, n_steps, keep_from):
    """Classic fourth-order Runge-Kutta. Returns the cavity amplitude at steps keep_from..n_steps."""
    x = np.zeros(8, dtype=complex)
    out = np.empty(n_steps - keep_from + 1, dtype=complex)

    def rhs(t, y):
        return M @ y + b_plus * np.exp(-1j * delta * t) + b_minus * np.exp(1j * delta * t)

    if keep_from == 0:
        out[0] = x[IC]
    for n in range(n_steps):
        t = n * dt
        k1 = rhs(t, x)
        k2 = rhs(t + dt / 2, x + dt / 2 * k1)
        k3 = rhs(t + dt / 2, x + dt / 2 * k2)
        k4 = rhs(t + dt, x + dt * k3)
        x = x + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if n + 1 >= keep_from:
            out[n + 1 - keep_from] = x[IC]
    return out


def time_domain_delta_c(p, ss, delta, horizon=None, dt=None):
    """
    delta c_+ from direct integration of the drift equations.

    Parameters
    ----------
    p : SystemParams
    ss : SteadyState
    delta : float
        probe detuning.
    horizon : float, optional
        integration time. Default is 60 mechanical periods.
    dt : float, optional
        time step. Must not exceed 2 pi / (50 max(delta, omega_m, Delta_o, |eigenvalues|)).
        It is shortened so that one beat period is an integer number of steps.

    Returns
    -------
    delta_c_plus : complex

    Raises
    ------
    UnstableDriftError
        when the drift matrix has a growing mode.
    ParameterError
        when dt is too large or the horizon leaves fewer than two beat periods for projection.
    ConvergenceError
        when the coefficients of the last two projection windows differ by more than 1e-3 (relative).

    Notes
    -----
    The drive is b_+ exp(-i delta t) + b_- exp(+i delta t), where b_+ holds eps_m in the momentum row
    and eps_p in the cavity row and b_- holds eps_m in the momentum row. At delta = 0 the phonon drive
    is applied once and the
    projection uses two windows of five mechanical periods.
    The first 80% of the horizon is discarded. The remainder is split into two windows of an equal,
    integer number of beat periods and each window is projected with the trapezoidal rule.
    """
    delta = float(delta)
    check_stability(p, ss)
    M = drift_matrix(p, ss)
    b_plus, b_minus = drive_vectors(p)
    if delta == 0:
        b_minus = np.zeros(8, dtype=complex)
    if horizon is None:
        horizon = 60 * TWO_PI / p.omega_m
    dt_max = max_time_step(p, M, delta)
    if dt is None:
        dt = dt_max
    elif dt > dt_max:
        raise ParameterError('dt = ' + str(dt) + ' exceeds the stability limit ' + str(dt_max))
    if delta != 0:
        period = TWO_PI / abs(delta)
    else:
        period = TWO_PI / p.omega_m
    steps_per_period = int(np.ceil(period / dt))
    dt = period / steps_per_period
    n_periods = int(np.floor(ANALYSIS_FRACTION * horizon / period))
    if delta != 0:
        window = n_periods // 2
    else:
        window = ZERO_DETUNING_WINDOW if n_periods >= 2 * ZERO_DETUNING_WINDOW else 0
    if window < 1:
        raise ParameterError('Horizon ' + str(horizon) + ' is too short for two projection windows at delta = '
                             + str(delta))
    n_steps = int(np.ceil(horizon / dt))
    keep_from = n_steps - 2 * window * steps_per_period
    logger.debug('Integrating ' + str(n_steps) + ' steps of ' + str(dt) + ' at delta = ' + str(delta))
    trace = _rk4(M, b_plus, b_minus, delta, dt, n_steps, keep_from)
    t = (keep_from + np.arange(len(trace))) * dt
    weighted = trace * np.exp(1j * delta * t)
    half = window * steps_per_period
    length = window * period
    estimates = [trapezoid(weighted[:half + 1], dx=dt) / length,
                 trapezoid(weighted[half:], dx=dt) / length]
    scale = max(abs(estimates[0]), abs(estimates[1]))
    if scale == 0:
        return 0j
    if abs(estimates[1] - estimates[0]) > CONVERGENCE_TOL * scale:
        raise ConvergenceError('Time-domain projection did not converge at delta = ' + str(delta),
                               estimates=estimates)
    return complex(estimates[1])
