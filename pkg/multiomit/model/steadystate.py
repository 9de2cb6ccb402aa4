"""
Mean-field operating point.

The global field phase is rotated so that the cavity amplitude entering q_s, Q_s and the
effective couplings is real and non-negative. The un-rotated amplitude is kept as c_s.
"""

import dataclasses
import warnings
import numpy as np
from .params import validate_params
from ..utils.errors import DegenerateSteadyStateError
from ..utils.constants import DEGENERACY_TOL
from ..utils.logger import get_logger

logger = get_logger(__name__)


@dataclasses.dataclass(frozen=True)
class SteadyState:
    """
    Mean-field operating point.

    c_s : complex
        cavity amplitude (before gauge rotation).
    c_s_gauge : float
        |c_s|, the amplitude after rotating the global phase.
    phase : float
        arg(c_s), the rotation applied.
    q_s : float
        mirror displacement, -G1 |c_s| / omega_m_eff.
    Q_s : complex
        second moment <q^2>. Complex only when the phonon pump phase is not 0 or pi.
    P_s : float
        second moment <p^2> = 1 + 2 n_th.
    X_s : float
        symmetrised cross moment, identically 0.
    A_s, C_s : complex
        atomic coherences (same frame as c_s).
    omega_m_eff : float
    """
    c_s: complex
    c_s_gauge: float
    phase: float
    q_s: float
    Q_s: complex
    P_s: float
    X_s: float
    A_s: complex
    C_s: complex
    omega_m_eff: float


def _atomic_pair(p):
    """2x2 matrix of the stationary atomic equations."""
    return np.array([[1j * p.Delta_a + p.gamma_1, 1j * p.Omega],
                     [1j * p.Omega, 1j * p.Delta_b + p.gamma_2]], dtype=complex)


def cavity_denominator(p):
    """kappa + i Delta_o + Ga^2 / (i Delta_a + gamma_1 + Omega^2 / (i Delta_b + gamma_2))"""
    den = p.kappa + 1j * p.Delta_o
    if p.Ga != 0:
        xa = 1j * p.Delta_a + p.gamma_1
        xb = 1j * p.Delta_b + p.gamma_2
        inner = xa * xb + p.Omega ** 2
        if abs(inner) < DEGENERACY_TOL:
            raise DegenerateSteadyStateError(
                'Atomic bracket of the steady state is degenerate (|(i Delta_a + gamma_1)(i Delta_b + gamma_2) + Omega^2| < 1e-14)')
        den += p.Ga ** 2 * xb / inner
    return den


def steady_state(p, g2=None):
    """
    Computes the mean-field steady state.

    Parameters
    ----------
    p : SystemParams
        validated scenario.
    g2 : float, optional
        bare quadratic coupling. Only used to check that omega_m + 2 g2 |c_s|^2 agrees with
        p.omega_m_eff; a warning is emitted when it does not.

    Returns
    -------
    ss : SteadyState

    Raises
    ------
    DegenerateSteadyStateError
        when the cavity denominator has magnitude below 1e-14.
    """
    validate_params(p)
    den = cavity_denominator(p)
    if abs(den) < DEGENERACY_TOL:
        raise DegenerateSteadyStateError('Steady-state denominator vanishes (|den| = ' + str(abs(den)) + ')')
    c_s = p.eps_l / den
    c_hat = float(abs(c_s))
    phase = float(np.angle(c_s)) if c_hat > 0 else 0.0

    if p.Ga == 0 or c_s == 0:
        A_s, C_s = 0j, 0j
    else:
        rhs = np.array([-1j * p.Ga * c_s, 0], dtype=complex)
        A_s, C_s = np.linalg.solve(_atomic_pair(p), rhs)
        A_s, C_s = complex(A_s), complex(C_s)

    q_s = -p.G1 * c_hat / p.omega_m_eff
    P_s = 1 + 2 * p.n_th
    Q_s = p.omega_m * P_s / p.omega_m_eff + \
        (p.G1 ** 2 * c_hat ** 2 - p.G1 * c_hat * p.eps_m_complex) / p.omega_m_eff ** 2
    Q_s = complex(Q_s)

    if g2 is not None:
        implied = p.omega_m + 2 * g2 * c_hat ** 2
        if abs(implied - p.omega_m_eff) > 1e-6 * p.omega_m:
            msg = ('omega_m_eff = ' + str(p.omega_m_eff) + ' is inconsistent with omega_m + 2 g2 |c_s|^2 = '
                   + str(implied) + '; the supplied omega_m_eff is used')
            logger.warning(msg)
            warnings.warn(msg, UserWarning)

    return SteadyState(c_s=complex(c_s), c_s_gauge=c_hat, phase=phase, q_s=float(q_s), Q_s=Q_s,
                       P_s=float(P_s), X_s=0.0, A_s=A_s, C_s=C_s, omega_m_eff=float(p.omega_m_eff))


def steady_state_residuals(p, ss):
    """
    Residuals of every stationary relation after substituting ss back.

    Returns
    -------
    residuals : dict
        keys q, p, c, A, C, Q, P, X. The c, A and C entries are the right-hand sides of the
        stationary drift equations (noise means zero, pump at its stationary value).
    """
    c_hat = ss.c_s_gauge
    res = {}
    # dq/dt = omega_m p_s with p_s = 0
    res['p'] = 0.0
    res['q'] = abs(p.omega_m_eff * ss.q_s + p.G1 * c_hat)
    res['c'] = abs(-(p.kappa + 1j * p.Delta_o) * ss.c_s - 1j * p.Ga * ss.A_s + p.eps_l)
    res['A'] = abs((1j * p.Delta_a + p.gamma_1) * ss.A_s + 1j * p.Ga * ss.c_s + 1j * p.Omega * ss.C_s)
    res['C'] = abs((1j * p.Delta_b + p.gamma_2) * ss.C_s + 1j * p.Omega * ss.A_s)
    res['Q'] = abs(ss.Q_s - p.omega_m * ss.P_s / p.omega_m_eff -
                   (p.G1 ** 2 * c_hat ** 2 - p.G1 * c_hat * p.eps_m_complex) / p.omega_m_eff ** 2)
    res['P'] = abs(ss.P_s - (1 + 2 * p.n_th))
    res['X'] = abs(ss.X_s)
    return res
