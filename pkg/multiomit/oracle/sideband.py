"""
Direct dense solve of the first-sideband equations.

Variables are ordered (q, p, c, A, C, Q, P, X). Writing the linearised drift as dx/dt = M x + f(t),
the plus system is (-i delta I - M) x_+ = b_+ and the minus system (+i delta I - M) x_- = b_-.
"""

import dataclasses
import numpy as np
import scipy.linalg
from ..response.susceptibility import effective_couplings
from ..utils.errors import SingularSystemError, UnstableDriftError
from ..utils.constants import CONDITION_LIMIT, RESIDUAL_TOL, SIDEBAND_LABELS
from ..utils.logger import get_logger

logger = get_logger(__name__)

IQ, IP, IC, IA, ICC, IQQ, IPP, IX = range(8)


@dataclasses.dataclass(frozen=True, eq=False)
class SidebandSystem:
    """
    matrix : array
        8 x 8 complex coefficients, rows in equation order.
    rhs : array
        8 complex inhomogeneous terms.
    labels : tuple
        variable names with sideband sign, e.g. ('q+', 'p+', ...).
    delta : float
    sign : str
        '+' or '-'
    """
    matrix: np.ndarray
    rhs: np.ndarray
    labels: tuple
    delta: float
    sign: str


@dataclasses.dataclass(frozen=True, eq=False)
class SidebandSolution:
    """
    values : dict
        amplitude per system label, e.g. 'c+' or 'c-', in variable order.
    residual_norm : float
    delta : float
    sign : str
    """
    values: dict
    residual_norm: float
    delta: float
    sign: str

    def as_array(self):
        return np.array(list(self.values.values()))


def drift_matrix(p, ss):
    """
    Homogeneous drift matrix M of the linearised fluctuations.

    Returns
    -------
    M : array
        8 x 8 complex, variable order (q, p, c, A, C, Q, P, X).
    """
    G, G_sm, G_t = effective_couplings(p, ss)
    wm, weff, gm = p.omega_m, ss.omega_m_eff, p.gamma_m
    M = np.zeros([8, 8], dtype=complex)
    M[IQ, IP] = wm
    M[IP, IQ] = -weff
    M[IP, IP] = -gm
    M[IP, IC] = -G
    M[IC, IQ] = -1j * p.G1
    M[IC, IC] = -(p.kappa + 1j * p.Delta_o)
    M[IC, IA] = -1j * p.Ga
    M[IC, IQQ] = -1j * p.G2
    M[IA, IC] = -1j * p.Ga
    M[IA, IA] = -(p.gamma_1 + 1j * p.Delta_a)
    M[IA, ICC] = -1j * p.Omega
    M[ICC, IA] = -1j * p.Omega
    M[ICC, ICC] = -(p.gamma_2 + 1j * p.Delta_b)
    M[IQQ, IX] = wm
    M[IPP, IP] = -G_sm
    M[IPP, IPP] = -2 * gm
    M[IPP, IX] = -weff
    M[IX, IQ] = -G_sm
    M[IX, IC] = -G_t
    M[IX, IQQ] = -2 * weff
    M[IX, IPP] = 2 * wm
    M[IX, IX] = -gm
    return M


def drive_vectors(p):
    """
    Inhomogeneous terms of the plus and minus systems.

    b_plus carries eps_m exp(i Phi_m) in the momentum row and eps_p in the cavity row,
    b_minus only the phonon pump.
    """
    eps_m = p.eps_m_complex
    b_plus = np.zeros(8, dtype=complex)
    b_plus[IP] = eps_m
    b_plus[IC] = p.eps_p
    b_minus = np.zeros(8, dtype=complex)
    b_minus[IP] = eps_m
    return b_plus, b_minus


def assemble_plus(p, ss, delta):
    """
    Plus-sideband system at probe detuning delta.

    Rows, in order:
    -i delta q = omega_m p;
    (-i delta + gamma_m) p = -omega_m_eff q - G c + eps_m;
    chi_c c = -i (G1 q + G2 Q) - i Ga A + eps_p;
    chi_a A = -i Ga c - i Omega C;
    chi_b C = -i Omega A;
    -i delta Q = omega_m X;
    (-i delta + 2 gamma_m) P = -omega_m_eff X - G_sm p;
    (-i delta + gamma_m) X = 2 omega_m P - 2 omega_m_eff Q - G_t c - G_sm q.

    Returns
    -------
    SidebandSystem
    """
    M = drift_matrix(p, ss)
    b_plus, _ = drive_vectors(p)
    matrix = -1j * float(delta) * np.eye(8) - M
    return SidebandSystem(matrix=matrix, rhs=b_plus, labels=tuple(k + '+' for k in SIDEBAND_LABELS),
                          delta=float(delta), sign='+')


def assemble_minus(p, ss, delta):
    """
    Minus-sideband system: the plus system with +i delta and the chi_o variants on the diagonal.
    Only the phonon pump drives it.
    """
    M = drift_matrix(p, ss)
    _, b_minus = drive_vectors(p)
    matrix = 1j * float(delta) * np.eye(8) - M
    return SidebandSystem(matrix=matrix, rhs=b_minus, labels=tuple(k + '-' for k in SIDEBAND_LABELS),
                          delta=float(delta), sign='-')


def solve_sidebands(system):
    """
    Solves a sideband system.

    Parameters
    ----------
    system : SidebandSystem

    Returns
    -------
    SidebandSolution

    Raises
    ------
    SingularSystemError
        when the condition number reaches 1e12 or the residual exceeds 1e-10 of the drive norm.
        Carries the offending delta.
    """
    cond = np.linalg.cond(system.matrix)
    if not np.isfinite(cond) or cond >= CONDITION_LIMIT:
        raise SingularSystemError('Sideband system is singular at delta = ' + str(system.delta) +
                                  ' (condition number ' + str(cond) + ')', delta=system.delta, condition=cond)
    logger.debug('Sideband ' + system.sign + ' system at delta = ' + str(system.delta) + ', condition ' + str(cond))
    lu = scipy.linalg.lu_factor(system.matrix)
    x = scipy.linalg.lu_solve(lu, system.rhs)
    # One step of iterative refinement.
    x = x + scipy.linalg.lu_solve(lu, system.rhs - system.matrix @ x)
    residual = float(np.linalg.norm(system.matrix @ x - system.rhs))
    if residual > RESIDUAL_TOL * np.linalg.norm(system.rhs):
        raise SingularSystemError('Sideband residual ' + str(residual) + ' above tolerance at delta = '
                                  + str(system.delta), delta=system.delta, condition=cond)
    values = {k: complex(v) for k, v in zip(system.labels, x)}
    return SidebandSolution(values=values, residual_norm=residual, delta=system.delta, sign=system.sign)


def check_stability(p, ss):
    """
    Eigenvalues of the drift matrix.

    Raises
    ------
    UnstableDriftError
        when any eigenvalue has a non-negative real part, undamped modes included.
    """
    eig = scipy.linalg.eigvals(drift_matrix(p, ss))
    growth = np.max(eig.real)
    if growth >= 0:
        raise UnstableDriftError('Drift matrix has a non-decaying mode (max Re = ' + str(growth) + ')',
                                 eigenvalues=eig)
    return eig


def settling_horizon(p, ss, decades=30):
    """
    Integration time after which the slowest damped mode has decayed by exp(-decades).
    """
    eig = check_stability(p, ss)
    rates = -eig.real[eig.real < 0]
    return float(decades / np.min(rates))
