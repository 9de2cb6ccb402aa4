"""
Scenario parameters of the hybrid atom-optomechanical cavity.
"""

import dataclasses
import numpy as np
from ..utils.errors import ParameterError
from ..utils.constants import TWO_PI


@dataclasses.dataclass(frozen=True)
class SystemParams:
    """
    All rates, detunings, couplings and drive amplitudes of one scenario.

    Every quantity is dimensionless in units of the mechanical frequency.

    Parameters
    ----------
    omega_m : float
        mechanical frequency (normally 1).
    omega_m_eff : float
        effective mechanical frequency.
    kappa : float
        cavity decay rate.
    gamma_m : float
        mechanical damping.
    gamma_1, gamma_2 : float
        atomic decay of the |a>-|b> and |a>-|c> transitions.
    Omega : float
        control-field Rabi frequency.
    Delta_o : float
        effective cavity detuning.
    Delta_a, Delta_b : float
        atomic detunings.
    G1, G2 : float
        effective linear and quadratic optomechanical couplings.
    Ga : float
        collective atom-field coupling.
    eps_l, eps_p : float
        pump and probe amplitudes.
    eps_m : float
        phonon-pump magnitude.
    Phi_m : float
        phonon-pump phase in radians, [0, 2pi).
    n_th : float
        thermal phonon occupation.
    """
    omega_m: float = 1.0
    omega_m_eff: float = 1.0
    kappa: float = 0.1
    gamma_m: float = 0.001
    gamma_1: float = 0.0
    gamma_2: float = 0.0
    Omega: float = 0.0
    Delta_o: float = 1.0
    Delta_a: float = 0.0
    Delta_b: float = 0.0
    G1: float = 0.0
    G2: float = 0.0
    Ga: float = 0.0
    eps_l: float = 0.0
    eps_p: float = 1.0
    eps_m: float = 0.0
    Phi_m: float = 0.0
    n_th: float = 0.0

    @property
    def eps_m_complex(self):
        """Complex phonon pump eps_m * exp(i Phi_m)."""
        if self.eps_m == 0:
            return 0j
        return self.eps_m * np.exp(1j * self.Phi_m)

    def replace(self, **changes):
        """Validated copy with some fields changed."""
        return validate_params(dataclasses.replace(self, **changes))

    def to_dict(self):
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, values):
        """
        Builds parameters from a mapping. Unknown keys are rejected.
        """
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(values) - names)
        if unknown:
            raise ParameterError('Unknown parameter(s): ' + ', '.join(unknown))
        try:
            converted = {k: float(v) for k, v in values.items()}
        except (TypeError, ValueError):
            raise ParameterError('All parameters must be real numbers')
        return cls(**converted)


def validate_params(p):
    """
    Checks every SystemParams invariant.

    Parameters
    ----------
    p : SystemParams

    Returns
    -------
    p : SystemParams
        The same object, unchanged.

    Raises
    ------
    ParameterError
        naming the first violated invariant.
    """
    if not isinstance(p, SystemParams):
        raise ParameterError('Expected SystemParams, got ' + type(p).__name__)
    for field in dataclasses.fields(p):
        value = getattr(p, field.name)
        if not np.isfinite(value):
            raise ParameterError(field.name + ' must be finite')
    for name in ['kappa', 'gamma_m', 'omega_m', 'omega_m_eff', 'eps_p']:
        if not getattr(p, name) > 0:
            raise ParameterError(name + ' must be positive')
    for name in ['gamma_1', 'gamma_2', 'n_th', 'G1', 'G2', 'Ga', 'eps_l', 'eps_m']:
        if getattr(p, name) < 0:
            raise ParameterError(name + ' must be non-negative')
    if not 0 <= p.Phi_m < TWO_PI:
        raise ParameterError('Phi_m must lie in [0, 2*pi)')
    return p
