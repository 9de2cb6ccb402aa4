"""
Output quadrature and transmission of the probe.
"""

import dataclasses
import numpy as np
from .closedform import delta_c_plus_closed_form
from ..utils.errors import ParameterError

METHODS = ('closed_form', 'linear_solve')


@dataclasses.dataclass(frozen=True)
class ProbeResponse:
    """
    delta : float
    delta_c_plus : complex
    eps_out : complex
        sqrt(2 kappa) delta_c_plus / eps_p
    t_p : complex
        (eps_p - sqrt(kappa) delta_c_plus) / eps_p
    nu_p, rho_p : float
        absorptive Re(eps_out) and dispersive Im(eps_out) parts.
    """
    delta: float
    delta_c_plus: complex
    eps_out: complex
    t_p: complex
    nu_p: float
    rho_p: float

    @property
    def abs_tp2(self):
        return abs(self.t_p) ** 2


def response_from_delta_c(p, delta, delta_c_plus):
    """Assembles a ProbeResponse from an intracavity sideband amplitude."""
    eps_out = np.sqrt(2 * p.kappa) * delta_c_plus / p.eps_p
    t_p = (p.eps_p - np.sqrt(p.kappa) * delta_c_plus) / p.eps_p
    return ProbeResponse(delta=float(delta), delta_c_plus=complex(delta_c_plus), eps_out=complex(eps_out),
                         t_p=complex(t_p), nu_p=float(eps_out.real), rho_p=float(eps_out.imag))


def normalize_method(method):
    aliases = {'closed': 'closed_form', 'closed_form': 'closed_form',
               'solve': 'linear_solve', 'linear_solve': 'linear_solve'}
    if method not in aliases:
        raise ParameterError('method must be \'closed_form\' or \'linear_solve\', got ' + str(method))
    return aliases[method]


def probe_response(p, ss, delta, method='closed_form', convention='exact'):
    """
    Probe response at one detuning.

    Parameters
    ----------
    p : SystemParams
    ss : SteadyState
    delta : float
    method : str
        'closed_form' (or 'closed') or 'linear_solve' (or 'solve'). The latter solves the
        plus-sideband system directly.
    convention : str
        closed-form convention, see delta_c_plus_closed_form.

    Returns
    -------
    ProbeResponse

    Raises
    ------
    PoleError
        propagated from the evaluator.
    """
    method = normalize_method(method)
    if method == 'closed_form':
        dcp = delta_c_plus_closed_form(p, ss, delta, convention=convention)
    else:
        # import here, oracle depends on response
        from ..oracle import assemble_plus, solve_sidebands
        dcp = solve_sidebands(assemble_plus(p, ss, delta)).values['c+']
    return response_from_delta_c(p, delta, dcp)


def probe_response_minus(p, ss, delta):
    """
    Output quadrature built from the minus sideband amplitude delta_c_minus.

    Zero whenever eps_m = 0 since the minus system is then homogeneous.
    """
    from ..oracle import assemble_minus, solve_sidebands
    dcm = solve_sidebands(assemble_minus(p, ss, delta)).values['c-']
    return response_from_delta_c(p, delta, dcm)
