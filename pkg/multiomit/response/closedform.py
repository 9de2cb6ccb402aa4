"""
First-sideband intracavity amplitude in closed form.
"""

from .susceptibility import susceptibilities
from ..utils.errors import PoleError, ParameterError
from ..utils.constants import POLE_TOL

CONVENTIONS = ('exact', 'legacy')


def _check_convention(convention):
    if convention not in CONVENTIONS:
        raise ParameterError('convention must be \'exact\' or \'legacy\', got ' + str(convention))


def closed_form_terms(p, ss, delta, convention='exact', chi=None):
    """
    Numerator and the summands of the denominator of the closed form.

    Returns
    -------
    numerator : complex
    terms : dict
        'cavity', 'linear', 'quadratic' and 'atomic' contributions to the denominator.
    chi : Susceptibilities
    """
    _check_convention(convention)
    if chi is None:
        chi = susceptibilities(p, ss, delta)
    wm = p.omega_m
    numerator = complex(p.eps_p)
    terms = {'cavity': chi.chi_c, 'linear': 0j, 'quadratic': 0j, 'atomic': 0j}
    if convention == 'legacy':
        if p.G1 != 0:
            terms['linear'] = -1j * p.G1 * wm * (chi.G - chi.eps_m) / chi.chi_d
        if p.G2 != 0:
            terms['quadratic'] = 1j * chi.alpha * p.G2 * chi.S * wm
            if chi.eps_m != 0:
                numerator += 1j * chi.beta * p.G2 * chi.S
    else:
        if p.G1 != 0:
            terms['linear'] = -1j * p.G1 * wm * chi.G / chi.chi_d
            numerator += -1j * p.G1 * wm * chi.eps_m / chi.chi_d
        if p.G2 != 0:
            terms['quadratic'] = 1j * chi.alpha_exact * p.G2 * chi.S * wm
            if chi.eps_m != 0:
                numerator += 1j * chi.beta_exact * p.G2 * chi.S
    if p.Ga != 0:
        terms['atomic'] = (p.Ga ** 2 * chi.chi_b, chi.chi_a * chi.chi_b + p.Omega ** 2)
    return numerator, terms, chi


def delta_c_plus_closed_form(p, ss, delta, convention='exact'):
    """
    Closed-form first-sideband amplitude of the cavity field.

    Parameters
    ----------
    p : SystemParams
    ss : SteadyState
    delta : float
        probe-pump detuning.
    convention : str
        'exact' (default): coefficients obtained by eliminating the plus-sideband system
        exactly, the phonon drive enters the numerator.
        'legacy': the printed expression verbatim, with the phonon drive inside the
        linear-coupling term of the denominator.

    Returns
    -------
    delta_c_plus : complex

    Raises
    ------
    PoleError
        when the denominator is zero to 1e-14 relative to its largest summand.

    Notes
    -----
    delta_c_plus = (eps_p + i beta G2 S) / (chi_c - i G1 omega_m (G - eps_m)/chi_d + i alpha G2 S omega_m + Ga^2 chi_b / (chi_a chi_b + Omega^2))

    The atomic fraction is multiplied through so that a zero of chi_a chi_b + Omega^2 gives a
    zero of the response rather than a division by zero.
    """
    numerator, terms, _ = closed_form_terms(p, ss, delta, convention=convention)
    main = terms['cavity'] + terms['linear'] + terms['quadratic']
    scale = max(abs(terms['cavity']), abs(terms['linear']), abs(terms['quadratic']))
    if terms['atomic'] == 0j:
        den = main
    else:
        atom_num, atom_den = terms['atomic']
        den = main * atom_den + atom_num
        numerator = numerator * atom_den
        scale = max(scale * abs(atom_den), abs(atom_num))
    if abs(den) <= POLE_TOL * scale or den != den:
        raise PoleError('Closed-form denominator vanishes at delta = ' + str(delta),
                        delta=delta, magnitude=abs(den))
    return complex(numerator / den)
