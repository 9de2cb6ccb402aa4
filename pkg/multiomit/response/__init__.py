"""
Closed-form probe response, output quadrature, transmission and reduced cases
"""

from .susceptibility import Susceptibilities, susceptibilities, effective_couplings
from .closedform import delta_c_plus_closed_form, closed_form_terms, CONVENTIONS
from .probe import ProbeResponse, probe_response, probe_response_minus, response_from_delta_c, METHODS
from .reduced import reduced_bare, reduced_atoms, reduced_linear, reduced_linear_atoms
