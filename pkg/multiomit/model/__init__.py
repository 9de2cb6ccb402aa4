"""
Scenario parameters, caption presets and the mean-field steady state
"""

from .params import SystemParams, validate_params
from .steadystate import SteadyState, steady_state, steady_state_residuals, cavity_denominator
from .scenarios import ScenarioPreset, scenario, list_scenarios
