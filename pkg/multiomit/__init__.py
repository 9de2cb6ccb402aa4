# #!/usr/bin/env python3
#
"""multiomit computes the probe response of a hybrid atom-optomechanical cavity."""
#
__version__ = "0.1.0"
#
from . import utils
from . import model
from . import response
from . import oracle
from . import analysis
from . import cli
from .model import SystemParams, SteadyState, steady_state, scenario, list_scenarios
from .response import ProbeResponse, probe_response
from .analysis import Profile, sweep, detect_features
