"""
Ground-truth evaluators: dense solve of the sideband systems and time-domain integration
"""

from .sideband import (SidebandSystem, SidebandSolution, drift_matrix, drive_vectors, assemble_plus,
                       assemble_minus, solve_sidebands, check_stability, settling_horizon)
from .timedomain import time_domain_delta_c
