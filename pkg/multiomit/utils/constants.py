"""
Numerical tolerances and conventions used throughout the package.
"""

import numpy as np

__all__ = ['POLE_TOL', 'DEGENERACY_TOL', 'CONDITION_LIMIT', 'RESIDUAL_TOL', 'NORMALIZATION',
           'SIDEBAND_LABELS', 'SCHEMA_VERSION', 'DEFAULT_GRID', 'TWO_PI']

# Relative size below which a denominator counts as zero.
POLE_TOL = 1e-14
# Absolute size of the steady-state cavity denominator below which the operating point is degenerate.
DEGENERACY_TOL = 1e-14
# Condition number at which a sideband system is treated as singular.
CONDITION_LIMIT = 1e12
RESIDUAL_TOL = 1e-10

# Output normalisation as conventionally quoted, sqrt(kappa) in t_p, sqrt(2 kappa) in eps_out.
NORMALIZATION = {'transmission': 'sqrt(kappa)',
                 'eps_out': 'sqrt(2*kappa)'}

SIDEBAND_LABELS = ('q', 'p', 'c', 'A', 'C', 'Q', 'P', 'X')

SCHEMA_VERSION = '1'

# (min, max, count)
DEFAULT_GRID = (0.0, 4.0, 801)

TWO_PI = 2 * np.pi
