"""
Detuning grids.
"""

import numpy as np
from .errors import ParameterError, ConfigError
from .constants import DEFAULT_GRID

__all__ = ['make_grid', 'parse_grid']


def make_grid(grid=None):
    """
    Builds a strictly increasing detuning grid.

    Parameters
    ----------
    grid : tuple, dict, str or array, optional
        (min, max, count), {'min', 'max', 'count'}, 'min:max:count' or an explicit array of detunings.
        Default is 801 points on [0, 4].

    Returns
    -------
    deltas : array
    """
    if grid is None:
        grid = DEFAULT_GRID
    if isinstance(grid, str):
        grid = parse_grid(grid)
    if isinstance(grid, dict):
        grid = (grid['min'], grid['max'], grid['count'])
    if isinstance(grid, tuple) and len(grid) == 3:
        dmin, dmax, count = grid
        if int(count) != count or count < 2:
            raise ParameterError('grid count must be an integer >= 2')
        if not dmax > dmin:
            raise ParameterError('grid max must be larger than grid min')
        return np.linspace(float(dmin), float(dmax), int(count))
    deltas = np.asarray(grid, dtype=float)
    if deltas.ndim != 1 or len(deltas) < 2:
        raise ParameterError('grid must contain at least 2 detunings')
    if np.any(np.diff(deltas) <= 0):
        raise ParameterError('grid must be strictly increasing')
    return deltas


def parse_grid(text):
    """Parses 'min:max:count'."""
    parts = str(text).split(':')
    if len(parts) != 3:
        raise ConfigError('grid must be given as min:max:count, got ' + str(text))
    try:
        return (float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError:
        raise ConfigError('grid must be given as min:max:count, got ' + str(text))
