"""
Writers for plot-ready CSV profiles and JSON reports.
"""

import json
import sys
import numpy as np
import pandas as pd
from ..utils.errors import ParameterError
from ..utils.constants import SCHEMA_VERSION

# 17 significant digits reproduce every double exactly.
FLOAT_FORMAT = '%.17g'


def emit_profile_csv(profile, path):
    """
    Writes one row per grid point.

    Parameters
    ----------
    profile : Profile
    path : str or file-like

    Notes
    -----
    Columns are delta, re_eps_out, im_eps_out, re_tp, im_tp, abs_tp2, pole.
    Pole points have pole = True and empty values.

    Raises
    ------
    ParameterError
        for an empty profile.
    """
    if len(profile.deltas) == 0 or len(profile.responses) == 0:
        raise ParameterError('Refusing to write an empty profile')
    df = profile.to_frame()
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep='')


def read_profile_csv(path):
    """Reads a CSV written by emit_profile_csv without losing precision."""
    return pd.read_csv(path, float_precision='round_trip')


def _jsonable(obj):
    if isinstance(obj, complex) or isinstance(obj, np.complexfloating):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return float(obj) if np.isfinite(obj) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


def emit_json(report, path=None):
    """
    Writes a report with sorted keys. A schema_version is added when missing.

    path None writes to stdout.
    """
    report = _jsonable(dict(report))
    report.setdefault('schema_version', SCHEMA_VERSION)
    text = json.dumps(report, sort_keys=True, indent=2) + '\n'
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w') as fs:
            fs.write(text)
    return report


def error_record(status, err):
    return {'schema_version': SCHEMA_VERSION,
            'status': int(status),
            'error': type(err).__name__,
            'message': str(err)}
