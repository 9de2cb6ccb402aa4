"""
Peaks and transparency dips of the absorptive quadrature.
"""

import dataclasses
import numpy as np
from scipy.signal import find_peaks
from ..utils.errors import ParameterError

# Default prominence as a fraction of the profile's max - min span.
DEFAULT_PROMINENCE_FRACTION = 0.02


@dataclasses.dataclass(frozen=True)
class SpectralFeature:
    """
    kind : str
        'peak' or 'dip'
    location : float
        detuning of the extremum after parabolic refinement.
    value : float
        Re(eps_out) at location.
    prominence : float
    """
    kind: str
    location: float
    value: float
    prominence: float

    def to_dict(self):
        return dataclasses.asdict(self)


def _refine(x, y, i):
    """Vertex of the parabola through points i-1, i, i+1."""
    xs = x[i - 1:i + 2]
    ys = y[i - 1:i + 2]
    a, b, c = np.polyfit(xs - xs[1], ys, 2)
    if a == 0:
        return float(x[i]), float(y[i])
    shift = np.clip(-b / (2 * a), xs[0] - xs[1], xs[2] - xs[1])
    return float(xs[1] + shift), float(np.polyval([a, b, c], shift))


def default_prominence(values):
    return DEFAULT_PROMINENCE_FRACTION * (np.max(values) - np.min(values))


def detect_features(profile, min_prominence=None):
    """
    Detects peaks and dips of Re(eps_out).

    Parameters
    ----------
    profile : Profile
    min_prominence : float, optional
        minimum prominence. Default is 2% of the profile's max - min span.

    Returns
    -------
    features : list of SpectralFeature
        sorted by location. Empty if nothing passes the threshold.

    Notes
    -----
    Peaks are interior local maxima, dips interior local minima with higher values on both sides.
    Both are found with scipy.signal.find_peaks (on Re(eps_out) and -Re(eps_out)) and their
    locations refined by a 3-point parabola. Pole points are left out of the profile.
    """
    if len(profile.responses) == 0:
        raise ParameterError('Profile is empty')
    x = profile.valid_deltas
    y = profile.re_eps_out
    if len(y) < 3:
        return []
    if min_prominence is None:
        min_prominence = default_prominence(y)
    if min_prominence <= 0:
        # flat profile
        return []
    features = []
    for kind, sign in (('peak', 1), ('dip', -1)):
        idx, props = find_peaks(sign * y, prominence=min_prominence)
        for i, prom in zip(idx, props['prominences']):
            location, value = _refine(x, y, i)
            features.append(SpectralFeature(kind=kind, location=location, value=value, prominence=float(prom)))
    return sorted(features, key=lambda f: f.location)


def peaks(features):
    return [f for f in features if f.kind == 'peak']


def dips(features):
    return [f for f in features if f.kind == 'dip']


def full_width_half_maximum(profile, feature):
    """
    Width of a peak at half its value, by linear interpolation between grid points.

    Returns NaN when the profile does not fall below half the peak value on both sides.
    """
    x = profile.valid_deltas
    y = profile.re_eps_out
    half = feature.value / 2
    i = int(np.argmin(np.abs(x - feature.location)))
    left = i
    while left > 0 and y[left] > half:
        left -= 1
    right = i
    while right < len(y) - 1 and y[right] > half:
        right += 1
    if y[left] > half or y[right] > half:
        return np.nan
    xl = np.interp(half, [y[left], y[left + 1]], [x[left], x[left + 1]])
    xr = np.interp(half, [y[right], y[right - 1]], [x[right], x[right - 1]])
    return float(xr - xl)
