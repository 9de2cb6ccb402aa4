"""
Dependence of the spectral features on the phonon-pump phase.
"""

import dataclasses
import warnings
import numpy as np
import pandas as pd
from concurrent.futures import ProcessPoolExecutor, as_completed
from .sweep import sweep
from .features import detect_features
from ..model import steady_state
from ..utils.grid import make_grid
from ..utils.errors import ParameterError
from ..utils.logger import get_logger

logger = get_logger(__name__)

# Half width of the search window around the second-moment resonance.
TRACK_WINDOW = 0.25
# Dense patch added to the default grid around the second-moment resonance.
ZOOM_HALF_WIDTH = 0.01
ZOOM_POINTS = 401
TABLE_COLUMNS = ['track', 'phase', 'kind', 'location', 'value', 'prominence']


@dataclasses.dataclass(frozen=True, eq=False)
class PhaseStudy:
    """
    phases : tuple of float
    profiles : dict
        Profile per phase.
    features : dict
        list of SpectralFeature per phase.
    table : pandas.DataFrame
        one row per track and phase (columns track, phase, kind, location, value, prominence).
        A track that loses its feature has NaN location from that phase on.
    quadratic_track : int or None
        track id of the quadratic-coupling feature.
    """
    phases: tuple
    profiles: dict
    features: dict
    table: pd.DataFrame
    quadratic_track: int = None

    def track(self, track_id):
        """Rows of one track, ordered by phase."""
        return self.table[self.table['track'] == track_id].reset_index(drop=True)

    def quadratic(self):
        """Rows of the quadratic-coupling track. Empty when no such feature was found."""
        if self.quadratic_track is None:
            return self.table.iloc[0:0]
        return self.track(self.quadratic_track)


def _phase_profile(p, phase, grid, method, convention):
    pp = p.replace(Phi_m=float(phase))
    return sweep(pp, steady_state(pp), grid=grid, method=method, convention=convention)


def tracking_centre(p):
    """2 sqrt(omega_m omega_m_eff), where the second-moment susceptibility chi_f vanishes."""
    return 2 * np.sqrt(p.omega_m * p.omega_m_eff)


def phase_grid(p):
    """
    Default grid of a phase study.

    801 points on [0, 4] merged with 401 points within 0.01 of 2 sqrt(omega_m omega_m_eff),
    where the quadratic-coupling feature is narrower than the base spacing.
    """
    centre = tracking_centre(p)
    zoom = np.linspace(centre - ZOOM_HALF_WIDTH, centre + ZOOM_HALF_WIDTH, ZOOM_POINTS)
    base = make_grid()
    base = base[(base < zoom[0]) | (base > zoom[-1])]
    return np.sort(np.concatenate([base, zoom]))


def _initial_feature(features, centre):
    near = [i for i, f in enumerate(features) if abs(f.location - centre) <= TRACK_WINDOW]
    if not near:
        return None
    candidates = [i for i in near if features[i].kind == 'peak'] or near
    return max(candidates, key=lambda i: features[i].prominence)


def _nearest(features, previous):
    same = [f for f in features if f.kind == previous.kind]
    if not same:
        return None
    return min(same, key=lambda f: abs(f.location - previous.location))


def _track_features(phases, features):
    rows = []
    tracks = list(features[phases[0]])
    for ph in phases:
        if ph != phases[0]:
            tracks = [None if f is None else _nearest(features[ph], f) for f in tracks]
        for i, f in enumerate(tracks):
            if f is None:
                rows.append([i, ph, None, np.nan, np.nan, np.nan])
            else:
                rows.append([i, ph, f.kind, f.location, f.value, f.prominence])
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def phase_study(p, ss, phases, grid=None, method='closed_form', convention='exact', min_prominence=None, njobs=1):
    """
    One sweep per phonon-pump phase and every detected feature tracked across phases.

    Parameters
    ----------
    p : SystemParams
        eps_m should be positive, otherwise every phase gives the same profile.
    ss : SteadyState
        operating point at p.Phi_m. Not reused: the steady state depends on the phase
        through Q_s and is recomputed for every entry of phases.
    phases : list of float
        at least two phases in [0, 2 pi).
    grid : optional
        detuning grid, see make_grid. Default is phase_grid(p).
    method, convention : str
        forwarded to sweep.
    min_prominence : float, optional
        forwarded to detect_features.
    njobs : int
        phases evaluated in parallel when larger than 1.

    Returns
    -------
    PhaseStudy

    Notes
    -----
    Every feature found at the first phase starts a track. At each later phase a track continues with
    the feature of the same kind nearest in delta to its previous location.
    The quadratic-coupling track starts from the most prominent peak (or, failing that, any feature)
    within 0.25 of 2 sqrt(omega_m omega_m_eff).
    """
    phases = [float(ph) for ph in phases]
    if len(phases) < 2:
        raise ParameterError('phase_study requires at least 2 phases, got ' + str(len(phases)))
    if p.eps_m == 0:
        msg = 'eps_m = 0: the phonon pump phase has no effect'
        logger.warning(msg)
        warnings.warn(msg)
    if grid is None:
        grid = phase_grid(p)
    if njobs is None or njobs <= 1:
        profiles = {ph: _phase_profile(p, ph, grid, method, convention) for ph in phases}
    else:
        profiles = {}
        with ProcessPoolExecutor(max_workers=njobs) as executor:
            job = {executor.submit(_phase_profile, p, ph, grid, method, convention): ph for ph in phases}
            for j in as_completed(job):
                profiles[job[j]] = j.result()
        profiles = {ph: profiles[ph] for ph in phases}
    features = {ph: detect_features(profiles[ph], min_prominence=min_prominence) for ph in phases}
    table = _track_features(phases, features)
    quadratic = _initial_feature(features[phases[0]], tracking_centre(p))
    if quadratic is None:
        logger.warning('No quadratic-coupling feature found at phase ' + str(phases[0]))
    else:
        lost = table[(table['track'] == quadratic) & table['kind'].isna()]
        if len(lost):
            logger.warning('Quadratic-coupling feature lost at phase ' + str(lost['phase'].iloc[0]))
    return PhaseStudy(phases=tuple(phases), profiles=profiles, features=features, table=table,
                      quadratic_track=quadratic)
