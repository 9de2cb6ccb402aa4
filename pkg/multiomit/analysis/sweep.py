"""
Detuning sweeps of the probe response.
"""

import dataclasses
import numpy as np
import pandas as pd
from concurrent.futures import ProcessPoolExecutor, as_completed
from ..response import probe_response
from ..response.probe import normalize_method
from ..utils.errors import PoleError
from ..utils.grid import make_grid
from ..utils.logger import get_logger

logger = get_logger(__name__)

PROFILE_COLUMNS = ['delta', 're_eps_out', 'im_eps_out', 're_tp', 'im_tp', 'abs_tp2', 'pole']


@dataclasses.dataclass(frozen=True, eq=False)
class Profile:
    """
    Probe response over a detuning grid.

    deltas : array
        strictly increasing grid.
    responses : tuple of ProbeResponse
        one per non-pole grid point, in grid order.
    skipped : tuple of float
        detunings where the evaluator hit a pole.
    method : str
    convention : str
    """
    deltas: np.ndarray
    responses: tuple
    skipped: tuple = ()
    method: str = 'closed_form'
    convention: str = 'exact'

    def __len__(self):
        return len(self.deltas)

    @property
    def valid_deltas(self):
        return np.array([r.delta for r in self.responses])

    @property
    def re_eps_out(self):
        return np.array([r.nu_p for r in self.responses])

    @property
    def delta_c_plus(self):
        return np.array([r.delta_c_plus for r in self.responses])

    def to_frame(self):
        """
        One row per grid point. Pole points carry NaN values and pole = True.

        Returns
        -------
        df : pandas.DataFrame
            columns delta, re_eps_out, im_eps_out, re_tp, im_tp, abs_tp2, pole.
        """
        by_delta = {r.delta: r for r in self.responses}
        rows = []
        for d in self.deltas:
            r = by_delta.get(float(d))
            if r is None:
                rows.append([float(d), np.nan, np.nan, np.nan, np.nan, np.nan, True])
            else:
                rows.append([r.delta, r.eps_out.real, r.eps_out.imag, r.t_p.real, r.t_p.imag, r.abs_tp2, False])
        return pd.DataFrame(rows, columns=PROFILE_COLUMNS)


def _evaluate_chunk(p, ss, deltas, method, convention):
    out = []
    for d in deltas:
        try:
            out.append(probe_response(p, ss, d, method=method, convention=convention))
        except PoleError as err:
            logger.info('Pole at delta = ' + str(d) + ': ' + str(err))
            out.append(None)
    return out


def sweep(p, ss, grid=None, method='closed_form', convention='exact', njobs=1):
    """
    Evaluates the probe response at every detuning of a grid.

    Parameters
    ----------
    p : SystemParams
    ss : SteadyState
    grid : tuple, dict, str or array, optional
        (min, max, count) or explicit detunings. Default 801 points on [0, 4].
    method : str
        'closed_form' or 'linear_solve'.
    convention : str
        closed-form convention ('exact' or 'legacy').
    njobs : int
        number of worker processes. 1 evaluates in process.

    Returns
    -------
    Profile

    Notes
    -----
    Points where the evaluator raises a PoleError are recorded in Profile.skipped.
    Only validation errors propagate.
    """
    method = normalize_method(method)
    deltas = make_grid(grid)
    if njobs is None or njobs <= 1:
        results = _evaluate_chunk(p, ss, deltas, method, convention)
    else:
        chunks = np.array_split(deltas, njobs)
        parts = {}
        with ProcessPoolExecutor(max_workers=njobs) as executor:
            job = {executor.submit(_evaluate_chunk, p, ss, chunk, method, convention): i
                   for i, chunk in enumerate(chunks)}
            for j in as_completed(job):
                parts[job[j]] = j.result()
        results = [r for i in range(len(chunks)) for r in parts[i]]
    responses = tuple(r for r in results if r is not None)
    skipped = tuple(float(d) for d, r in zip(deltas, results) if r is None)
    if skipped:
        logger.warning(str(len(skipped)) + ' pole point(s) skipped in sweep')
    return Profile(deltas=deltas, responses=responses, skipped=skipped, method=method, convention=convention)
