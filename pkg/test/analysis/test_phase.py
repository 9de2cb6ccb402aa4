import multiomit
import numpy as np
import pytest

ZOOM = (1.995, 2.015, 401)


def test_needs_two_phases():
    p = multiomit.scenario('fig7').params
    with pytest.raises(multiomit.utils.ParameterError, match='2 phases'):
        multiomit.analysis.phase_study(p, multiomit.steady_state(p), [0.0], grid=ZOOM)


def test_phase_irrelevant_without_pump():
    p = multiomit.scenario('fig7').params.replace(eps_m=0.0)
    with pytest.warns(UserWarning, match='eps_m'):
        study = multiomit.analysis.phase_study(p, multiomit.steady_state(p), [0.0, np.pi / 2, np.pi],
                                               grid=(0, 4, 81))
    reference = study.profiles[0.0].delta_c_plus
    for ph in study.phases:
        if not np.array_equal(study.profiles[ph].delta_c_plus, reference):
            raise AssertionError()


def test_phase_table():
    p = multiomit.scenario('fig7').params
    phases = [0.0, np.pi / 2, np.pi]
    study = multiomit.analysis.phase_study(p, multiomit.steady_state(p), phases, grid=ZOOM)
    if not list(study.table.columns) == ['track', 'phase', 'kind', 'location', 'value', 'prominence']:
        raise AssertionError()
    if not study.quadratic()['phase'].tolist() == phases:
        raise AssertionError()
    if np.array_equal(study.profiles[0.0].delta_c_plus, study.profiles[np.pi].delta_c_plus):
        raise AssertionError()
    for ph in phases:
        if not len(study.profiles[ph]) == ZOOM[2]:
            raise AssertionError()


def test_tracking_centre():
    p = multiomit.scenario('fig7').params
    if not multiomit.analysis.phase.tracking_centre(p) == pytest.approx(2 * np.sqrt(1.006)):
        raise AssertionError()


PHASES = [0.0, np.pi / 2, np.pi]


def _quadratic_values(convention, grid=ZOOM):
    p = multiomit.scenario('fig7').params
    study = multiomit.analysis.phase_study(p, multiomit.steady_state(p), PHASES, grid=grid, convention=convention)
    track = study.quadratic()
    if not track['kind'].tolist() == ['peak'] * 3:
        raise AssertionError()
    return track


def test_default_grid_resolves_quadratic_feature():
    p = multiomit.scenario('fig7').params
    grid = multiomit.analysis.phase.phase_grid(p)
    if not np.all(np.diff(grid) > 0) or not np.min(np.diff(grid)) == pytest.approx(5e-5):
        raise AssertionError()
    track = _quadratic_values('exact', grid=None)
    zoomed = _quadratic_values('exact')
    if not track['location'][0] == pytest.approx(2.0073, abs=1e-3):
        raise AssertionError()
    if not track['value'][0] == pytest.approx(zoomed['value'][0], rel=2e-2):
        raise AssertionError()


def test_quadratic_peak_weakens_with_legacy_coefficients():
    values = _quadratic_values('legacy')['value'].to_numpy()
    if not values[0] > values[1] > values[2]:
        raise AssertionError()
    if not values == pytest.approx([2.5532, 1.9797, 1.5599], rel=5e-3):
        raise AssertionError()


def test_quadratic_peak_with_exact_coefficients():
    # Not monotone in the phase, the quadratic peak dips at pi / 2 and recovers at pi.
    values = _quadratic_values('exact')['value'].to_numpy()
    if not values == pytest.approx([2.080, 1.956, 2.094], rel=5e-3):
        raise AssertionError()
    if not (values[1] < values[0] and values[1] < values[2]):
        raise AssertionError()


def test_features_move_left():
    p = multiomit.scenario('fig7').params
    study = multiomit.analysis.phase_study(p, multiomit.steady_state(p), PHASES, grid=(0.3, 1.5, 1201))
    for start, end in [(0.8399, 0.8272), (0.513, 0.5096)]:
        first = study.table[(study.table['phase'] == 0.0) & (study.table['kind'] == 'peak')]
        tid = first['track'][(first['location'] - start).abs().idxmin()]
        track = study.track(tid)
        if not track['location'][0] == pytest.approx(start, abs=2e-3):
            raise AssertionError()
        if not track['location'][2] < track['location'][0]:
            raise AssertionError()
        if not track['location'][2] == pytest.approx(end, abs=2e-3):
            raise AssertionError()
