import multiomit
import numpy as np
import pytest
import scipy.linalg


def _preset(name):
    p = multiomit.scenario(name).params
    return p, multiomit.steady_state(p)


def test_plus_structure():
    p, ss = _preset('fig6')
    d = 0.7
    system = multiomit.oracle.assemble_plus(p, ss, d)
    chi = multiomit.response.susceptibilities(p, ss, d)
    if not system.matrix.shape == (8, 8):
        raise AssertionError()
    if not system.labels == ('q+', 'p+', 'c+', 'A+', 'C+', 'Q+', 'P+', 'X+'):
        raise AssertionError()
    if not system.matrix[2, 2] == pytest.approx(chi.chi_c):
        raise AssertionError()
    if not system.matrix[3, 3] == pytest.approx(chi.chi_a):
        raise AssertionError()
    if not system.matrix[4, 4] == pytest.approx(chi.chi_b):
        raise AssertionError()
    if not system.matrix[1, 2] == pytest.approx(chi.G):
        raise AssertionError()
    if not system.matrix[7, 2] == pytest.approx(chi.G_t):
        raise AssertionError()
    if not system.rhs[2] == p.eps_p or not system.rhs[1] == 0:
        raise AssertionError()
    if not np.count_nonzero(system.rhs) == 1:
        raise AssertionError()


def test_minus_structure():
    p, ss = _preset('fig7')
    d = 0.7
    system = multiomit.oracle.assemble_minus(p, ss, d)
    chi = multiomit.response.susceptibilities(p, ss, d)
    if not system.sign == '-':
        raise AssertionError()
    if not system.matrix[2, 2] == pytest.approx(chi.chi_c_o):
        raise AssertionError()
    if not system.matrix[3, 3] == pytest.approx(chi.chi_a_o):
        raise AssertionError()
    if not system.matrix[4, 4] == pytest.approx(chi.chi_b_o):
        raise AssertionError()
    if not system.rhs[2] == 0 or not system.rhs[1] == pytest.approx(p.eps_m_complex):
        raise AssertionError()
    plus = multiomit.oracle.assemble_plus(p, ss, d)
    off = ~np.eye(8, dtype=bool)
    if not np.array_equal(plus.matrix[off], system.matrix[off]):
        raise AssertionError()


def test_solution_satisfies_system():
    p, ss = _preset('fig5')
    system = multiomit.oracle.assemble_plus(p, ss, 1.3)
    sol = multiomit.oracle.solve_sidebands(system)
    x = sol.as_array()
    if not np.linalg.norm(system.matrix @ x - system.rhs) <= 1e-10:
        raise AssertionError()
    if not sol.residual_norm <= 1e-10:
        raise AssertionError()
    if not list(sol.values) == list(system.labels) or not sol.values['c+'] == x[2]:
        raise AssertionError()


def test_singular_system():
    matrix = np.eye(8, dtype=complex)
    matrix[5, 5] = 0
    system = multiomit.oracle.SidebandSystem(matrix=matrix, rhs=np.ones(8, dtype=complex),
                                             labels=multiomit.utils.SIDEBAND_LABELS, delta=0.25, sign='+')
    with pytest.raises(multiomit.utils.SingularSystemError) as err:
        multiomit.oracle.solve_sidebands(system)
    if not err.value.delta == 0.25:
        raise AssertionError()
    if not isinstance(err.value, multiomit.utils.PoleError):
        raise AssertionError()


def test_stability_of_bare_cavity():
    p, ss = _preset('fig2')
    eig = multiomit.oracle.check_stability(p, ss)
    if not len(eig) == 8 or not np.all(eig.real < 0):
        raise AssertionError()
    horizon = multiomit.oracle.settling_horizon(p, ss)
    if not np.isfinite(horizon) or not horizon > 0:
        raise AssertionError()


def test_drift_matrix_matches_plus_system():
    p, ss = _preset('fig4')
    M = multiomit.oracle.drift_matrix(p, ss)
    system = multiomit.oracle.assemble_plus(p, ss, 0.4)
    if not np.allclose(system.matrix, -0.4j * np.eye(8) - M):
        raise AssertionError()


def test_decoupled_cavity():
    p = multiomit.SystemParams(gamma_1=0.1, gamma_2=0.1)
    ss = multiomit.steady_state(p)
    d = 0.5
    system = multiomit.oracle.assemble_plus(p, ss, d)
    chi = multiomit.response.susceptibilities(p, ss, d)
    if not np.count_nonzero(system.matrix[2]) == 1:
        raise AssertionError()
    sol = multiomit.oracle.solve_sidebands(system)
    if not sol.values['c+'] == pytest.approx(p.eps_p / chi.chi_c):
        raise AssertionError()


def test_minus_sideband_needs_phonon_drive():
    p, ss = _preset('fig4')
    if p.eps_m == 0:
        sol = multiomit.oracle.solve_sidebands(multiomit.oracle.assemble_minus(p, ss, 0.7))
        if not np.allclose(sol.as_array(), 0):
            raise AssertionError()
    driven = p.replace(eps_m=0.1)
    sol = multiomit.oracle.solve_sidebands(multiomit.oracle.assemble_minus(driven, ss, 0.7))
    if not abs(sol.values['c-']) > 0:
        raise AssertionError()


def test_solutions_keyed_by_signed_labels():
    p, ss = _preset('fig7')
    plus = multiomit.oracle.solve_sidebands(multiomit.oracle.assemble_plus(p, ss, 0.9))
    minus = multiomit.oracle.solve_sidebands(multiomit.oracle.assemble_minus(p, ss, 0.9))
    if not 'c+' in plus.values or 'c' in plus.values:
        raise AssertionError()
    if not list(minus.values) == [k + '-' for k in multiomit.utils.SIDEBAND_LABELS]:
        raise AssertionError()
    if not multiomit.response.probe_response_minus(p, ss, 0.9).delta_c_plus == minus.values['c-']:
        raise AssertionError()
    solved = multiomit.probe_response(p, ss, 0.9, method='linear_solve').delta_c_plus
    if not solved == plus.values['c+']:
        raise AssertionError()


def test_residual_above_tolerance_is_singular(monkeypatch):
    p, ss = _preset('fig4')
    system = multiomit.oracle.assemble_plus(p, ss, 0.6)
    monkeypatch.setattr(scipy.linalg, 'lu_solve', lambda lu, b: np.zeros_like(b))
    with pytest.raises(multiomit.utils.SingularSystemError, match='residual') as err:
        multiomit.oracle.solve_sidebands(system)
    if not err.value.delta == 0.6:
        raise AssertionError()


def test_undamped_mode_is_unstable():
    # gamma_1 = gamma_2 = Omega = Ga = 0 leaves the atomic modes at exactly zero.
    p = multiomit.SystemParams()
    ss = multiomit.steady_state(p)
    with pytest.raises(multiomit.utils.UnstableDriftError) as err:
        multiomit.oracle.check_stability(p, ss)
    if not np.max(err.value.eigenvalues.real) == 0:
        raise AssertionError()
