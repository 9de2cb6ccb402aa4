import dataclasses
import multiomit
import numpy as np
import pytest

PRESETS = ['fig2', 'fig3', 'fig4', 'fig5', 'fig6', 'fig7', 'fig7_phi_half_pi', 'fig7_phi_pi']


def _preset(name):
    p = multiomit.scenario(name).params
    return p, multiomit.steady_state(p)


def test_bare_cavity_values():
    p = multiomit.SystemParams(kappa=0.1, Delta_o=1.0)
    ss = multiomit.steady_state(p)
    dcp = multiomit.response.delta_c_plus_closed_form(p, ss, 1.0)
    if not dcp == pytest.approx(10.0):
        raise AssertionError()
    r = multiomit.probe_response(p, ss, 1.0)
    if not r.eps_out == pytest.approx(4.4721, abs=1e-4):
        raise AssertionError()
    if not r.t_p == pytest.approx(-2.1623, abs=1e-4):
        raise AssertionError()
    if not r.nu_p == r.eps_out.real or not r.rho_p == r.eps_out.imag:
        raise AssertionError()
    if not r.abs_tp2 == pytest.approx(abs(r.t_p) ** 2):
        raise AssertionError()


@pytest.mark.parametrize('name', PRESETS)
def test_closed_form_matches_linear_solve(name):
    p, ss = _preset(name)
    for delta in np.linspace(0, 4, 101):
        closed = multiomit.response.delta_c_plus_closed_form(p, ss, delta)
        solved = multiomit.probe_response(p, ss, delta, method='linear_solve').delta_c_plus
        if not abs(closed - solved) <= 1e-7 * abs(solved):
            raise AssertionError(name + ' at delta = ' + str(delta))


@pytest.mark.parametrize('name', ['fig2', 'fig3', 'fig4', 'fig5'])
def test_conventions_agree_without_quadratic_coupling(name):
    p, ss = _preset(name)
    for delta in np.linspace(0, 4, 41):
        exact = multiomit.response.delta_c_plus_closed_form(p, ss, delta, convention='exact')
        legacy = multiomit.response.delta_c_plus_closed_form(p, ss, delta, convention='legacy')
        if not legacy == pytest.approx(exact, rel=1e-12):
            raise AssertionError()


def test_legacy_deviates_with_quadratic_coupling():
    p, ss = _preset('fig6')
    devs = []
    for delta in np.linspace(0.5, 1.5, 21):
        exact = multiomit.response.delta_c_plus_closed_form(p, ss, delta, convention='exact')
        legacy = multiomit.response.delta_c_plus_closed_form(p, ss, delta, convention='legacy')
        devs.append(abs(legacy - exact) / abs(exact))
    if not max(devs) > 1e-6:
        raise AssertionError()


def test_unknown_convention():
    p, ss = _preset('fig2')
    with pytest.raises(multiomit.utils.ParameterError):
        multiomit.response.delta_c_plus_closed_form(p, ss, 1.0, convention='other')
    with pytest.raises(multiomit.utils.ParameterError):
        multiomit.probe_response(p, ss, 1.0, method='euler')


def test_method_aliases():
    p, ss = _preset('fig4')
    a = multiomit.probe_response(p, ss, 0.9, method='closed')
    b = multiomit.probe_response(p, ss, 0.9, method='closed_form')
    c = multiomit.probe_response(p, ss, 0.9, method='solve')
    if not a == b:
        raise AssertionError()
    if not c.delta_c_plus == pytest.approx(a.delta_c_plus, rel=1e-9):
        raise AssertionError()


def test_probe_homogeneity():
    p, ss = _preset('fig6')
    for delta in [0.3, 1.0, 2.5]:
        one = multiomit.response.delta_c_plus_closed_form(p, ss, delta)
        two = multiomit.response.delta_c_plus_closed_form(p.replace(eps_p=2.0), ss, delta)
        if not two == pytest.approx(2 * one, rel=1e-12):
            raise AssertionError()
        r1 = multiomit.probe_response(p, ss, delta)
        r2 = multiomit.probe_response(p.replace(eps_p=2.0), ss, delta)
        if not r2.eps_out == pytest.approx(r1.eps_out, rel=1e-12):
            raise AssertionError()


def test_probe_affine_with_pump():
    p, ss = _preset('fig7')
    for delta in [0.5, 1.2]:
        d1, d2, d3 = [multiomit.response.delta_c_plus_closed_form(p.replace(eps_p=e), ss, delta)
                      for e in [1.0, 2.0, 3.0]]
        if not (d3 - d2) == pytest.approx(d2 - d1, rel=1e-10):
            raise AssertionError()


def test_phase_irrelevant_without_pump():
    p, ss = _preset('fig6')
    q = p.replace(Phi_m=2.0)
    ssq = multiomit.steady_state(q)
    for delta in np.linspace(0, 4, 21):
        if not multiomit.probe_response(p, ss, delta) == multiomit.probe_response(q, ssq, delta):
            raise AssertionError()


def test_minus_sideband():
    p, ss = _preset('fig6')
    if not multiomit.response.probe_response_minus(p, ss, 0.8).delta_c_plus == 0:
        raise AssertionError()
    p, ss = _preset('fig7')
    if not abs(multiomit.response.probe_response_minus(p, ss, 0.8).delta_c_plus) > 0:
        raise AssertionError()


def test_closed_form_terms():
    p, ss = _preset('fig2')
    numerator, terms, chi = multiomit.response.closed_form_terms(p, ss, 0.7)
    if not numerator == 1 or not terms['linear'] == 0 or not terms['quadratic'] == 0 or not terms['atomic'] == 0:
        raise AssertionError()
    if not terms['cavity'] == chi.chi_c:
        raise AssertionError()


def _closed(q, ss, delta):
    return multiomit.response.delta_c_plus_closed_form(q, ss, delta)


def _solved(q, ss, delta):
    return multiomit.oracle.solve_sidebands(multiomit.oracle.assemble_plus(q, ss, delta)).values['c+']


@pytest.mark.parametrize('evaluate', [_closed, _solved])
def test_drive_additivity_and_homogeneity(evaluate):
    p, ss = _preset('fig7')
    # eps_p = 0 is outside the validated range, so the parameter check is bypassed.
    probe_only = dataclasses.replace(p, eps_m=0.0)
    pump_only = dataclasses.replace(p, eps_p=0.0)
    doubled = dataclasses.replace(p, eps_p=2 * p.eps_p, eps_m=2 * p.eps_m)
    for delta in np.linspace(0.1, 3.9, 40):
        full, a, b, twice = [evaluate(q, ss, delta) for q in [p, probe_only, pump_only, doubled]]
        scale = abs(a) + abs(b)
        if not abs(a + b - full) <= 1e-12 * scale:
            raise AssertionError('additivity at delta = ' + str(delta))
        if not abs(twice - 2 * full) <= 1e-12 * 2 * scale:
            raise AssertionError('homogeneity at delta = ' + str(delta))
