import multiomit
import numpy as np
import pytest


def test_bare_cavity_root():
    p = multiomit.SystemParams(kappa=0.1, Delta_o=1.0)
    report = multiomit.analysis.denominator_roots('eq13', p)
    if not report.degree == 1 or not len(report.roots) == 1:
        raise AssertionError()
    if not report.roots[0] == pytest.approx(1 - 0.1j):
        raise AssertionError()
    if not len(report.resonant) == 1:
        raise AssertionError()


@pytest.mark.parametrize('case,name,degree', [('eq13', 'fig2', 1), ('eq14', 'fig3', 3), ('eq16', 'fig5', 5)])
def test_root_counts_and_residuals(case, name, degree):
    p = multiomit.scenario(name).params
    report = multiomit.analysis.denominator_roots(case, p, multiomit.steady_state(p))
    if not len(report.roots) == degree or not report.degree == degree:
        raise AssertionError()
    scale = np.max(np.abs(report.coefficients))
    if not np.all(report.residuals <= 1e-8 * scale):
        raise AssertionError()
    poly = multiomit.analysis.denominator_polynomial(case, p)
    if not np.allclose(np.abs(poly(report.roots)), report.residuals):
        raise AssertionError()
    if not report.threshold == pytest.approx(5 * max(p.kappa, p.gamma_1, p.gamma_m)):
        raise AssertionError()
    for root in report.resonant:
        if not abs(root.imag) <= report.threshold:
            raise AssertionError()


def test_polynomial_matches_reduced_denominator():
    p = multiomit.scenario('fig5').params
    poly = multiomit.analysis.denominator_polynomial('eq16', p)
    d = 0.8
    chi_a = p.gamma_1 - 1j * d + 1j * p.Delta_a
    chi_b = p.gamma_2 - 1j * d + 1j * p.Delta_b
    chi_c = p.kappa - 1j * d + 1j * p.Delta_o
    chi_d = p.omega_m * p.omega_m_eff - d ** 2 - 1j * p.gamma_m * d
    n = chi_a * chi_b + p.Omega ** 2
    direct = chi_b * chi_d * p.Ga ** 2 + n * (chi_c * chi_d - 2j * p.G1 ** 2 * p.omega_m)
    if not poly(d) == pytest.approx(direct, rel=1e-12):
        raise AssertionError()


def test_case_preconditions():
    with pytest.raises(multiomit.utils.PreconditionError):
        multiomit.analysis.denominator_roots('eq13', multiomit.scenario('fig3').params)
    with pytest.raises(multiomit.utils.PreconditionError):
        multiomit.analysis.denominator_roots('eq16', multiomit.scenario('fig6').params)
    with pytest.raises(multiomit.utils.ParameterError):
        multiomit.analysis.denominator_roots('eq15', multiomit.scenario('fig4').params)


def test_feature_root_coherence():
    p = multiomit.scenario('fig2').params
    ss = multiomit.steady_state(p)
    profile = multiomit.sweep(p, ss, (0, 2, 401))
    if not multiomit.analysis.feature_root_coherence('eq13', p, ss, profile) == (1, 1):
        raise AssertionError()


def test_report_dict():
    report = multiomit.analysis.denominator_roots('eq14', multiomit.scenario('fig3').params).to_dict()
    if not report['case'] == 'eq14' or not len(report['roots']) == 3:
        raise AssertionError()
    if not all(len(r) == 2 for r in report['coefficients']):
        raise AssertionError()
