"""
The susceptibility ladder entering the first-sideband closed form.
"""

import dataclasses


@dataclasses.dataclass(frozen=True)
class Susceptibilities:
    """
    Response functions at one probe detuning.

    chi_a ... chi_g : complex
        ladder as printed with the closed form.
    chi_a_o, chi_b_o, chi_c_o : complex
        minus-sideband variants (delta -> -delta).
    alpha, beta, S : complex
        combinations in their conventional printed form.
    alpha_exact, beta_exact : complex
        the same combinations obtained by eliminating the plus-sideband equations exactly.
    G, G_sm : float
        effective couplings after gauge fixing.
    G_t : complex
        4 (G1 q_s + 2 G2 Q_s). Real unless the phonon pump phase makes Q_s complex.
    eps_m : complex
        eps_m exp(i Phi_m).
    delta : float
    """
    delta: float
    chi_a: complex
    chi_b: complex
    chi_c: complex
    chi_d: complex
    chi_e: complex
    chi_f: complex
    chi_g: complex
    chi_a_o: complex
    chi_b_o: complex
    chi_c_o: complex
    alpha: complex
    beta: complex
    S: complex
    alpha_exact: complex
    beta_exact: complex
    G: float
    G_sm: float
    G_t: complex
    eps_m: complex


def effective_couplings(p, ss):
    """
    G = 2 (G1 + 2 G2 q_s), G_sm = 2 c_s G1, G_t = 4 (G1 q_s + 2 G2 Q_s)
    with c_s the gauge-fixed (real) amplitude.
    """
    G = 2 * (p.G1 + 2 * p.G2 * ss.q_s)
    G_sm = 2 * ss.c_s_gauge * p.G1
    G_t = 4 * (p.G1 * ss.q_s + 2 * p.G2 * ss.Q_s)
    if G_t.imag == 0:
        G_t = complex(G_t.real, 0)
    return float(G), float(G_sm), complex(G_t)


def susceptibilities(p, ss, delta):
    """
    Evaluates the susceptibility ladder at probe detuning delta.

    Parameters
    ----------
    p : SystemParams
    ss : SteadyState
    delta : float

    Returns
    -------
    Susceptibilities

    Notes
    -----
    chi_a = gamma_1 - i delta + i Delta_a, chi_b = gamma_2 - i delta + i Delta_b,
    chi_c = kappa - i delta + i Delta_o, chi_d = omega_m omega_m_eff - delta^2 - i gamma_m delta,

    chi_e = 2 omega_m omega_m_eff + (gamma_m - i delta)(2 gamma_m - i delta),

    chi_f = 2 omega_m omega_m_eff (2 gamma_m - i delta) - i delta chi_e,

    chi_g = -2 gamma_m^2 + 3 i gamma_m delta + delta^2 + 2 omega_m omega_m_eff.

    The conventional alpha is

    alpha = G G_sm omega_m (2 chi_d - chi_e chi_g) + G_t chi_d (-2 gamma_m^2 + 3 i gamma_m delta + delta^2)

    while eliminating the plus-sideband system gives

    alpha_exact = -(gamma_m - i delta) [G G_sm omega_m (3 i delta - 2 gamma_m) + G_t chi_d (2 gamma_m - i delta)].

    The G_t parts agree.
    """
    d = float(delta)
    wm, weff, gm = p.omega_m, ss.omega_m_eff, p.gamma_m
    wprod = wm * weff
    eps_m = p.eps_m_complex
    G, G_sm, G_t = effective_couplings(p, ss)

    chi_a = p.gamma_1 - 1j * d + 1j * p.Delta_a
    chi_b = p.gamma_2 - 1j * d + 1j * p.Delta_b
    chi_c = -1j * d + 1j * p.Delta_o + p.kappa
    chi_d = -1j * gm * d - d ** 2 + wprod
    chi_e = 2 * wprod + (gm - 1j * d) * (2 * gm - 1j * d)
    chi_f = 2 * wprod * (2 * gm - 1j * d) - 1j * d * chi_e
    chi_g = -2 * gm ** 2 + 3j * gm * d + d ** 2 + 2 * wprod

    chi_a_o = p.gamma_1 + 1j * d + 1j * p.Delta_a
    chi_b_o = p.gamma_2 + 1j * d + 1j * p.Delta_b
    chi_c_o = 1j * d + 1j * p.Delta_o + p.kappa

    damping = -2 * gm ** 2 + 3j * gm * d + d ** 2
    alpha = G * G_sm * wm * (2 * chi_d - chi_e * chi_g) + G_t * chi_d * damping
    denom_s = gm * chi_d * chi_f - 1j * d * chi_d * chi_f
    S = 1 / denom_s if denom_s != 0 else complex('inf')
    beta_den = chi_d * chi_f * (d + 1j * gm)
    if eps_m == 0:
        beta = 0j
    else:
        beta = eps_m * G_sm * wm ** 2 * (2 * chi_d - chi_e * chi_g) / beta_den if beta_den != 0 else complex('inf')

    u = 3j * d - 2 * gm
    v = 2 * gm - 1j * d
    alpha_exact = -(gm - 1j * d) * (G * G_sm * wm * u + G_t * chi_d * v)
    beta_exact = -(gm - 1j * d) * wm ** 2 * G_sm * u * eps_m

    return Susceptibilities(delta=d, chi_a=complex(chi_a), chi_b=complex(chi_b), chi_c=complex(chi_c),
                            chi_d=complex(chi_d), chi_e=complex(chi_e), chi_f=complex(chi_f),
                            chi_g=complex(chi_g), chi_a_o=complex(chi_a_o), chi_b_o=complex(chi_b_o),
                            chi_c_o=complex(chi_c_o), alpha=complex(alpha), beta=complex(beta), S=complex(S),
                            alpha_exact=complex(alpha_exact), beta_exact=complex(beta_exact),
                            G=G, G_sm=G_sm, G_t=G_t, eps_m=complex(eps_m))
