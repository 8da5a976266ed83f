import cmath
import math

import mpmath
import pytest
from scipy import integrate

from mockq.errors import PoleError
from mockq.numeric import (
    CHECK_NAMES,
    E_num,
    F_num,
    NumericScene,
    R_num,
    beta_num,
    eichler_gab,
    eta_num,
    g012_num,
    g_ab_num,
    mordell_j,
    mu_num,
    mu_tilde_modular_check,
    mu_tilde_num,
    qseries_eval,
    run_check,
    theta_num,
)

SC = NumericScene(0.25 + 1j)


def test_scene_validation():
    with pytest.raises(ValueError):
        NumericScene(0.5 - 1j)
    with pytest.raises(ValueError):
        NumericScene(1j, abs_tol=-1)


def test_E_and_beta_special_values():
    assert E_num(0) == 0
    assert beta_num(0) == 1
    assert abs(E_num(3) - (1 - beta_num(9))) < 1e-12
    assert abs(E_num(5.0) - 1) < 1e-12
    # odd function, complex consistency with the defining integral
    z = 0.7
    quad_val, _ = integrate.quad(lambda u: 2 * math.exp(-math.pi * u * u), 0, z)
    assert abs(E_num(z) - quad_val) < 1e-12
    zc = 0.3 + 0.4j
    series = sum(
        (-math.pi) ** n * zc ** (2 * n + 1) / (math.factorial(n) * (n + 0.5))
        for n in range(40)
    )
    assert abs(E_num(zc) - series) < 1e-12


def test_eta_against_high_precision_product():
    tau = 1j
    with mpmath.workdps(40):
        q = mpmath.exp(2j * mpmath.pi * tau)
        val = mpmath.exp(2j * mpmath.pi * tau / 24)
        for n in range(1, 200):
            val *= 1 - q**n
        want = complex(val)
    assert abs(eta_num(NumericScene(tau)) - want) < 1e-12


def test_theta_matches_jtp_product_form():
    for z, tau in [
        (0.2 + 0.1j, 1j),
        (0.3, 0.25 + 1j),
        (-0.1 + 0.2j, 0.1 + 0.8j),
        (0.45 + 0.05j, -0.3 + 1.2j),
        (0.05 + 0.3j, 0.5 + 2j),
    ]:
        q = cmath.exp(2j * math.pi * tau)
        zeta = cmath.exp(2j * math.pi * z)
        prod = -1j * q ** (1 / 8) * zeta ** (-0.5)
        for n in range(1, 200):
            prod *= (1 - q**n) * (1 - zeta * q ** (n - 1)) * (1 - q**n / zeta)
        assert abs(theta_num(z, NumericScene(tau)) - prod) < 1e-10, (z, tau)


def test_mu_pole_detection():
    with pytest.raises(PoleError):
        mu_num(0.0, 0.2 + 0.1j, SC)


def test_R_elliptic_properties():
    u = 0.3 + 0.2j
    tau = SC.tau
    assert abs(R_num(u + 1, SC) + R_num(u, SC)) < 1e-10
    lhs = R_num(u, SC) + cmath.exp(-2j * math.pi * u - 1j * math.pi * tau) * R_num(u + tau, SC)
    assert abs(lhs - 2 * cmath.exp(-1j * math.pi * u - 1j * math.pi * tau / 4)) < 1e-9
    assert abs(R_num(-u, SC) - R_num(u, SC)) < 1e-12


def test_mu_tilde_symmetries():
    u, v = 0.3 + 0.2j, 0.05 + 0.3j
    base = mu_tilde_num(u, v, SC)
    assert abs(mu_tilde_num(-u, -v, SC) - base) < 1e-9
    assert abs(mu_tilde_num(v, u, SC) - base) < 1e-9


def test_mu_tilde_modular_identity_matrix():
    res = mu_tilde_modular_check(((1, 0), (0, 1)), 0.2 + 0.1j, 0.05 + 0.3j, SC)
    assert res < 1e-12


def test_mu_tilde_modular_requires_unimodular():
    with pytest.raises(ValueError):
        mu_tilde_modular_check(((2, 0), (0, 1)), 0.1j + 0.2, 0.3, SC)


def test_g012_hooks():
    for idx, (c, a, b) in enumerate(
        [(cmath.exp(-1j * math.pi / 3), 1 / 3, 0.5), (-1.0, 1 / 6, 0.0), (1.0, 1 / 3, 0.0)]
    ):
        for z in (0.2 + 0.8j, -0.15 + 1.3j):
            direct = g012_num(idx, z)
            hook = c * g_ab_num(a, b, NumericScene(3 * z))
            assert abs(direct - hook) < 1e-11, (idx, z)


def test_eichler_termwise_vs_quadrature():
    a, b = 1 / 3, 0.0
    tw = eichler_gab(a, b, SC, method="terms")
    qd = eichler_gab(a, b, SC, method="quad")
    assert abs(tw - qd) < 1e-9


def test_mordell_quad_vs_grid():
    for idx in (1, 2, 3):
        q1 = mordell_j(idx, NumericScene(1j), method="quad")
        q2 = mordell_j(idx, NumericScene(1j), method="grid")
        assert abs(q1 - q2) < 1e-9, idx


def test_mordell_j3_real_at_imaginary_tau():
    val = mordell_j(3, NumericScene(1j))
    assert abs(val.imag) < 1e-10


def test_F_tail_bound_guard():
    with pytest.raises(Exception):
        F_num(NumericScene(0.01j))


def test_qseries_eval_geometric():
    from mockq.qseries import QSeries

    s = QSeries.from_terms([(24 * k, 1) for k in range(200)], 24 * 200)
    tau = 0.05 + 0.8j
    q = cmath.exp(2j * math.pi * tau)
    assert abs(qseries_eval(s, tau) - 1 / (1 - q)) < 1e-12


def test_run_check_unknown_name():
    with pytest.raises(KeyError):
        run_check("no-such-check", SC)


@pytest.mark.parametrize("name", CHECK_NAMES)
def test_each_check_passes_at_default_scene(name):
    r = run_check(name, SC)
    assert r.passed, (name, r.residual, r.detail)


def test_watson_assignment_reported():
    r = run_check("watson-lemma", SC)
    assert "winner (j2,-j1,j3)" in r.detail
