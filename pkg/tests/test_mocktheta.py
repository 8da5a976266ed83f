from fractions import Fraction

from mockq.cyclotomic import Cyc24
from mockq.mocktheta import (
    f_eulerian,
    f_watson,
    omega_eulerian,
    omega_watson,
    phi_eulerian,
)

# ---------------------------------------------------------------------------
# independent oracle: naive dense polynomial arithmetic over Fraction, coded
# without any of the package's series machinery


def poly_mul(a, b, n):
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if i + j >= n:
                    break
                out[i + j] += x * y
    return out


def poly_inv(a, n):
    out = [Fraction(0)] * n
    out[0] = 1 / a[0]
    for m in range(1, n):
        s = Fraction(0)
        for i in range(1, m + 1):
            if i < len(a) and a[i]:
                s += a[i] * out[m - i]
        out[m] = -s / a[0]
    return out


def geometric(c, p, n):
    """coefficients of 1/(1 - c q^p)"""
    out = [Fraction(0)] * n
    k = 0
    while k * p < n:
        out[k * p] = c**k
        k += 1
    return out


def brute_f(n):
    total = [Fraction(0)] * n
    total[0] = Fraction(1)
    term = [Fraction(0)] * n
    term[0] = Fraction(1)
    k = 1
    while k * k < n:
        # multiply by q^(2k-1) / (1+q^k)^2
        shifted = [Fraction(0)] * n
        for i, x in enumerate(term):
            if i + 2 * k - 1 < n:
                shifted[i + 2 * k - 1] = x
        inv = geometric(Fraction(-1), k, n)
        term = poly_mul(poly_mul(shifted, inv, n), inv, n)
        for i, x in enumerate(term):
            total[i] += x
        k += 1
    return total


def brute_omega(n):
    total = [Fraction(0)] * n
    term = poly_mul(geometric(Fraction(1), 1, n), geometric(Fraction(1), 1, n), n)
    for i, x in enumerate(term):
        total[i] += x
    k = 1
    while 2 * k * (k + 1) < n:
        shifted = [Fraction(0)] * n
        for i, x in enumerate(term):
            if i + 4 * k < n:
                shifted[i + 4 * k] = x
        inv = geometric(Fraction(1), 2 * k + 1, n)
        term = poly_mul(poly_mul(shifted, inv, n), inv, n)
        for i, x in enumerate(term):
            total[i] += x
        k += 1
    return total


def brute_phi(n):
    total = [Fraction(0)] * n
    total[0] = Fraction(1)
    term = [Fraction(0)] * n
    term[0] = Fraction(1)
    k = 1
    while k * k < n:
        shifted = [Fraction(0)] * n
        for i, x in enumerate(term):
            if i + 2 * k - 1 < n:
                shifted[i + 2 * k - 1] = x
        term = poly_mul(shifted, geometric(Fraction(-1), 2 * k, n), n)
        for i, x in enumerate(term):
            total[i] += x
        k += 1
    return total


# ---------------------------------------------------------------------------


def test_f_against_brute_oracle():
    n = 40
    want = brute_f(n)
    got = f_eulerian(24 * n + 1)
    for k in range(n):
        assert got.coeff(24 * k) == Cyc24(want[k]), k


def test_omega_against_brute_oracle():
    n = 40
    want = brute_omega(n)
    got = omega_eulerian(24 * n + 1)
    for k in range(n):
        assert got.coeff(24 * k) == Cyc24(want[k]), k


def test_phi_against_brute_oracle():
    n = 40
    want = brute_phi(n)
    got = phi_eulerian(24 * n + 1)
    for k in range(n):
        assert got.coeff(24 * k) == Cyc24(want[k]), k


def test_frozen_initial_coefficients():
    f = f_eulerian(24 * 6 + 1)
    assert [f.coeff(24 * k) for k in range(6)] == [
        Cyc24(v) for v in (1, 1, -2, 3, -3, 3)
    ]
    w = omega_eulerian(24 * 6 + 1)
    assert [w.coeff(24 * k) for k in range(6)] == [
        Cyc24(v) for v in (1, 2, 3, 4, 6, 8)
    ]
    p = phi_eulerian(24 * 5 + 1)
    assert [p.coeff(24 * k) for k in range(5)] == [
        Cyc24(v) for v in (1, 1, 0, -1, 1)
    ]


def test_watson_equals_eulerian_f():
    cap = 24 * 120 + 1
    ok, wit = f_watson(cap).eq_to(f_eulerian(cap), 120)
    assert ok, wit


def test_watson_equals_eulerian_omega():
    cap = 24 * 120 + 1
    ok, wit = omega_watson(cap).eq_to(omega_eulerian(cap), 120)
    assert ok, wit
