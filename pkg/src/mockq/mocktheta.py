"""Third-order mock theta functions f, omega, phi in both their Eulerian
(defining) form and their bilateral Watson form.  Both constructions ship
and the registry pins their equality as a standing check.
"""

from __future__ import annotations

from fractions import Fraction

from .etatheta import euler_E_inv
from .lerch import LerchSpec, lerch_expand
from .qseries import QSeries

__all__ = [
    "f_eulerian",
    "omega_eulerian",
    "phi_eulerian",
    "f_watson",
    "omega_watson",
]


def f_eulerian(cap) -> QSeries:
    """f(q) = sum_{n>=0} q^(n^2) / (-q; q)_n^2, via a running-term recurrence."""
    term = QSeries.one(cap)
    acc = term
    n = 1
    while 24 * n * n < cap:
        # t_n = t_{n-1} * q^(2n-1) / (1+q^n)^2
        term = term.shift(24 * (2 * n - 1)).truncate(cap)
        term = term.div_binomial(-1, 24 * n).div_binomial(-1, 24 * n)
        acc = acc + term
        n += 1
    return acc


def omega_eulerian(cap) -> QSeries:
    """omega(q) = sum_{n>=0} q^(2n(n+1)) / (q; q^2)_{n+1}^2."""
    term = QSeries.one(cap).div_binomial(1, 24).div_binomial(1, 24)
    acc = term
    n = 1
    while 48 * n * (n + 1) < cap:
        # t_n = t_{n-1} * q^(4n) / (1-q^(2n+1))^2
        term = term.shift(96 * n).truncate(cap)
        term = term.div_binomial(1, 24 * (2 * n + 1)).div_binomial(1, 24 * (2 * n + 1))
        acc = acc + term
        n += 1
    return acc


def phi_eulerian(cap) -> QSeries:
    """phi(q) = sum_{n>=0} q^(n^2) / (-q^2; q^2)_n."""
    term = QSeries.one(cap)
    acc = term
    n = 1
    while 24 * n * n < cap:
        # t_n = t_{n-1} * q^(2n-1) / (1+q^(2n))
        term = term.shift(24 * (2 * n - 1)).truncate(cap)
        term = term.div_binomial(-1, 48 * n)
        acc = acc + term
        n += 1
    return acc


def f_watson(cap) -> QSeries:
    """f(q) = (2/E(q)) sum_{n in Z} (-1)^n q^(n(3n+1)/2) / (1 + q^n).

    The n = 0 term has denominator 1 + q^0 = 2 and contributes 1/2; the n
    and -n terms coincide, so the bilateral sum folds to twice the n >= 1
    tail plus 1/2, which is where the overall factor 2 comes from.
    """
    spec = LerchSpec(
        A=Fraction(3, 2), B=Fraction(1, 2), c_const=-1, D=Fraction(1), E=Fraction(0)
    )
    return (lerch_expand(spec, cap).scale(2) * euler_E_inv(1, cap)).truncate(cap)


def omega_watson(cap) -> QSeries:
    """omega(q) = (1/E(q^2)) sum_{n in Z} (-1)^n q^(3n(n+1)) / (1 - q^(2n+1))."""
    spec = LerchSpec(A=Fraction(3), B=Fraction(3), c_const=1, D=Fraction(2), E=Fraction(1))
    return (lerch_expand(spec, cap) * euler_E_inv(2, cap)).truncate(cap)
