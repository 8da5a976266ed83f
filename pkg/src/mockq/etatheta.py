"""Classical q-series building blocks: Euler products, eta quotients,
Jacobi triple product, theta functions and the triangular-number helpers.

All constructors return QSeries on the 1/24 exponent grid.  E(q) is built
from the pentagonal-number series (O(sqrt(N)) terms); the literal truncated
product is kept in `euler_E_product` as a permanently shipping test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .cyclotomic import Cyc24, ONE as CONE, exp_pi_i, zeta_pow
from .errors import GridError
from .qseries import QSeries

__all__ = [
    "Monomial",
    "EtaQuotientSpec",
    "euler_E",
    "euler_E_product",
    "euler_E_inv",
    "eta_quotient",
    "pochhammer_inf",
    "pochhammer_fin",
    "jtp_product",
    "theta_Theta",
    "theta3",
    "delta_triangular",
    "delta_P0_P1",
    "psi",
    "psi_product",
    "phi_theta",
    "phi_theta_product",
    "vartheta_onethird",
]


class Monomial(NamedTuple):
    """A root-of-unity constant times a grid power of q: const * q^(pow/24)."""

    const: Cyc24
    pow: int

    @classmethod
    def make(cls, const, pow=0):
        return cls(const if isinstance(const, Cyc24) else Cyc24(const), pow)

    def inverse(self):
        return Monomial(self.const.inverse(), -self.pow)


# ---------------------------------------------------------------------------
# Euler products

_E_CACHE = {}
_EINV_CACHE = {}


def _grid_mult(m) -> int:
    g = Fraction(m) * 24
    if g.denominator != 1 or g <= 0:
        raise GridError("multiplier %s is not a positive grid multiple" % (m,))
    return int(g)


def euler_E(m, cap) -> QSeries:
    """E(q^m) = prod (1-q^(mn)) via the pentagonal number theorem."""
    g = _grid_mult(m)
    key = g
    cached = _E_CACHE.get(key)
    if cached is None or cached.cap < cap:
        cached = _pentagonal(g, max(cap, 1))
        _E_CACHE[key] = cached
    return cached.truncate(cap)


def _pentagonal(g, cap):
    terms = []
    k = 0
    while True:
        for kk in ((k, -k) if k else (0,)):
            e = g * kk * (3 * kk - 1) // 2
            if e < cap:
                terms.append((e, -1 if kk % 2 else 1))
        if g * k * (3 * k - 1) // 2 >= cap and k > 0:
            break
        k += 1
    return QSeries.from_terms(terms, cap)


def euler_E_inv(m, cap) -> QSeries:
    """1/E(q^m), cached (generating function of partitions into parts = 0 mod m)."""
    g = _grid_mult(m)
    cached = _EINV_CACHE.get(g)
    if cached is None or cached.cap < cap:
        cached = euler_E(m, max(cap, 1)).inv()
        _EINV_CACHE[g] = cached
    return cached.truncate(cap)


def euler_E_product(m, cap) -> QSeries:
    """Literal truncated product; independent oracle for euler_E."""
    g = _grid_mult(m)
    out = QSeries.one(cap)
    n = 1
    while n * g < cap:
        out = out.mul_binomial(1, n * g)
        n += 1
    return out


# ---------------------------------------------------------------------------
# eta quotients


@dataclass(frozen=True)
class EtaQuotientSpec:
    """Finite product prod_i eta(m_i * tau)^(r_i)."""

    factors: tuple  # of (Fraction multiplier, int exponent)

    def __init__(self, factors):
        fs = tuple((Fraction(m), int(r)) for m, r in factors)
        if len({m for m, _ in fs}) != len(fs):
            raise ValueError("duplicate eta multipliers in %r" % (factors,))
        object.__setattr__(self, "factors", fs)

    def prefactor_grid(self) -> int:
        """Grid exponent of the q^(sum m*r/24) prefactor."""
        tot = sum(m * r for m, r in self.factors)
        if tot.denominator != 1:
            raise GridError("eta-quotient prefactor %s/24 off the grid" % tot)
        return int(tot)

    def to_text(self) -> str:
        num = [(m, r) for m, r in self.factors if r > 0]
        den = [(m, -r) for m, r in self.factors if r < 0]

        def fmt(m, r):
            s = "eta(%s)" % m
            return s if r == 1 else "%s^%d" % (s, r)

        text = "*".join(fmt(m, r) for m, r in num) or "1"
        for m, r in den:
            text += "/" + fmt(m, r)
        return text

    @classmethod
    def from_text(cls, text: str) -> "EtaQuotientSpec":
        factors = {}
        sign = 1
        for piece in _split_keep(text):
            if piece == "*":
                continue
            if piece == "/":
                sign = -1
                continue
            if not piece.startswith("eta(") or ")" not in piece:
                raise ValueError("bad eta factor %r" % piece)
            inner, _, tail = piece[4:].partition(")")
            r = int(tail[1:]) if tail.startswith("^") else 1
            m = Fraction(inner)
            factors[m] = factors.get(m, 0) + sign * r
            sign = 1  # each '/' binds to the single following factor
        return cls([(m, r) for m, r in factors.items() if r])


def _split_keep(text):
    out = []
    cur = ""
    for ch in text.replace(" ", ""):
        if ch in "*/":
            if cur:
                out.append(cur)
                cur = ""
            out.append(ch)
        else:
            cur += ch
    if cur:
        out.append(cur)
    return out


def eta_quotient(spec: EtaQuotientSpec, cap) -> QSeries:
    pre = spec.prefactor_grid()
    out = QSeries.one(cap - min(0, pre))
    for m, r in spec.factors:
        f = euler_E(m, out.cap) if r > 0 else euler_E_inv(m, out.cap)
        for _ in range(abs(r)):
            out = out * f
    return out.shift(pre).truncate(cap)


# ---------------------------------------------------------------------------
# Pochhammer products with monomial argument


def pochhammer_inf(a: Monomial, step: int, cap) -> QSeries:
    """(a; Q)_infinity = prod_{k>=0} (1 - a*Q^k) with Q = q^(step/24), step > 0.

    Factors with negative exponent are normalized via
    1 - C*q^(-p) = -C*q^(-p) * (1 - C^(-1)*q^p).
    """
    if step <= 0:
        raise GridError("pochhammer step must be positive")
    # total q-shift contributed by the normalized negative-exponent factors
    shift_total = 0
    e = a.pow
    while e < 0:
        shift_total += e
        e += step
    work_cap = cap - shift_total
    out = QSeries.one(work_cap)
    k = 0
    while True:
        e = a.pow + k * step
        if e >= work_cap:
            break
        if e > 0:
            out = out.mul_binomial(a.const, e)
        elif e == 0:
            out = out.scale(CONE - a.const)
            if out.is_zero():
                return QSeries.zero(cap)
        else:
            out = out.scale(-a.const).mul_binomial(a.const.inverse(), -e)
        k += 1
    return out.shift(shift_total)


def pochhammer_fin(a: Monomial, step: int, n: int, cap) -> QSeries:
    """(a; Q)_n, the finite product of n factors with Q = q^(step/24)."""
    shift_total = sum(
        a.pow + k * step for k in range(n) if a.pow + k * step < 0
    )
    out = QSeries.one(cap - shift_total)
    for k in range(n):
        e = a.pow + k * step
        if e > 0:
            if e < out.cap:
                out = out.mul_binomial(a.const, e)
        elif e == 0:
            out = out.scale(CONE - a.const)
        else:
            out = out.scale(-a.const).mul_binomial(a.const.inverse(), -e)
    return out.shift(shift_total)


# ---------------------------------------------------------------------------
# Jacobi triple product and Theta


def jtp_product(z: Monomial, cap):
    """Both sides of (q^2, qz, q/z; q^2)_inf = sum (-1)^n z^n q^(n^2)."""
    lhs = euler_E(2, cap)
    lhs = lhs * pochhammer_inf(Monomial(z.const, 24 + z.pow), 48, lhs.cap)
    lhs = lhs * pochhammer_inf(Monomial(z.const.inverse(), 24 - z.pow), 48, lhs.cap)
    terms = []
    n = 0
    while 24 * n * n - n * abs(z.pow) < lhs.cap or n <= abs(z.pow) // 48 + 1:
        for nn in (n, -n) if n else (0,):
            e = 24 * nn * nn + nn * z.pow
            if e < lhs.cap:
                c = z.const**nn
                terms.append((e, -c if nn % 2 else c))
        n += 1
    rhs = QSeries.from_terms(terms, lhs.cap)
    return lhs.truncate(cap), rhs.truncate(cap)


def theta_Theta(z: Monomial, m, cap) -> QSeries:
    """Theta(z, q^m) = (z; q^m)(z^-1 q^m; q^m)(q^m; q^m)."""
    step = _grid_mult(m)
    out = euler_E(m, cap)
    out = out * pochhammer_inf(z, step, out.cap)
    out = out * pochhammer_inf(Monomial(z.const.inverse(), step - z.pow), step, out.cap)
    return out


def theta3(cap, m=1) -> QSeries:
    """Theta_3(q^m) = sum_{n in Z} q^(m n^2)."""
    g = _grid_mult(m)
    terms = []
    n = 0
    while g * n * n < cap:
        terms.append((g * n * n, 1 if n == 0 else 2))
        n += 1
    return QSeries.from_terms(terms, cap)


# ---------------------------------------------------------------------------
# triangular-number series and section helpers


def delta_triangular(cap) -> QSeries:
    """Delta(q) = sum_{n>=0} q^(n(n+1)/2)."""
    terms = []
    n = 0
    while 12 * n * (n + 1) < cap:
        terms.append((12 * n * (n + 1), 1))
        n += 1
    return QSeries.from_terms(terms, cap)


def delta_P0_P1(cap):
    """(Delta, P0, P1) with Delta(q) = P0(q^3) + q*P1(q^3)."""
    delta = delta_triangular(cap)
    p0 = euler_E(2, cap) * euler_E(3, cap) * euler_E(3, cap)
    p0 = p0 * euler_E_inv(6, p0.cap) * euler_E_inv(1, p0.cap)
    p1 = euler_E(6, cap) * euler_E(6, cap) * euler_E_inv(3, cap)
    return delta, p0.truncate(cap), p1.truncate(cap)


def psi(cap) -> QSeries:
    """psi(q) = sum_{n>=0} q^(n(n+1)/2) (same series as Delta)."""
    return delta_triangular(cap)


def psi_product(cap) -> QSeries:
    """(q^2;q^2)_inf / (q;q^2)_inf = E(q^2)^2 / E(q)."""
    out = euler_E(2, cap) * euler_E(2, cap)
    return (out * euler_E_inv(1, out.cap)).truncate(cap)


def phi_theta(cap) -> QSeries:
    """phi(q) = sum_{n in Z} (-1)^n q^(n^2)."""
    terms = []
    n = 0
    while 24 * n * n < cap:
        c = -1 if n % 2 else 1
        terms.append((24 * n * n, c if n == 0 else 2 * c))
        n += 1
    return QSeries.from_terms(terms, cap)


def phi_theta_product(cap) -> QSeries:
    """E(q)^2 / E(q^2), the product form of phi."""
    out = euler_E(1, cap) * euler_E(1, cap)
    return (out * euler_E_inv(2, out.cap)).truncate(cap)


def vartheta_onethird(cap):
    """Both sides of vartheta(1/3, 2*tau) = -sqrt(3) * q^(1/4) * E(q^6).

    The left side is the half-integer theta sum
    sum_{n in 1/2+Z} exp(pi*i*n^2*(2 tau) + 2*pi*i*n*(1/3 + 1/2)); the
    prefactor exp(5*pi*i/6)*(3/2 + i*sqrt(3)/2) of the closed form collapses
    to the exact constant -sqrt(3) = -(2*zeta^2 - zeta^6).
    """
    terms = []
    m = 0
    while 24 * (m * m + m) + 6 < cap:
        for mm in (m, -m - 1):
            # n = mm + 1/2 runs over half-integers; q-exponent n^2 = m^2+m+1/4
            terms.append((24 * (mm * mm + mm) + 6, exp_pi_i(Fraction(5 * (2 * mm + 1), 6))))
        m += 1
    lhs = QSeries.from_terms(terms, cap)
    sqrt3 = 2 * zeta_pow(2) - zeta_pow(6)
    rhs = euler_E(6, cap).scale(-sqrt3).shift(6).truncate(cap)
    return lhs, rhs
