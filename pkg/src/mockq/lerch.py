"""Formal expansion of bilateral sums of Appell-Lerch type,

    sum_{n in Z} (-1)^n rho^n q^(A n^2 + B n + C) / (1 - c q^(D n + E)),

into exact QSeries.  This one engine drives the crank sums, the Watson
sums, the mu specializations and the residue-class Y-sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, isqrt

from .cyclotomic import Cyc24, ONE as CONE, exp_pi_i, zeta_pow
from .errors import GridError, PoleError, ThetaVanishesError
from .etatheta import (
    Monomial,
    euler_E,
    pochhammer_inf,
    theta_Theta,
    theta3,
)
from .qseries import QSeries

__all__ = ["LerchSpec", "lerch_expand", "crank_pair", "thetaid_pair", "mu_formal"]


@dataclass(frozen=True)
class LerchSpec:
    """Parameters of the bilateral sum; A,B,C,D,E are exponents in q-units,
    rho_qpow is a grid exponent carried by rho (so rho = rho_const * q^(rho_qpow/24)).
    global_sign = -1 keeps the (-1)^n factor, +1 drops it."""

    A: Fraction
    B: Fraction = Fraction(0)
    C: Fraction = Fraction(0)
    rho_const: Cyc24 = CONE
    rho_qpow: int = 0
    c_const: Cyc24 = CONE
    D: Fraction = Fraction(0)
    E: Fraction = Fraction(0)
    global_sign: int = -1

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        object.__setattr__(self, "C", Fraction(self.C))
        object.__setattr__(self, "D", Fraction(self.D))
        object.__setattr__(self, "E", Fraction(self.E))
        if not isinstance(self.rho_const, Cyc24):
            object.__setattr__(self, "rho_const", Cyc24(self.rho_const))
        if not isinstance(self.c_const, Cyc24):
            object.__setattr__(self, "c_const", Cyc24(self.c_const))
        if self.A <= 0:
            raise ValueError("lerch spec needs A > 0")
        if self.global_sign not in (1, -1):
            raise ValueError("global_sign must be +-1")

    # the constant multiplying term n, (+-rho_const)^n
    def _base(self) -> Cyc24:
        return -self.rho_const if self.global_sign == -1 else self.rho_const

    def num_grid(self, n: int) -> int:
        e = 24 * (self.A * n * n + self.B * n + self.C) + self.rho_qpow * n
        if e.denominator != 1:
            raise GridError("numerator exponent off grid at n=%d" % n)
        return int(e)

    def den_grid(self, n: int) -> int:
        p = 24 * (self.D * n + self.E)
        if p.denominator != 1:
            raise GridError("denominator exponent off grid at n=%d" % n)
        return int(p)

    @classmethod
    def from_text(cls, text: str) -> "LerchSpec":
        """Parse literals like "sum (-1)^n zeta3^n q^(n^2+n) / (1 + q^(2n+1))"."""
        s = text.replace(" ", "")
        if not s.startswith("sum"):
            raise ValueError("lerch literal must start with 'sum'")
        s = s[3:]
        global_sign = 1
        if s.startswith("(-1)^n"):
            global_sign = -1
            s = s[6:].lstrip("*")
        rho = CONE
        if s.startswith("zeta"):
            head, _, s = s.partition("^")
            order = int(head[4:])
            k = 0
            while k < len(s) and s[k].isdigit():
                k += 1
            mult = int(s[:k]) if k else 1
            s = s[k:]
            if not s.startswith("n"):
                raise ValueError("zeta factor must be raised to a multiple of n")
            s = s[1:].lstrip("*")
            rho = zeta_pow(24 // order * mult)
        if not s.startswith("q^(") :
            raise ValueError("expected q^(...) numerator")
        expr, s = _take_paren(s[2:])
        A, B, C = _quad_coeffs(expr)
        if not s.startswith("/("):
            raise ValueError("expected /(denominator)")
        den, s = _take_paren(s[1:])
        c_const, D, E = _parse_denominator(den)
        return cls(A, B, C, rho_const=rho, c_const=c_const, D=D, E=E,
                   global_sign=global_sign)


def _take_paren(s):
    """s starts with '('; return (inner, rest-after-matching-paren)."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return s[1:i], s[i + 1 :]
    raise ValueError("unbalanced parentheses in %r" % s)


def _poly_eval(expr: str, n: Fraction) -> Fraction:
    py = expr.replace("^", "**")
    out = ""
    for i, ch in enumerate(py):
        if ch in "n(" and i > 0 and (py[i - 1].isdigit() or py[i - 1] in "n)"):
            out += "*" + ch
        else:
            out += ch
    return Fraction(eval(out, {"__builtins__": {}}, {"n": n, "Fraction": Fraction}))


def _quad_coeffs(expr):
    f0 = _poly_eval(expr, Fraction(0))
    f1 = _poly_eval(expr, Fraction(1))
    f2 = _poly_eval(expr, Fraction(2))
    f3 = _poly_eval(expr, Fraction(3))
    A = (f2 - 2 * f1 + f0) / 2
    B = f1 - f0 - A
    if 9 * A + 3 * B + f0 != f3:
        raise ValueError("numerator exponent %r is not quadratic in n" % expr)
    return A, B, f0


def _parse_denominator(den):
    """den like "1+q^(2n+1)" or "1-zeta3*q^(2n+1)"."""
    if not den.startswith("1"):
        raise ValueError("denominator must be 1 -+ c*q^(...)")
    sign = den[1]
    rest = den[2:]
    c = CONE if sign == "-" else Cyc24(-1)
    if rest.startswith("zeta"):
        head, _, rest = rest.partition("*")
        base, _, exp = head.partition("^")
        c = c * zeta_pow(24 // int(base[4:]) * (int(exp) if exp else 1))
    if not rest.startswith("q^(" ):
        raise ValueError("denominator must contain q^(...)")
    expr, tail = _take_paren(rest[2:])
    if tail:
        raise ValueError("trailing junk %r in denominator" % tail)
    g0 = _poly_eval(expr, Fraction(0))
    g1 = _poly_eval(expr, Fraction(1))
    g2 = _poly_eval(expr, Fraction(2))
    if g2 - g1 != g1 - g0:
        raise ValueError("denominator exponent %r is not linear in n" % expr)
    return c, g1 - g0, g0


def _n_window(spec: LerchSpec, cap: int):
    """Conservative symmetric bound: all n with any contribution below cap lie
    in [-N, N].  The minimal attainable exponent of term n is at least
    24*A*n^2 - slope*|n| + const, so solve that quadratic."""
    A24 = 24 * spec.A
    slope = abs(24 * spec.B) + abs(spec.rho_qpow) + abs(24 * spec.D)
    const = 24 * spec.C - abs(24 * spec.E)
    # find smallest N with A24*N^2 - slope*N + const >= cap
    disc = slope * slope - 4 * A24 * (const - cap)
    if disc < 0:
        return 2
    N = int(ceil((slope + isqrt(int(disc)) + 1) / (2 * A24))) + 2
    return N


def lerch_expand(spec: LerchSpec, cap: int, residue=None) -> QSeries:
    """Exact expansion below grid cap.  residue=(m, j) keeps only n = j mod m."""
    base = spec._base()
    N = _n_window(spec, cap)
    terms = []
    for n in range(-N, N + 1):
        if residue is not None and n % residue[0] != residue[1] % residue[0]:
            continue
        e0 = spec.num_grid(n)
        p = spec.den_grid(n)
        lowest = e0 if p >= 0 else e0 - p
        if lowest >= cap:
            continue
        coef = base**n
        c = spec.c_const
        if p > 0:
            ck = coef
            e = e0
            while e < cap:
                terms.append((e, ck))
                ck = ck * c
                e += p
        elif p == 0:
            if c == CONE:
                raise PoleError("term n=%d has denominator 1 - q^0" % n)
            terms.append((e0, coef * (CONE - c).inverse()))
        else:
            # 1/(1 - c q^p) = -sum_{k>=1} c^(-k) q^(-k p)
            cinv = c.inverse()
            ck = coef * cinv
            e = e0 - p
            while e < cap:
                terms.append((e, -ck))
                ck = ck * cinv
                e -= p
    return QSeries.from_terms(terms, cap)


# ---------------------------------------------------------------------------
# crank generating function


def crank_pair(z: Monomial, cap: int, qmult: int = 1):
    """Both sides of E(Q)/((zQ; Q)(z^-1 Q; Q)) =
    (1-z)/E(Q) * sum (-1)^n Q^(n(n+1)/2)/(1 - z Q^n) with Q = q^qmult."""
    g = 24 * qmult
    work = cap + 2 * abs(z.pow) + 2 * g
    den = pochhammer_inf(Monomial(z.const, z.pow + g), g, work)
    den = den * pochhammer_inf(Monomial(z.const.inverse(), g - z.pow), g, den.cap)
    if den.is_zero():
        raise PoleError("crank product side vanishes identically at z")
    lhs = (euler_E(qmult, den.cap - min(0, den.low)) * den.inv())
    m = Fraction(qmult)
    spec = LerchSpec(A=m / 2, B=m / 2, c_const=z.const, D=m, E=Fraction(z.pow, 24))
    rhs = lerch_expand(spec, work)
    rhs = rhs * euler_E(qmult, work).inv()
    if z.pow:
        rhs = rhs.mul_binomial(z.const, z.pow)
    else:
        rhs = rhs.scale(CONE - z.const)
    return lhs.truncate(cap), rhs.truncate(cap)


# ---------------------------------------------------------------------------
# the two-variable theta identity


def _alt_theta_sum(z: Monomial, cap: int) -> QSeries:
    """sum_{n in Z} (-1)^n z^n q^(n^2)."""
    terms = []
    n = 0
    while 24 * n * n - n * abs(z.pow) < cap or n <= abs(z.pow) // 48 + 1:
        for nn in (n, -n) if n else (0,):
            e = 24 * nn * nn + nn * z.pow
            if e < cap:
                c = z.const**nn
                terms.append((e, -c if nn % 2 else c))
        n += 1
    return QSeries.from_terms(terms, cap)


def thetaid_pair(z: Monomial, cap: int):
    """Both sides of
    sum (-1)^n q^(n^2) z^n (1 - z q^(2n))/(1 + z q^(2n))
      = Theta(z,q^2) Theta(-zq,q^2) Theta_3(q) / Theta(-z,q^2).

    The LHS uses (1-w)/(1+w) = -1 + 2/(1+w) and runs through lerch_expand.
    """
    spec = LerchSpec(
        A=Fraction(1),
        rho_const=z.const,
        rho_qpow=z.pow,
        c_const=-z.const,
        D=Fraction(2),
        E=Fraction(z.pow, 24),
    )
    work = cap + 4 * abs(z.pow) + 96
    lhs = lerch_expand(spec, work).scale(2) - _alt_theta_sum(z, work)
    num = theta_Theta(z, 2, work)
    num = num * theta_Theta(Monomial(-z.const, z.pow + 24), 2, work)
    num = num * theta3(work)
    bot = theta_Theta(Monomial(-z.const, z.pow), 2, work)
    if bot.is_zero():
        raise ThetaVanishesError("Theta(-z, q^2) vanishes at this z")
    rhs = num * bot.inv()
    return lhs.truncate(cap), rhs.truncate(cap)


# ---------------------------------------------------------------------------
# formal Appell-Lerch mu at monomial arguments


def mu_formal(u, v, tau_mult: int, cap: int) -> QSeries:
    """mu(u, v; M*tau) as an exact series, for u = a*tau + b, v = a'*tau + b'
    with rational a, b, a', b' (pass u = (a, b), v = (a', b')) and M = tau_mult.

    mu(u,v;tau') = e^(pi i u)/vartheta(v;tau') *
                   sum (-1)^n e^(pi i (n^2+n) tau' + 2 pi i n v)/(1 - e^(2 pi i n tau' + 2 pi i u)).
    """
    a, b = (Fraction(x) for x in u)
    ap, bp = (Fraction(x) for x in v)
    M = int(tau_mult)
    if M <= 0:
        raise ValueError("tau_mult must be a positive integer")
    a_grid = 24 * a
    ap_grid = 24 * ap
    if a_grid.denominator != 1 or ap_grid.denominator != 1:
        raise GridError("mu arguments leave the 1/24 grid")
    a_grid = int(a_grid)
    ap_grid = int(ap_grid)

    margin = 3 * M + abs(a_grid) + abs(ap_grid) + 24 * M + 48
    for _ in range(6):
        work = cap + margin
        spec = LerchSpec(
            A=Fraction(M, 2),
            B=Fraction(M, 2) + ap,
            rho_const=exp_pi_i(2 * bp),
            c_const=exp_pi_i(2 * b),
            D=Fraction(M),
            E=a,
        )
        lsum = lerch_expand(spec, work)
        theta = _vartheta_series(ap, bp, M, work)
        if theta.is_zero():
            raise ThetaVanishesError("vartheta(v; %d*tau) vanishes" % M)
        # e^(pi i u) = e^(pi i b) q^(a/2): grid shift 12*a
        sh = 12 * a
        if sh.denominator != 1:
            raise GridError("e^(pi i u) prefactor off grid")
        out = (lsum * theta.inv()).scale(exp_pi_i(b)).shift(int(sh))
        if out.cap >= cap:
            return out.truncate(cap)
        margin *= 2
    raise GridError("mu_formal failed to reach requested cap")


def _vartheta_series(ap: Fraction, bp: Fraction, M: int, cap: int) -> QSeries:
    """vartheta(a'*tau + b'; M*tau) by the triple product, on the q-grid:
    -i Q^(1/8) zeta^(-1/2) prod (1-Q^n)(1-zeta Q^(n-1))(1-zeta^-1 Q^n),
    Q = q^M, zeta = e^(2 pi i b') q^(a')."""
    g = 24 * M
    ap_grid = int(24 * ap)
    zc = exp_pi_i(2 * bp)
    const = Cyc24(-1) * zeta_pow(6) * exp_pi_i(-bp)
    sh = 3 * M - 12 * ap
    if sh.denominator != 1:
        raise GridError("vartheta prefactor off grid")
    out = euler_E(M, cap)
    out = out * pochhammer_inf(Monomial(zc, ap_grid), g, out.cap)
    out = out * pochhammer_inf(Monomial(zc.inverse(), g - ap_grid), g, out.cap)
    return out.scale(const).shift(int(sh))
