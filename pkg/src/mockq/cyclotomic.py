"""Exact arithmetic in Q(zeta_24) on the power basis mod Phi_24(x) = x^8 - x^4 + 1.

The single field element type `Cyc24` is the coefficient domain for every
formal series in the package: it contains i = z^6, zeta_3 = z^8, sqrt(3)
= 2*z^2 - z^6 and all 24th roots of unity, which covers every constant
that shows up in the identities we verify.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

__all__ = ["Cyc24", "zeta_pow", "exp_pi_i", "ZERO", "ONE"]

_F0 = Fraction(0)
_F1 = Fraction(1)

# x^e reduced mod x^8 - x^4 + 1, for e = 0..14: list of (index, sign)
_REDUCE = {}
for _e in range(15):
    if _e < 8:
        _REDUCE[_e] = ((_e, 1),)
    elif _e < 12:
        # x^e = x^(e-4) - x^(e-8)
        _REDUCE[_e] = ((_e - 4, 1), (_e - 8, -1))
    else:
        # x^12 = -1
        _REDUCE[_e] = ((_e - 12, -1),)


class Cyc24:
    """c0 + c1*z + ... + c7*z^7 with z = exp(2*pi*i/24), coefficients rational."""

    __slots__ = ("c",)

    def __init__(self, coeffs=0):
        if isinstance(coeffs, Cyc24):
            self.c = coeffs.c
            return
        if isinstance(coeffs, (int, Fraction)):
            self.c = (Fraction(coeffs),) + (_F0,) * 7
            return
        cs = tuple(Fraction(x) for x in coeffs)
        if len(cs) != 8:
            raise ValueError("Cyc24 needs exactly 8 coefficients")
        self.c = cs

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc24([a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc24([a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc24([a - b for a, b in zip(o.c, self.c)])

    def __neg__(self):
        return Cyc24([-a for a in self.c])

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.c, o.c
        out = [_F0] * 8
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                p = ai * bj
                for k, s in _REDUCE[i + j]:
                    out[k] = out[k] + p if s > 0 else out[k] - p
        return Cyc24(out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc24":
        """Multiplicative inverse via extended Euclid against Phi_24 over Q."""
        if not self:
            raise ZeroDivisionError("inverse of zero Cyc24 element")
        # fast path: plain rationals
        if all(not x for x in self.c[1:]):
            return Cyc24(1 / self.c[0])
        phi = [_F1, _F0, _F0, _F0, -_F1, _F0, _F0, _F0, _F1]  # 1 - x^4 + x^8
        r0, r1 = phi, _trim(list(self.c))
        s0, s1 = [], [_F1]
        while r1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        # r0 = gcd = nonzero constant (Phi_24 irreducible), s0 * self = r0 mod Phi
        lead = r0[0]
        inv = [x / lead for x in s0]
        inv += [_F0] * (8 - len(inv))
        return Cyc24(inv[:8])

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure maps --------------------------------------------------

    def conjugate(self) -> "Cyc24":
        """Complex conjugation, the Galois map z -> z^-1."""
        out = ZERO
        for j, cj in enumerate(self.c):
            if cj:
                out = out + cj * zeta_pow(-j)
        return out

    def to_complex(self) -> complex:
        return sum(
            float(cj) * cmath.exp(2j * cmath.pi * j / 24)
            for j, cj in enumerate(self.c)
            if cj
        ) + 0j

    def is_rational(self) -> bool:
        return all(not x for x in self.c[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational: %s" % (self,))
        return self.c[0]

    # -- misc -------------------------------------------------------------

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Cyc24(%s)" % (self.to_text(),)

    def to_text(self) -> str:
        """Lossless rendering "c0 + c1*z + ... + c7*z^7" with rationals p/q."""
        parts = []
        for k, ck in enumerate(self.c):
            s = str(ck)
            if k == 0:
                parts.append(s)
            elif k == 1:
                parts.append("%s*z" % s)
            else:
                parts.append("%s*z^%d" % (s, k))
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "Cyc24":
        out = [_F0] * 8
        for part in text.split(" + "):
            part = part.strip()
            if "*z" in part:
                coef, _, tail = part.partition("*z")
                k = int(tail[1:]) if tail.startswith("^") else 1
            else:
                coef, k = part, 0
            out[k] = Fraction(coef)
        return cls(out)


def _coerce(x):
    if isinstance(x, Cyc24):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc24(x)
    return NotImplemented


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _polymul(a, b):
    if not a or not b:
        return []
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _trim(out)


def _polysub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _F0) - (b[i] if i < len(b) else _F0) for i in range(n)]
    return _trim(out)


def _polydivmod(a, b):
    a = list(a)
    q = [_F0] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] * inv_lead
        if coef:
            q[i] = coef
            for j, bj in enumerate(b):
                a[i + j] -= coef * bj
    return _trim(q), _trim(a)


ZERO = Cyc24(0)
ONE = Cyc24(1)

_ZETA_CACHE = {}


def zeta_pow(k: int) -> Cyc24:
    """zeta_24^k as an exact element."""
    k %= 24
    if k not in _ZETA_CACHE:
        if k < 8:
            coeffs = [_F0] * 8
            coeffs[k] = _F1
            val = Cyc24(coeffs)
        elif k < 12:
            a = [_F0] * 8
            a[k - 4] = _F1
            a[k - 8] = -_F1
            val = Cyc24(a)
        else:
            val = -zeta_pow(k - 12)
        _ZETA_CACHE[k] = val
    return _ZETA_CACHE[k]


def exp_pi_i(r) -> Cyc24:
    """exp(pi*i*r) for rational r with 12*r integral."""
    r = Fraction(r)
    k = r * 12
    if k.denominator != 1:
        raise ValueError("exp(pi*i*%s) is not a 24th root of unity" % r)
    return zeta_pow(int(k))
