"""Truncated Laurent series on the exponent grid (1/24)*Z with Cyc24 coefficients.

Exponents are stored as integers in units of 1/24 ("grid units"); the honest
q-exponent of grid index e is e/24.  A series knows its lowest materialized
exponent `low` and an exclusive precision bound `cap`: coefficients at every
grid index in [low, cap) are exact, everything at or beyond `cap` is unknown.

Internally a series is split into components along the power basis of
Q(zeta_24): comps[k] = (den, nums) holds the rational coefficient array of
zeta^k as integer numerators over a single positive denominator.  Most series
live entirely in component 0, so multiplication usually costs one integer
convolution.  Dense convolutions go through Kronecker substitution (pack the
coefficient array into one big integer, multiply, unpack), which turns the
schoolbook O(N^2) bound into a couple of big-integer products.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm, ceil

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpz = int

from .cyclotomic import Cyc24, ZERO as CZERO, _REDUCE
from .errors import GridError, NonInvertibleError, PrecisionError

__all__ = ["QSeries"]

_SPARSE_CUTOFF = 48


# ---------------------------------------------------------------------------
# integer convolution


def _pack(vals, nbytes, n):
    buf = bytearray(n * nbytes)
    for i, x in enumerate(vals):
        if x:
            buf[i * nbytes : (i + 1) * nbytes] = x.to_bytes(nbytes, "little")
    return int.from_bytes(buf, "little")


def _unpack(big, nbytes, n):
    big = int(big)
    raw = big.to_bytes(max(n * nbytes, (big.bit_length() + 7) // 8) + nbytes, "little")
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") for i in range(n)
    ]


def _kron_conv(xs, ys, out_len):
    mx = max(abs(v) for v in xs)
    my = max(abs(v) for v in ys)
    bound = mx * my * min(len(xs), len(ys))
    nbytes = bound.bit_length() // 8 + 1
    xp = [v if v > 0 else 0 for v in xs]
    xn = [-v if v < 0 else 0 for v in xs]
    yp = [v if v > 0 else 0 for v in ys]
    yn = [-v if v < 0 else 0 for v in ys]
    has_xn = any(xn)
    has_yn = any(yn)
    p1 = int(_mpz(_pack(xp, nbytes, len(xs))) * _mpz(_pack(yp, nbytes, len(ys))))
    if not (has_xn or has_yn):
        return _unpack(p1, nbytes, out_len)
    # signed case: conv = 2*(pos*pos + neg*neg) - |x|*|y|
    p2 = 0
    if has_xn and has_yn:
        p2 = int(_mpz(_pack(xn, nbytes, len(xs))) * _mpz(_pack(yn, nbytes, len(ys))))
    xa = [abs(v) for v in xs]
    ya = [abs(v) for v in ys]
    p3 = int(_mpz(_pack(xa, nbytes, len(xs))) * _mpz(_pack(ya, nbytes, len(ys))))
    d1 = _unpack(p1, nbytes, out_len)
    d2 = _unpack(p2, nbytes, out_len) if p2 else [0] * out_len
    d3 = _unpack(p3, nbytes, out_len)
    return [2 * (a + b) - c for a, b, c in zip(d1, d2, d3)]


def _conv(xs, ys, out_len):
    """First out_len coefficients of the Cauchy product of integer arrays."""
    if out_len <= 0:
        return []
    xs = xs[:out_len]
    ys = ys[:out_len]
    nzx = [i for i, v in enumerate(xs) if v]
    nzy = [i for i, v in enumerate(ys) if v]
    if not nzx or not nzy:
        return [0] * out_len
    if min(len(nzx), len(nzy)) <= _SPARSE_CUTOFF:
        if len(nzy) < len(nzx):
            xs, ys = ys, xs
            nzx, nzy = nzy, nzx
        out = [0] * out_len
        for i in nzx:
            xi = xs[i]
            hi = out_len - i
            for j in nzy:
                if j >= hi:
                    break
                out[i + j] += xi * ys[j]
        return out
    return _kron_conv(xs, ys, out_len)


# ---------------------------------------------------------------------------
# component accumulator


def _norm_comp(den, nums):
    """Reduce (den, nums) by the common gcd; None if identically zero."""
    g = 0
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g == 0:
        return None
    g = gcd(g, den)
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    return (den, nums)


def _acc_add(acc, k, den, nums, sign):
    if k not in acc:
        acc[k] = [den, [sign * v for v in nums]]
        return
    d0, n0 = acc[k]
    if d0 == den:
        if sign > 0:
            acc[k][1] = [a + b for a, b in zip(n0, nums)]
        else:
            acc[k][1] = [a - b for a, b in zip(n0, nums)]
    else:
        d = lcm(d0, den)
        m0 = d // d0
        m1 = sign * (d // den)
        acc[k] = [d, [a * m0 + b * m1 for a, b in zip(n0, nums)]]


class QSeries:
    __slots__ = ("low", "cap", "comps")

    def __init__(self, low, cap, comps, _trusted=False):
        """comps: dict k -> (den, nums) with len(nums) == cap - low."""
        if low > cap:
            raise ValueError("low > cap")
        if not _trusted:
            comps = {
                k: c
                for k, c in ((k, _norm_comp(d, list(n))) for k, (d, n) in comps.items())
                if c is not None
            }
        self.comps = comps
        # trim leading zeros so `low` points at an actually-nonzero coefficient
        if comps:
            first = min(
                next(i for i, v in enumerate(nums) if v) for _, nums in comps.values()
            )
            if first:
                low += first
                self.comps = {k: (d, n[first:]) for k, (d, n) in comps.items()}
        else:
            low = cap
        self.low = low
        self.cap = cap

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, cap):
        return cls(cap, cap, {}, _trusted=True)

    @classmethod
    def one(cls, cap):
        return cls.monomial(1, 0, cap)

    @classmethod
    def monomial(cls, const, e, cap):
        c = const if isinstance(const, Cyc24) else Cyc24(const)
        if e >= cap or not c:
            return cls.zero(cap)
        comps = {}
        for k, ck in enumerate(c.c):
            if ck:
                nums = [0] * (cap - e)
                nums[0] = ck.numerator
                comps[k] = (ck.denominator, nums)
        return cls(e, cap, comps, _trusted=True)

    @classmethod
    def from_terms(cls, terms, cap):
        """terms: iterable of (grid_exponent, coefficient)."""
        by_comp = {}
        lo = cap
        items = []
        for e, c in terms:
            if e >= cap:
                continue
            c = c if isinstance(c, Cyc24) else Cyc24(c)
            if c:
                items.append((e, c))
                lo = min(lo, e)
        if not items:
            return cls.zero(cap)
        n = cap - lo
        dens = {}
        for e, c in items:
            for k, ck in enumerate(c.c):
                if ck:
                    dens[k] = lcm(dens.get(k, 1), ck.denominator)
        for k, d in dens.items():
            by_comp[k] = (d, [0] * n)
        for e, c in items:
            for k, ck in enumerate(c.c):
                if ck:
                    d, nums = by_comp[k]
                    nums[e - lo] += ck.numerator * (d // ck.denominator)
        return cls(lo, cap, by_comp)

    # -- inspection ------------------------------------------------------

    def is_zero(self):
        return not self.comps

    def coeff(self, e) -> Cyc24:
        if e >= self.cap:
            raise PrecisionError(
                "coefficient at %s/24 requested, precision stops at %s/24"
                % (e, self.cap)
            )
        if e < self.low or not self.comps:
            return CZERO
        i = e - self.low
        cs = [Fraction(0)] * 8
        for k, (d, nums) in self.comps.items():
            if nums[i]:
                cs[k] = Fraction(nums[i], d)
        return Cyc24(cs)

    def nonzero_items(self):
        out = {}
        for k, (d, nums) in self.comps.items():
            for i, v in enumerate(nums):
                if v:
                    out.setdefault(self.low + i, [Fraction(0)] * 8)[k] = Fraction(v, d)
        for e in sorted(out):
            yield e, Cyc24(out[e])

    def eq_to(self, other, order):
        """Coefficient-exact comparison through q^order (order in q-units).

        Returns (True, None) or (False, (grid_e, self_coeff, other_coeff)).
        """
        top = int(Fraction(order) * 24)
        if self.cap <= top or other.cap <= top:
            raise PrecisionError(
                "comparison to order %s needs caps > %d (have %d, %d)"
                % (order, top, self.cap, other.cap)
            )
        lo = min(self.low, other.low)
        for e in range(lo, top + 1):
            a = self.coeff(e)
            b = other.coeff(e)
            if a != b:
                return False, (e, a, b)
        return True, None

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        low = min(self.low, other.low, cap)
        n = cap - low
        acc = {}
        for src in (self, other):
            off = src.low - low
            for k, (d, nums) in src.comps.items():
                chunk = nums[: max(0, cap - src.low)]
                if not any(chunk):
                    continue
                padded = [0] * off + chunk
                padded += [0] * (n - len(padded))
                _acc_add(acc, k, d, padded, 1)
        return QSeries(low, cap, {k: (dv[0], dv[1]) for k, dv in acc.items()})

    def __neg__(self):
        return QSeries(
            self.low,
            self.cap,
            {k: (d, [-v for v in nums]) for k, (d, nums) in self.comps.items()},
            _trusted=True,
        )

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc24)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            cap = min(self.cap + other.low, other.cap + self.low)
            return QSeries.zero(cap)
        low = self.low + other.low
        cap = min(self.cap + other.low, other.cap + self.low)
        out_len = cap - low
        acc = {}
        for i, (di, ni) in self.comps.items():
            for j, (dj, nj) in other.comps.items():
                conv = _conv(ni, nj, out_len)
                if not any(conv):
                    continue
                den = di * dj
                for k, s in _REDUCE[i + j]:
                    _acc_add(acc, k, den, conv, s)
        return QSeries(low, cap, {k: (dv[0], dv[1]) for k, dv in acc.items()})

    __rmul__ = __mul__

    def scale(self, const):
        c = const if isinstance(const, Cyc24) else Cyc24(const)
        if not c:
            return QSeries.zero(self.cap)
        acc = {}
        for j, cj in enumerate(c.c):
            if not cj:
                continue
            for i, (d, nums) in self.comps.items():
                scaled = [cj.numerator * v for v in nums]
                den = d * cj.denominator
                for k, s in _REDUCE[i + j]:
                    _acc_add(acc, k, den, scaled, s)
        return QSeries(self.low, self.cap, {k: (dv[0], dv[1]) for k, dv in acc.items()})

    def shift(self, e):
        """Multiply by q^(e/24)."""
        return QSeries(
            self.low + e,
            self.cap + e,
            dict(self.comps),
            _trusted=True,
        )

    def truncate(self, new_cap):
        if new_cap >= self.cap:
            return self
        if new_cap <= self.low:
            return QSeries.zero(new_cap)
        n = new_cap - self.low
        return QSeries(
            self.low, new_cap, {k: (d, nums[:n]) for k, (d, nums) in self.comps.items()}
        )

    def _as_poly(self, new_cap):
        """Reinterpret as an exact polynomial with a wider cap (internal)."""
        if new_cap <= self.cap:
            return self.truncate(new_cap)
        pad = new_cap - self.cap
        return QSeries(
            self.low,
            new_cap,
            {k: (d, nums + [0] * pad) for k, (d, nums) in self.comps.items()},
            _trusted=True,
        )

    def mul_binomial(self, const, p):
        """Multiply by (1 - const*q^(p/24)), p != 0."""
        return self + self.shift(p).scale(-(const if isinstance(const, Cyc24) else Cyc24(const)))

    def div_binomial(self, const, p):
        """Divide by (1 - const*q^(p/24)) with p > 0 (geometric recurrence)."""
        if p <= 0:
            raise ValueError("div_binomial needs p > 0")
        c = const if isinstance(const, Cyc24) else Cyc24(const)
        if c.is_rational():
            r = c.as_rational()
            acc = {}
            n = self.cap - self.low
            for k, (d, nums) in self.comps.items():
                out = list(nums)
                den = d
                if r.denominator == 1:
                    rn = r.numerator
                    for i in range(p, n):
                        out[i] += rn * out[i - p]
                else:
                    fr = [Fraction(v, d) for v in nums]
                    for i in range(p, n):
                        fr[i] += r * fr[i - p]
                    den = lcm(*(f.denominator for f in fr)) if fr else 1
                    out = [int(f * den) for f in fr]
                acc[k] = (den, out)
            return QSeries(self.low, self.cap, acc)
        # general Cyc24 ratio: multiply by the geometric series in const*q^p
        geo_len = self.cap - self.low
        terms = []
        e = 0
        k = 0
        while e < geo_len:
            terms.append((e, c**k))
            e += p
            k += 1
        return self * QSeries.from_terms(terms, geo_len)

    def inv(self):
        """Multiplicative inverse; result low = -self.low."""
        if self.is_zero() or self.low >= self.cap:
            raise NonInvertibleError("cannot invert a series that is zero to its cap")
        a = self.shift(-self.low)
        lead = a.coeff(0)
        if not lead:
            raise NonInvertibleError("leading coefficient is zero")
        n = a.cap
        # fast path: single rational component with unit integer leading coeff
        if set(a.comps) == {0}:
            d, nums = a.comps[0]
            if nums[0] in (1, -1) and len([v for v in nums if v]) <= 150:
                out = [0] * n
                s0 = nums[0]
                out[0] = s0
                nz = [(i, v) for i, v in enumerate(nums) if v and i > 0]
                for m in range(1, n):
                    s = 0
                    for i, v in nz:
                        if i > m:
                            break
                        s += v * out[m - i]
                    out[m] = -s0 * s
                # self = (1/d) * nums-series  =>  inverse = d * inv(nums-series)
                return QSeries(0, n, {0: (1, [d * v for v in out])}).shift(-self.low)
        # Newton iteration: b <- b + b*(1 - a*b), doubling precision
        b = QSeries.monomial(lead.inverse(), 0, 1)
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            at = a.truncate(prec)
            bp = b._as_poly(prec)
            err = QSeries.one(prec) - at * bp
            b = (bp + bp * err).truncate(prec)
        return b.shift(-self.low)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        res = QSeries.one(self.cap)
        base = self
        kk = k
        while kk:
            if kk & 1:
                res = res * base
            kk >>= 1
            if kk:
                base = base * base
        return res

    # -- grid maps -------------------------------------------------------

    def compose_power(self, k):
        """Substitute q -> q^k for positive rational k on the grid."""
        k = Fraction(k)
        if k <= 0:
            raise GridError("compose_power needs k > 0")
        new_low = ceil(self.low * k)
        new_cap = ceil(self.cap * k)
        n = new_cap - new_low
        comps = {}
        for comp, (d, nums) in self.comps.items():
            out = [0] * n
            for i, v in enumerate(nums):
                if not v:
                    continue
                e2 = (self.low + i) * k
                if e2.denominator != 1:
                    raise GridError(
                        "exponent %s/24 leaves the grid under q -> q^%s"
                        % (self.low + i, k)
                    )
                out[int(e2) - new_low] = v
            comps[comp] = (d, out)
        return QSeries(new_low, new_cap, comps)

    def dissect(self, m, j):
        """Extract S_j with S_j(q^m)*q^j = (part of self supported on exponents
        congruent to j mod m); requires integer exponents."""
        if not (0 <= j < m):
            raise ValueError("residue out of range")
        self._require_integer_exponents("dissect")
        T = (self.cap - 1) // 24  # largest fully-known integer exponent
        tp_max = (T - j) // m
        new_cap = 24 * (tp_max + 1)
        terms = []
        for e, c in self.nonzero_items():
            t = e // 24
            if t % m == j % m:
                tp = (t - j) // m
                terms.append((24 * tp, c))
        return QSeries.from_terms(terms, new_cap)

    def twist_minus_q(self):
        """Substitute q -> -q (integer exponents only)."""
        self._require_integer_exponents("q -> -q twist")
        comps = {}
        for k, (d, nums) in self.comps.items():
            out = list(nums)
            for i in range(len(out)):
                if (self.low + i) // 24 % 2:
                    out[i] = -out[i]
            comps[k] = (d, out)
        return QSeries(self.low, self.cap, comps, _trusted=True)

    def map_coeffs(self, fn):
        """Apply a Cyc24 -> Cyc24 map to every coefficient."""
        return QSeries.from_terms(
            ((e, fn(c)) for e, c in self.nonzero_items()), self.cap
        )

    def _require_integer_exponents(self, what):
        for k, (d, nums) in self.comps.items():
            for i, v in enumerate(nums):
                if v and (self.low + i) % 24:
                    raise GridError(
                        "%s needs integer exponents, found %d/24" % (what, self.low + i)
                    )

    # -- output ----------------------------------------------------------

    def dump(self) -> str:
        """One nonzero coefficient per line: "e/24<TAB>c0 c1 ... c7"."""
        lines = []
        for e, c in self.nonzero_items():
            lines.append("%d/24\t%s" % (e, " ".join(str(x) for x in c.c)))
        return "\n".join(lines)

    def __repr__(self):
        head = []
        for e, c in self.nonzero_items():
            head.append("q^(%d/24)*(%s)" % (e, c.to_text()))
            if len(head) >= 4:
                head.append("...")
                break
        return "QSeries[low=%d cap=%d: %s]" % (self.low, self.cap, " + ".join(head) or "0")
