"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored over the power basis 1, zeta, ..., zeta^(phi(n)-1),
canonically reduced modulo the n-th cyclotomic polynomial, as integer
numerator vectors over a common positive denominator.  Equality is
therefore structural and hashing is sound.  Rational numbers are the
conductor-1 case; `fractions.Fraction` is the scalar type throughout.

All values are immutable and every operation is a pure function, so
instances can be shared freely across threads.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

from lgorb import _kernels
from lgorb.errors import ConductorMismatchError

Rational = Fraction


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result *= (p - 1) * p ** (e - 1)
        p += 1
    if m > 1:
        result *= m - 1
    return result


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of integer polynomials; divisor monic, division exact."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    return out


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first; degree phi(n)."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_polynomial(d)))
    result = tuple(poly)
    _CYCLO_CACHE[n] = result
    return result


class _Field:
    """Per-conductor context: totient and power-basis reduction rows."""

    __slots__ = ("n", "phi", "rows")

    def __init__(self, n: int):
        self.n = n
        self.phi = euler_phi(n)
        cyc = cyclotomic_polynomial(n)
        base = tuple(-c for c in cyc[: self.phi])  # zeta^phi over the basis
        self.rows: list[tuple[int, ...]] = [base]

    def row(self, e: int) -> tuple[int, ...]:
        """Reduction row of zeta^(phi + e) over the power basis."""
        rows = self.rows
        while len(rows) <= e:
            prev = rows[-1]
            top = prev[-1]
            shifted = [0] + list(prev[:-1])
            if top:
                for j, rj in enumerate(rows[0]):
                    shifted[j] += top * rj
            rows.append(tuple(shifted))
        return rows[e]

    def mul_rows(self) -> list[tuple[int, ...]]:
        self.row(self.phi - 2 if self.phi >= 2 else 0)
        return self.rows


_FIELDS: dict[int, _Field] = {}


def _field(n: int) -> _Field:
    f = _FIELDS.get(n)
    if f is None:
        f = _Field(n)
        _FIELDS[n] = f
    return f


class CycNum:
    """An element of Q(zeta_n), exact, canonical, immutable."""

    __slots__ = ("conductor", "nums", "den", "_hash")

    def __init__(self, conductor: int, nums, den: int = 1, _canonical: bool = False):
        field = _field(conductor)
        if len(nums) != field.phi:
            raise ValueError(
                f"need {field.phi} coefficients at conductor {conductor}, got {len(nums)}"
            )
        if not _canonical:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            nums, den = _kernels.normalize(list(nums), den)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "nums", tuple(nums))
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value, conductor: int = 1) -> "CycNum":
        q = Fraction(value)
        phi = _field(conductor).phi
        nums = [q.numerator] + [0] * (phi - 1)
        return cls(conductor, nums, q.denominator)

    @classmethod
    def from_coeffs(cls, conductor: int, coeffs) -> "CycNum":
        """Build from a sequence of phi(n) rationals over the power basis."""
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den // gcd(den, f.denominator) * f.denominator
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        return cls(conductor, nums, den)

    @classmethod
    def zero(cls, conductor: int = 1) -> "CycNum":
        return cls(conductor, [0] * _field(conductor).phi, 1, _canonical=True)

    @classmethod
    def one(cls, conductor: int = 1) -> "CycNum":
        return cls.from_rational(1, conductor)

    # -- basic queries -----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_one(self) -> bool:
        return self.den == 1 and self.nums[0] == 1 and not any(self.nums[1:])

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.conductor != self.conductor:
                raise ConductorMismatchError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(other, self.conductor)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        nums, den = _kernels.add(self.nums, self.den, other.nums, other.den)
        return CycNum(self.conductor, nums, den, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(
            self.conductor, tuple(-v for v in self.nums), self.den, _canonical=True
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        nums, den = _kernels.mul(
            self.nums, self.den, other.nums, other.den, _field(self.conductor).mul_rows()
        )
        return CycNum(self.conductor, nums, den, _canonical=True)

    __rmul__ = __mul__

    def addmul(self, b: "CycNum", c: "CycNum") -> "CycNum":
        """self + b*c, fused (one normalization)."""
        nums, den = _kernels.addmul(
            self.nums, self.den, b.nums, b.den, c.nums, c.den,
            _field(self.conductor).mul_rows(),
        )
        return CycNum(self.conductor, nums, den, _canonical=True)

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_n over Q[x] (with fast paths for rationals and for
        rational multiples of basis powers)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            q = self.as_rational()
            return CycNum.from_rational(Fraction(q.denominator, q.numerator), self.conductor)
        support = [i for i, v in enumerate(self.nums) if v]
        if len(support) == 1:
            k = support[0]
            scalar = Fraction(self.den, self.nums[k])
            return zeta(self.conductor, self.conductor - k) * scalar
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        a = [Fraction(v, self.den) for v in self.nums]
        inv = _poly_invmod(a, mod)
        return CycNum.from_coeffs(
            self.conductor, inv + [Fraction(0)] * (_field(self.conductor).phi - len(inv))
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        coerced = self._coerce(other)
        return coerced * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def lift(self, m: int) -> "CycNum":
        """Image in Q(zeta_m) under zeta_n -> zeta_m^(m/n); requires n | m."""
        n = self.conductor
        if m % n != 0:
            raise ConductorMismatchError(f"target conductor {m} not divisible by {n}")
        if m == n:
            return self
        step = m // n
        fm = _field(m)
        out = [0] * fm.phi
        for i, v in enumerate(self.nums):
            if not v:
                continue
            e = i * step
            if e < fm.phi:
                out[e] += v
            else:
                for j, rj in enumerate(fm.row(e - fm.phi)):
                    if rj:
                        out[j] += v * rj
        return CycNum(m, out, self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(other, self.conductor)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (
            self.conductor == other.conductor
            and self.den == other.den
            and self.nums == other.nums
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.conductor, self.nums, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    # -- presentation ------------------------------------------------------

    def __repr__(self):
        return f"CycNum({self.conductor}, {self.nums}, {self.den})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = f"z{self.conductor}" + (f"^{i}" if i > 1 else "")
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def complex_approx(self) -> complex:
        """Floating approximation for diagnostics only; never used in logic."""
        w = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * w**i for i, c in enumerate(self.coeffs))

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CycNum":
        coeffs = [Fraction(int(num), int(den)) for num, den in data["coeffs"]]
        return cls.from_coeffs(int(data["conductor"]), coeffs)


def _poly_invmod(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo `mod` in Q[x] (mod irreducible, a nonzero)."""

    def deg(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def trim(p):
        d = deg(p)
        return p[: d + 1] if d >= 0 else []

    def polysub(p, q):
        out = [Fraction(0)] * max(len(p), len(q))
        for i, c in enumerate(p):
            out[i] += c
        for i, c in enumerate(q):
            out[i] -= c
        return trim(out)

    def polymul(p, q):
        if not p or not q:
            return []
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, ci in enumerate(p):
            if ci:
                for j, cj in enumerate(q):
                    if cj:
                        out[i + j] += ci * cj
        return trim(out)

    def polydivmod(p, q):
        p = list(p)
        dq = deg(q)
        lead = q[dq]
        quot = [Fraction(0)] * max(len(p) - dq, 1)
        for i in range(len(p) - 1, dq - 1, -1):
            if p[i]:
                c = p[i] / lead
                quot[i - dq] = c
                for j in range(dq + 1):
                    p[i - dq + j] -= c * q[j]
        return trim(quot), trim(p)

    r0, r1 = trim(mod), trim(a)
    s0, s1 = [], [Fraction(1)]
    while deg(r1) > 0:
        q, r = polydivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, polysub(s0, polymul(q, s1))
    if not r1:
        raise ZeroDivisionError("element not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    return [v / c for v in s1]


def zeta(n: int, k: int = 1) -> CycNum:
    """The root of unity zeta_n^k, canonically reduced; conductor n."""
    field = _field(n)
    e = k % n
    nums = [0] * field.phi
    if e < field.phi:
        nums[e] = 1
        return CycNum(n, nums, 1, _canonical=True)
    for j, rj in enumerate(field.row(e - field.phi)):
        nums[j] = rj
    return CycNum(n, nums, 1)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_inverse(a: CycNum) -> CycNum:
    return a.inverse()


def lift_conductor(a: CycNum, m: int) -> CycNum:
    return a.lift(m)
