"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored as polynomials in z modulo the m-th cyclotomic polynomial
Phi_m, with z standing for zeta_m = exp(2*pi*i/m).  Working modulo Phi_m
(rather than modulo z^m - 1) makes the representation a field, so testing a
coefficient for zero is a sound way to certify polynomial identities.

Internally a scalar keeps an integer coefficient vector over a single positive
denominator; the public ``coeffs`` view is a tuple of ``Fraction``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

# Arbitrary-precision rationals: Python's Fraction already is one (always in
# lowest terms, positive denominator), so it serves as the rational scalar
# type throughout the package.
BigRational = Fraction


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Divide integer polynomials, requiring a monic divisor and zero remainder."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    if any(num):
        raise ValueError("division is not exact")
    return quot


@dataclass(frozen=True)
class CyclotomicPolynomial:
    """The m-th cyclotomic polynomial Phi_m with integer coefficients.

    ``coeffs`` is dense, ascending; Phi_m is monic of degree phi(m), and the
    product of Phi_d over all divisors d of m is z^m - 1.
    """

    m: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "1" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if j == 0:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + term if parts else ("-" if c < 0 else "") + term)
        return " ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> CyclotomicPolynomial:
    """Compute Phi_m as (z^m - 1) / prod of Phi_d over proper divisors d of m.

    >>> str(cyclotomic_poly(1)), str(cyclotomic_poly(2))
    ('z - 1', 'z + 1')
    >>> str(cyclotomic_poly(6))
    'z^2 - z + 1'
    """
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divmod_exact(num, list(cyclotomic_poly(d).coeffs))
    return CyclotomicPolynomial(m, tuple(num))


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """z^j mod Phi_m, as integer vectors of length deg(Phi_m), for j >= deg.

    Row index 0 corresponds to j = deg; rows run far enough to reduce both
    products of two reduced elements and any power z^k with k < m.
    """
    phi = cyclotomic_poly(m).coeffs
    deg = len(phi) - 1
    top = max(m, 2 * deg - 1)
    rows = []
    cur = [-c for c in phi[:deg]]
    for _ in range(deg, top):
        rows.append(tuple(cur))
        lead = cur[-1] if deg > 0 else 0
        cur = [0] + cur[:-1]
        if lead:
            cur = [a - lead * b for a, b in zip(cur, phi[:deg])]
    return tuple(rows)


def _reduce_mod_phi(m: int, vec: list[int]) -> list[int]:
    deg = cyclotomic_poly(m).degree
    if len(vec) <= deg:
        return vec + [0] * (deg - len(vec))
    rows = _reduction_rows(m)
    out = vec[:deg]
    for j in range(deg, len(vec)):
        c = vec[j]
        if c:
            row = rows[j - deg]
            for i in range(deg):
                out[i] += c * row[i]
    return out


class CycloScalar:
    """An exact element of Q(zeta_m), reduced modulo Phi_m.

    Mixed-conductor arithmetic embeds both operands into Q(zeta_lcm) first,
    so values like zeta_6^2 and zeta_3 compare equal.  Arithmetic with floats
    is refused: exact identities must never silently degrade.
    """

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, num: tuple[int, ...], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        deg = cyclotomic_poly(conductor).degree
        vec = _reduce_mod_phi(conductor, list(num))
        if len(vec) != deg:
            raise ValueError(f"expected {deg} coefficients for conductor {conductor}")
        if den < 0:
            den, vec = -den, [-c for c in vec]
        g = gcd(den, *vec) if any(vec) else den
        if g > 1:
            den //= g
            vec = [c // g for c in vec]
        if not any(vec):
            den = 1
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "num", tuple(vec))
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("CycloScalar is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(value: int | Fraction, conductor: int = 1) -> CycloScalar:
        q = Fraction(value)
        deg = cyclotomic_poly(conductor).degree
        return CycloScalar(conductor, (q.numerator,) + (0,) * (deg - 1), q.denominator)

    @staticmethod
    def zero(conductor: int = 1) -> CycloScalar:
        return CycloScalar.from_rational(0, conductor)

    @staticmethod
    def one(conductor: int = 1) -> CycloScalar:
        return CycloScalar.from_rational(1, conductor)

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coordinates in the power basis 1, z, ..., z^(phi(m)-1), as Fractions."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.conductor)
        total = 0j
        power = 1 + 0j
        for c in self.num:
            if c:
                total += c * power
            power *= z
        return total / self.den

    def __bool__(self) -> bool:
        return any(self.num)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> tuple[CycloScalar, CycloScalar] | None:
        if isinstance(other, CycloScalar):
            if other.conductor == self.conductor:
                return self, other
            m = lcm(self.conductor, other.conductor)
            return embed(self, m), embed(other, m)
        if isinstance(other, (int, Fraction)):
            return self, CycloScalar.from_rational(other, self.conductor)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        den = lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        return CycloScalar(a.conductor, tuple(x * fa + y * fb for x, y in zip(a.num, b.num)), den)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.conductor, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0] + (-pair[1])

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return (-pair[0]) + pair[1]

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloScalar(a.conductor, tuple(_poly_mul(list(a.num), list(b.num))), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> CycloScalar:
        """Multiplicative inverse via the extended Euclidean algorithm in Q[z]."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        phi = [Fraction(c) for c in cyclotomic_poly(self.conductor).coeffs]
        r0, r1 = phi, [Fraction(c, self.den) for c in self.num]
        s0, s1 = [Fraction(0)], [Fraction(1)]  # multipliers of self
        while True:
            r1 = _frac_trim(r1)
            if len(r1) == 1:
                break
            q = _frac_divmod(r0, r1)
            r0, r1 = r1, _frac_sub(r0, _frac_mul(q, r1))
            s0, s1 = s1, _frac_sub(s0, _frac_mul(q, s1))
        c = r1[0]
        inv = [s / c for s in s1]
        den = 1
        for f in inv:
            den = lcm(den, f.denominator)
        return CycloScalar(self.conductor, tuple(int(f * den) for f in inv), den)

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0] * pair[1].inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[1] * pair[0].inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloScalar.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.num == b.num and a.den == b.den

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.to_fraction())
        parts = []
        for j, c in enumerate(self.num):
            if c == 0:
                continue
            mono = "1" if j == 0 else (f"z{self.conductor}" if j == 1 else f"z{self.conductor}^{j}")
            coeff = Fraction(c, self.den)
            if parts:
                sign = " - " if coeff < 0 else " + "
                coeff = abs(coeff)
            else:
                sign = "-" if coeff < 0 else ""
                coeff = abs(coeff)
            if j == 0:
                parts.append(f"{sign}{coeff}")
            elif coeff == 1:
                parts.append(f"{sign}{mono}")
            else:
                parts.append(f"{sign}{coeff}*{mono}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"CycloScalar({self.conductor}, {self.num}, {self.den})"


def _frac_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _frac_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _frac_trim([x - y for x, y in zip(a, b)])


def _frac_divmod(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [Fraction(0)]
    quot = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / den[-1]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    return _frac_trim(quot)


def root_of_unity(m: int, k: int) -> CycloScalar:
    """zeta_m^k as an element of Q(zeta_m), reduced modulo Phi_m.

    >>> root_of_unity(2, 1) == -1
    True
    >>> root_of_unity(3, 3) == 1
    True
    """
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    k %= m
    deg = cyclotomic_poly(m).degree
    if k < deg:
        return CycloScalar(m, tuple(1 if i == k else 0 for i in range(deg)))
    return CycloScalar(m, _reduction_rows(m)[k - deg])


def root_power_sum(m: int, e: int) -> CycloScalar:
    """Sum of (zeta_m^e)^a over a = 0, ..., m-1, computed by actual summation.

    The result is m when m divides e and 0 otherwise; the summation is checked
    against that closed form before returning.
    """
    if m < 1:
        raise ValueError("conductor must be a positive integer")
    total = CycloScalar.zero(m)
    for a in range(m):
        total = total + root_of_unity(m, e * a)
    expected = m if e % m == 0 else 0
    assert total == expected, f"geometric sum of roots disagrees with closed form for ({m}, {e})"
    return total


def embed(x: CycloScalar, conductor: int) -> CycloScalar:
    """Image of x under zeta_{m} -> zeta_{conductor}^(conductor/m).

    Requires the source conductor to divide the target; the map is a ring
    homomorphism and fixes rationals.
    """
    if conductor % x.conductor != 0:
        raise ValueError(f"conductor {x.conductor} does not divide {conductor}")
    if conductor == x.conductor:
        return x
    step = conductor // x.conductor
    deg = cyclotomic_poly(conductor).degree
    vec = [0] * deg
    for j, c in enumerate(x.num):
        if c:
            image = root_of_unity(conductor, j * step)
            for i, v in enumerate(image.num):
                vec[i] += c * v
    return CycloScalar(conductor, tuple(vec), x.den)
