"""Sparse multivariate polynomials over a pluggable scalar domain.

Two rings appear throughout the package: the "primal" ring of the target
polynomials (variables x0, x1, ...) and the "dual" ring of differential
operators (variables a0, a1, ...).  A dual polynomial D acts on a primal
polynomial F by letting a_i act as d/dx_i; the action is implemented without
normalizing factorials, so a_i^(e+1) kills x_i^e on the nose.

Exponents are plain tuples of non-negative integers, one entry per variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

PRIMAL = "primal"
DUAL = "dual"

_VAR_PREFIX = {PRIMAL: "x", DUAL: "a"}

Exponent = tuple[int, ...]


def grevlex_key(exponent: Exponent):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(exponent), tuple(-e for e in reversed(exponent)))


def exponent_degree(exponent: Exponent) -> int:
    return sum(exponent)


def exponents_of_degree(num_vars: int, degree: int) -> list[Exponent]:
    """All exponent tuples of the given total degree, in descending grevlex order."""
    if degree < 0:
        return []
    out: list[Exponent] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, num_vars)
    out.sort(key=grevlex_key, reverse=True)
    return out


def multinomial(degree: int, parts: Exponent) -> int:
    """The multinomial coefficient degree! / (parts_0! * parts_1! * ...)."""
    if sum(parts) != degree:
        raise ValueError("parts must sum to the degree")
    result = 1
    remaining = degree
    for p in parts:
        result *= comb(remaining, p)
        remaining -= p
    return result


class SparsePoly:
    """A sparse polynomial: a map from exponent tuples to nonzero scalars."""

    __slots__ = ("num_vars", "ring", "terms")

    def __init__(self, num_vars: int, ring: str, terms: dict[Exponent, object] | None = None):
        if ring not in (PRIMAL, DUAL):
            raise ValueError(f"unknown ring tag {ring!r}")
        clean: dict[Exponent, object] = {}
        for exponent, coeff in (terms or {}).items():
            if len(exponent) != num_vars:
                raise ValueError("exponent length does not match the number of variables")
            if any(e < 0 for e in exponent):
                raise ValueError("negative exponent")
            if coeff:
                clean[tuple(exponent)] = coeff
        self.num_vars = num_vars
        self.ring = ring
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(num_vars: int, ring: str) -> SparsePoly:
        return SparsePoly(num_vars, ring)

    @staticmethod
    def constant(num_vars: int, ring: str, value) -> SparsePoly:
        return SparsePoly(num_vars, ring, {(0,) * num_vars: value})

    @staticmethod
    def monomial(num_vars: int, ring: str, exponent: Exponent, coeff=1) -> SparsePoly:
        return SparsePoly(num_vars, ring, {tuple(exponent): coeff})

    @staticmethod
    def variable(num_vars: int, ring: str, index: int) -> SparsePoly:
        exponent = tuple(1 if i == index else 0 for i in range(num_vars))
        return SparsePoly(num_vars, ring, {exponent: 1})

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def coefficient(self, exponent: Exponent):
        return self.terms.get(tuple(exponent), 0)

    def map_coefficients(self, fn) -> SparsePoly:
        return SparsePoly(self.num_vars, self.ring, {e: fn(c) for e, c in self.terms.items()})

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: SparsePoly):
        if self.num_vars != other.num_vars or self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return SparsePoly(self.num_vars, self.ring, terms)

    def __neg__(self):
        return SparsePoly(self.num_vars, self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return self.scale(other)
        self._check_compatible(other)
        terms: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return SparsePoly(self.num_vars, self.ring, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar) -> SparsePoly:
        if not scalar:
            return SparsePoly.zero(self.num_vars, self.ring)
        return SparsePoly(self.num_vars, self.ring, {e: scalar * c for e, c in self.terms.items()})

    def __pow__(self, n: int) -> SparsePoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePoly.constant(self.num_vars, self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if self.num_vars != other.num_vars or self.ring != other.ring:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def evaluate(self, point):
        """Evaluate at a point (one scalar per variable), exactly or in floats."""
        if len(point) != self.num_vars:
            raise ValueError("point length does not match the number of variables")
        max_exp = [0] * self.num_vars
        for e in self.terms:
            for i, ei in enumerate(e):
                if ei > max_exp[i]:
                    max_exp[i] = ei
        powers = []
        for i, p in enumerate(point):
            row = [1]
            for _ in range(max_exp[i]):
                row.append(row[-1] * p)
            powers.append(row)
        total = 0
        for e, c in self.terms.items():
            v = c
            for i, ei in enumerate(e):
                if ei:
                    v = v * powers[i][ei]
            total = total + v
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        prefix = _VAR_PREFIX[self.ring]
        out = ""
        for e, c in self.sorted_terms():
            body = "*".join(
                f"{prefix}{i}" + (f"^{ei}" if ei > 1 else "") for i, ei in enumerate(e) if ei
            )
            cs = str(c)
            if body and any(op in cs[1:] for op in "+-"):
                cs = f"({cs})"
            sign = " + "
            if cs.startswith("-"):
                sign = " - "
                cs = cs[1:]
            term = cs if not body else (body if cs == "1" else f"{cs}*{body}")
            if not out:
                out = term if sign == " + " else "-" + term
            else:
                out += sign + term
        return out

    def __repr__(self) -> str:
        return f"SparsePoly({self.num_vars}, {self.ring!r}, {self.terms!r})"


@dataclass(frozen=True)
class LinearForm:
    """A linear form given by its coefficient sequence (a_0, ..., a_n)."""

    coeffs: tuple

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def num_vars(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_poly(self, ring: str = PRIMAL) -> SparsePoly:
        n = self.num_vars
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                terms[tuple(1 if j == i else 0 for j in range(n))] = c
        return SparsePoly(n, ring, terms)

    def evaluate(self, point):
        total = 0
        for c, p in zip(self.coeffs, point):
            if c:
                total = total + c * p
        return total


def apply_diff(op: SparsePoly, target: SparsePoly) -> SparsePoly:
    """Apply a dual polynomial to a primal one, a_i acting as d/dx_i.

    On monomials, a^s applied to x^e gives (prod e_i!/(e_i - s_i)!) x^(e-s)
    when e >= s componentwise and 0 otherwise; the map is bilinear.
    """
    if op.ring != DUAL or target.ring != PRIMAL:
        raise ValueError("apply_diff expects a dual operator and a primal target")
    if op.num_vars != target.num_vars:
        raise ValueError("operator and target have different numbers of variables")
    terms: dict[Exponent, object] = {}
    for s, cs in op.terms.items():
        for e, ce in target.terms.items():
            if all(ei >= si for ei, si in zip(e, s)):
                scale = 1
                for ei, si in zip(e, s):
                    if si:
                        scale *= factorial(ei) // factorial(ei - si)
                out = tuple(ei - si for ei, si in zip(e, s))
                v = terms.get(out, 0) + scale * cs * ce
                if v:
                    terms[out] = v
                else:
                    terms.pop(out, None)
    return SparsePoly(op.num_vars, PRIMAL, terms)


def power_linear_form(form: LinearForm, degree: int) -> SparsePoly:
    """Expand form^degree by the multinomial theorem (primal ring).

    Coefficient powers are cached per variable, so the cost is one scalar
    product per variable per monomial of the expansion.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    n = form.num_vars
    support = [i for i, c in enumerate(form.coeffs) if c]
    powers = {}
    for i in support:
        row = [1]
        for _ in range(degree):
            row.append(row[-1] * form.coeffs[i])
        powers[i] = row
    terms: dict[Exponent, object] = {}

    def rec(idx: int, remaining: int, exponent: list[int], coeff):
        if idx == len(support) - 1:
            i = support[idx]
            exponent[i] = remaining
            e = tuple(exponent)
            terms[e] = multinomial(degree, tuple(e[j] for j in support)) * coeff * powers[i][remaining]
            exponent[i] = 0
            return
        i = support[idx]
        for k in range(remaining + 1):
            exponent[i] = k
            rec(idx + 1, remaining - k, exponent, coeff * powers[i][k])
        exponent[i] = 0

    if not support:
        raise ValueError("cannot raise the zero form to a power")
    if len(support) == 1:
        i = support[0]
        e = tuple(degree if j == i else 0 for j in range(n))
        terms[e] = powers[i][degree]
    else:
        rec(0, degree, [0] * n, 1)
    return SparsePoly(n, PRIMAL, terms)


def dehomogenize(poly: SparsePoly, var_index: int) -> SparsePoly:
    """Substitute 1 for the chosen variable of a homogeneous polynomial."""
    if not poly.is_homogeneous():
        raise ValueError("dehomogenize expects a homogeneous polynomial")
    if not 0 <= var_index < poly.num_vars:
        raise ValueError("variable index out of range")
    terms: dict[Exponent, object] = {}
    for e, c in poly.terms.items():
        out = tuple(0 if i == var_index else ei for i, ei in enumerate(e))
        s = terms.get(out, 0) + c
        if s:
            terms[out] = s
        else:
            terms.pop(out, None)
    return SparsePoly(poly.num_vars, poly.ring, terms)


def parse_poly(text: str, num_vars: int, ring: str) -> SparsePoly:
    """Parse "3/2*a1^2*a2 - a0" style input; variables are x0.../a0... by ring.

    The one-letter aliases x, y, z, w for x0..x3 (and a, b, c for a0..a2 in
    the dual ring) are accepted for convenience.
    """
    prefix = _VAR_PREFIX[ring]
    aliases = {"x": 0, "y": 1, "z": 2, "w": 3} if ring == PRIMAL else {"a": 0, "b": 1, "c": 2}
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty polynomial")
    cleaned = cleaned.replace("-", "+-")
    if cleaned.startswith("+"):
        cleaned = cleaned[1:]
    poly = SparsePoly.zero(num_vars, ring)
    for chunk in cleaned.split("+"):
        if not chunk:
            raise ValueError(f"could not parse polynomial {text!r}")
        coeff = Fraction(1)
        if chunk.startswith("-"):
            coeff = -coeff
            chunk = chunk[1:]
        exponent = [0] * num_vars
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"could not parse polynomial {text!r}")
            name, _, exp_text = factor.partition("^")
            power = int(exp_text) if exp_text else 1
            if name[0].isdigit():
                coeff *= Fraction(name) ** power
                continue
            if name.startswith(prefix) and name[len(prefix):].isdigit():
                index = int(name[len(prefix):])
            elif name in aliases:
                index = aliases[name]
            else:
                raise ValueError(f"unknown variable {name!r} in {text!r}")
            if index >= num_vars:
                raise ValueError(f"variable {name!r} out of range for {num_vars} variables")
            exponent[index] += power
        poly = poly + SparsePoly.monomial(num_vars, ring, tuple(exponent), coeff)
    return poly
