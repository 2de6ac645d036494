"""Waring ranks and the explicit root-of-unity decomposition of a monomial.

A monomial x0^d0 * ... * xn^dn with every d_i >= 1 has Waring rank
(d1+1)*...*(dn+1) once the exponents are sorted ascending.  The decomposition
realizing that rank averages the forms x0 + z1^a1 x1 + ... + zn^an xn over all
tuples of (d_i+1)-th roots of unity z_i^a_i, with an explicit scalar in front
of each summand; everything here is exact over Q(zeta_m) for
m = lcm(d1+1, ..., dn+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

from .cyclotomic import CycloScalar, root_of_unity, root_power_sum, embed
from .polynomial import (
    PRIMAL,
    Exponent,
    LinearForm,
    SparsePoly,
    multinomial,
    power_linear_form,
)

EXACT_CYCLOTOMIC = "exact-cyclotomic"
COMPLEX_FLOAT = "complex-float"

_ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}


@dataclass(frozen=True)
class MonomialSpec:
    """A target monomial, normalized to sorted positive exponents.

    ``exponents`` is the sorted tuple (d0, ..., dn) with d0 >= 1; variables
    with exponent zero are stripped before sorting (they cannot occur in any
    decomposition of minimal length).  ``positions[i]`` records which original
    variable the i-th sorted slot came from, so results can be handed back in
    the caller's variable order.
    """

    exponents: tuple[int, ...]
    positions: tuple[int, ...]
    original_exponents: tuple[int, ...]

    @staticmethod
    def from_exponents(exponents) -> MonomialSpec:
        original = tuple(int(e) for e in exponents)
        if any(e < 0 for e in original):
            raise ValueError("exponents must be non-negative")
        pairs = sorted(
            ((e, i) for i, e in enumerate(original) if e > 0), key=lambda p: p[0]
        )
        if not pairs:
            raise ValueError("constant monomials have no Waring decomposition problem")
        return MonomialSpec(
            exponents=tuple(e for e, _ in pairs),
            positions=tuple(i for _, i in pairs),
            original_exponents=original,
        )

    @staticmethod
    def parse(text: str) -> MonomialSpec:
        """Parse "x^2*y^2*z^3", "x0^2*x1*x2^3", or an exponent list "2,2,3".

        Only monic monomials are accepted: a leading numeric factor must be 1.
        """
        cleaned = text.replace(" ", "")
        if not cleaned:
            raise ValueError("empty monomial")
        if all(part.lstrip("-").isdigit() for part in cleaned.split(",")) and "," in cleaned:
            return MonomialSpec.from_exponents(int(p) for p in cleaned.split(","))
        if cleaned.isdigit():
            raise ValueError("a bare number is not a monomial; give variables or a comma list")
        exponents: dict[int, int] = {}
        for factor in cleaned.split("*"):
            if not factor:
                raise ValueError(f"could not parse monomial {text!r}")
            name, _, exp_text = factor.partition("^")
            power = int(exp_text) if exp_text else 1
            if name.isdigit():
                if int(name) != 1:
                    raise ValueError("only monic monomials are supported")
                continue
            if name in _ALIASES:
                index = _ALIASES[name]
            elif name.startswith("x") and name[1:].isdigit():
                index = int(name[1:])
            else:
                raise ValueError(f"unknown variable {name!r}; use x0..x9 or x, y, z, w")
            if index > 9:
                raise ValueError("variables x0..x9 only")
            exponents[index] = exponents.get(index, 0) + power
        size = max(exponents) + 1
        return MonomialSpec.from_exponents(exponents.get(i, 0) for i in range(size))

    # -- derived quantities --------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.exponents) - 1

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def rank(self) -> int:
        return prod(d + 1 for d in self.exponents[1:])

    @property
    def conductor(self) -> int:
        return lcm(*(d + 1 for d in self.exponents[1:])) if self.n >= 1 else 1

    @property
    def num_original_vars(self) -> int:
        return len(self.original_exponents)

    def monomial_poly(self, frame: str = "original") -> SparsePoly:
        if frame == "sorted":
            return SparsePoly.monomial(self.n + 1, PRIMAL, self.exponents)
        return SparsePoly.monomial(self.num_original_vars, PRIMAL, self.original_exponents)

    def form_to_original(self, sorted_coeffs) -> LinearForm:
        """Place sorted-frame form coefficients back at the original variable slots."""
        coeffs = [0] * self.num_original_vars
        for slot, c in enumerate(sorted_coeffs):
            coeffs[self.positions[slot]] = c
        return LinearForm(coeffs)

    def __str__(self) -> str:
        factors = [
            f"x{i}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(self.original_exponents)
            if e
        ]
        return "*".join(factors)


def waring_rank(spec: MonomialSpec) -> int:
    """(d1+1)*...*(dn+1) for sorted exponents d0 <= ... <= dn."""
    return spec.rank


def rank_lower_bound(spec: MonomialSpec) -> int:
    """(d0+1)*...*(d_{n-1}+1); coincides with the rank exactly when d0 = dn."""
    return prod(d + 1 for d in spec.exponents[:-1])


def multinomial_C(spec: MonomialSpec) -> Fraction:
    """The normalizing constant: the multinomial (d; d0..dn) times the rank."""
    return Fraction(multinomial(spec.degree, spec.exponents) * spec.rank)


@dataclass
class Decomposition:
    """A weighted power-sum expression sum_j c_j * (l_j)^d for the target."""

    degree: int
    domain: str  # EXACT_CYCLOTOMIC or COMPLEX_FLOAT
    summands: tuple[tuple[object, LinearForm], ...]
    verified: str = "unverified"  # "exact" | "numeric" | "unverified"
    residual: float | None = None

    def __post_init__(self):
        for _, form in self.summands:
            if form.is_zero():
                raise ValueError("decomposition summands must be nonzero forms")

    def __len__(self) -> int:
        return len(self.summands)


def explicit_decomposition(spec: MonomialSpec) -> Decomposition:
    """The root-of-unity decomposition with (d1+1)*...*(dn+1) summands.

    Summands are indexed by tuples (a_1, ..., a_n) with 0 <= a_i <= d_i; the
    summand's form is x0 + z1^a1 x1 + ... + zn^an xn and its coefficient is
    z1^a1 * ... * zn^an divided by the constant of ``multinomial_C``.  All
    scalars live in Q(zeta_m) for the single conductor m of the spec, and the
    output forms are rearranged into the caller's variable order.
    """
    m = spec.conductor
    inv_c = CycloScalar.from_rational(1 / multinomial_C(spec), m)
    one = CycloScalar.one(m)
    steps = [m // (d + 1) for d in spec.exponents[1:]]
    summands = []

    def rec(i: int, index: tuple[int, ...]):
        if i == spec.n:
            coeffs = [one] + [root_of_unity(m, steps[j] * index[j]) for j in range(spec.n)]
            weight = root_of_unity(m, sum(steps[j] * index[j] for j in range(spec.n))) * inv_c
            summands.append((weight, spec.form_to_original(coeffs)))
            return
        for a in range(spec.exponents[i + 1] + 1):
            rec(i + 1, index + (a,))

    rec(0, ())
    assert len(summands) == spec.rank
    return Decomposition(degree=spec.degree, domain=EXACT_CYCLOTOMIC, summands=tuple(summands))


def coefficient_Cm(spec: MonomialSpec, m_vec: Exponent) -> CycloScalar:
    """Coefficient of x^m_vec in the explicit expression, by the factored formula.

    The geometric sums over each root of unity factor the coefficient into a
    product of ``root_power_sum`` values times (d; m_vec)/C; it is 1 at the
    spec's own exponent vector and 0 at every other degree-d exponent.
    ``m_vec`` is read in the spec's sorted variable frame.
    """
    if len(m_vec) != spec.n + 1:
        raise ValueError("m_vec length must match the number of variables")
    if sum(m_vec) != spec.degree:
        raise ValueError("m_vec must have the same total degree as the monomial")
    value = CycloScalar.from_rational(
        Fraction(multinomial(spec.degree, tuple(m_vec))) / multinomial_C(spec), spec.conductor
    )
    for i in range(1, spec.n + 1):
        value = value * root_power_sum(spec.exponents[i] + 1, m_vec[i] + 1)
    return embed(value, spec.conductor) if value.conductor != spec.conductor else value


@dataclass
class VerificationReport:
    """Outcome of expanding a decomposition and comparing it to the target."""

    ok: bool
    mode: str  # "exact" | "numeric"
    max_error: float
    difference: SparsePoly | None = None

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        if self.mode == "exact":
            detail = "difference = 0" if self.ok else f"difference = {self.difference}"
        else:
            detail = f"max coefficient error = {self.max_error:.3e}"
        return f"{status} ({self.mode}): {detail}"


def verify_decomposition(
    spec: MonomialSpec, dec: Decomposition, tol: float = 1e-8
) -> VerificationReport:
    """Expand sum c_j l_j^d with the multinomial theorem and subtract the target.

    Exact domains must cancel identically in Q(zeta_m); the float domain is
    held to a max-coefficient tolerance instead.
    """
    if dec.degree != spec.degree:
        raise ValueError("decomposition degree does not match the monomial")
    total = SparsePoly.zero(spec.num_original_vars, PRIMAL)
    for coeff, form in dec.summands:
        if form.num_vars != spec.num_original_vars:
            raise ValueError("form has the wrong number of variables")
        total = total + power_linear_form(form, dec.degree).scale(coeff)
    difference = total - spec.monomial_poly("original")
    if dec.domain == EXACT_CYCLOTOMIC:
        ok = difference.is_zero()
        return VerificationReport(ok=ok, mode="exact", max_error=0.0 if ok else float("inf"),
                                  difference=None if ok else difference)
    max_error = max((abs(complex(c)) for c in difference.terms.values()), default=0.0)
    return VerificationReport(ok=max_error < tol, mode="numeric", max_error=max_error)
