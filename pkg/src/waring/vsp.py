"""Exploring the space of power-sum decompositions of a monomial.

The canonical generator tuples phi (no term in the model ideal J) parametrize
the reduced decompositions bijectively, so sampling phi, solving the resulting
ideal, and fitting the coefficients walks the space of decompositions.  This
module also hosts the point-side Hilbert-function diagnostics and the torus
normalization that, for equal exponents, maps any decomposition to the
canonical one.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

import numpy as np

from .ideals import PhiTuple, basis_Bprime, dim_vsp
from .linalg import InconsistentSystem, RankDeficientSystem, exact_rank, exact_solve, float_rank, lstsq_solve
from .monomials import COMPLEX_FLOAT, Decomposition, MonomialSpec, verify_decomposition
from .polynomial import DUAL, SparsePoly, exponents_of_degree
from .solver import (
    NonRadicalIdealError,
    PointSet,
    _is_exact_scalar,
    build_quotient,
    extract_points,
    fit_coefficients,
    is_radical,
    trace_form_rank,
)


@dataclass(frozen=True)
class VSPParameterSpace:
    """Monomial bases of the coefficient spaces for each phi_i."""

    spec: MonomialSpec
    bases: tuple[tuple, ...]

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.bases)


def parameter_space(spec: MonomialSpec) -> VSPParameterSpace:
    space = VSPParameterSpace(
        spec=spec, bases=tuple(tuple(basis_Bprime(spec, i)) for i in range(1, spec.n + 1))
    )
    assert space.dimension == dim_vsp(spec)
    return space


def sample_phi(space: VSPParameterSpace, seed: int) -> PhiTuple:
    """A seeded random canonical tuple: every basis monomial of each phi_i gets
    a nonzero integer coefficient in [-9, 9]."""
    rng = random.Random(seed)
    spec = space.spec
    entries = []
    for basis in space.bases:
        poly = SparsePoly.zero(spec.n + 1, DUAL)
        for e in basis:
            c = rng.choice([k for k in range(-9, 10) if k != 0])
            poly = poly + SparsePoly.monomial(spec.n + 1, DUAL, e, Fraction(c))
        entries.append(poly)
    phi = PhiTuple(spec, entries)
    assert phi.canonical
    return phi


def decompose_from_phi(
    spec: MonomialSpec, phi: PhiTuple, tol: float = 1e-8, seed: int = 0
) -> Decomposition:
    """Radicality check, point extraction, coefficient fit, numeric verification.

    Raises NonRadicalIdealError unless I(n, phi) cuts out the full set of
    reduced points, and refuses to return anything whose expansion misses the
    monomial by more than ``tol`` in any coefficient.
    """
    if len(phi) != spec.n:
        raise ValueError("need a complete phi tuple")
    if any(not p for p in phi.entries):
        raise NonRadicalIdealError(f"I(n, phi) is not radical for phi = {phi}")
    q = build_quotient(spec, phi)
    if trace_form_rank(q) != q.dim:
        raise NonRadicalIdealError(f"I(n, phi) is not radical for phi = {phi}")
    points = extract_points(q, tol=tol, seed=seed)
    coeffs = fit_coefficients(spec, points)
    summands = tuple(
        (c, spec.form_to_original(p)) for c, p in zip(coeffs, points.points)
    )
    dec = Decomposition(degree=spec.degree, domain=COMPLEX_FLOAT, summands=summands)
    report = verify_decomposition(spec, dec, tol=tol)
    if not report.ok:
        raise NonRadicalIdealError(
            f"decomposition failed numeric verification (error {report.max_error:.3e})"
        )
    dec.verified = "numeric"
    dec.residual = report.max_error
    return dec


def fit_phi_from_points(spec: MonomialSpec, points) -> PhiTuple:
    """Recover the canonical phi from a point set.

    For each i the generator a_i^(d_i+1) - phi_i * a0^(d0+1) must vanish on
    every point; with a0 normalized to 1 that reads phi_i(p) = p_i^(d_i+1),
    a linear system for the coefficients of phi_i over the no-term-in-J basis.
    """
    coords_list = list(points.points if isinstance(points, PointSet) else points)
    if len(coords_list) != spec.rank:
        raise ValueError(f"expected {spec.rank} points, got {len(coords_list)}")
    if any(not p[0] for p in coords_list):
        raise ValueError("points must have nonzero a0 coordinate")
    exact = all(_is_exact_scalar(c) for p in coords_list for c in p)
    if exact:
        coords_list = [
            tuple(Fraction(c) if isinstance(c, int) else c for c in p) for p in coords_list
        ]
    coords_list = [tuple(c / p[0] for c in p) for p in coords_list]
    entries = []
    for i in range(1, spec.n + 1):
        basis = basis_Bprime(spec, i)
        rows = []
        rhs = []
        for p in coords_list:
            row = []
            for e in basis:
                v = 1
                for k, ek in enumerate(e):
                    if ek:
                        v = v * p[k] ** ek
                row.append(v)
            rows.append(row)
            rhs.append(p[i] ** (spec.exponents[i] + 1))
        if exact:
            try:
                solution = exact_solve(rows, rhs)
            except RankDeficientSystem:
                raise ValueError("phi fit is not unique; degenerate point configuration") from None
            except InconsistentSystem:
                raise ValueError("no phi fits these points; not a power-sum configuration") from None
        else:
            a = np.array(rows, dtype=complex)
            b = np.array(rhs, dtype=complex)
            if float_rank(a) < len(basis):
                raise ValueError("phi fit is not unique; degenerate point configuration")
            solution, residual = lstsq_solve(a, b)
            if residual > 1e-6:
                raise ValueError(
                    f"no phi fits these points (residual {residual:.3e}); "
                    "not a power-sum configuration"
                )
        poly = SparsePoly.zero(spec.n + 1, DUAL)
        for e, c in zip(basis, solution):
            poly = poly + SparsePoly.monomial(spec.n + 1, DUAL, e, c if exact else complex(c))
        entries.append(poly)
    phi = PhiTuple(spec, entries)
    assert phi.canonical
    return phi


def _evaluation_matrix(points, t: int, restrict_alpha0: bool = False):
    """Evaluation of the degree-t monomials at the points; optionally only the
    monomials divisible by a0.  Returns (rows, num_columns, exact_flag)."""
    coords_list = list(points.points if isinstance(points, PointSet) else points)
    if not coords_list:
        raise ValueError("empty point set")
    num_vars = len(coords_list[0])
    exponents = [
        e for e in exponents_of_degree(num_vars, t) if not restrict_alpha0 or e[0] >= 1
    ]
    exact = all(_is_exact_scalar(c) for p in coords_list for c in p)
    rows = []
    for p in coords_list:
        row = []
        for e in exponents:
            v = 1
            for k, ek in enumerate(e):
                if ek:
                    v = v * p[k] ** ek
            row.append(v)
        rows.append(row)
    return rows, len(exponents), exact


def point_ideal_hilbert(points, t: int, cutoff: float = 1e-8) -> int:
    """Hilbert function of the point ideal: dim (S/I)_t = rank of the evaluation matrix."""
    if t < 0:
        return 0
    rows, _, exact = _evaluation_matrix(points, t)
    if exact:
        return exact_rank(rows)
    return float_rank(np.array(rows, dtype=complex), cutoff=cutoff)


def q_t_diagnostic(spec: MonomialSpec, points, t: int, cutoff: float = 1e-8) -> int:
    """dim of I_t intersected with a0 * S_{t-1}.

    A degree-t polynomial divisible by a0 is exactly one supported on the
    a0-divisible monomials, so the intersection is the kernel of the
    evaluation matrix restricted to those columns.
    """
    if t <= 0:
        return 0
    coords_list = list(points.points if isinstance(points, PointSet) else points)
    if coords_list and len(coords_list[0]) != spec.n + 1:
        raise ValueError("points do not match the spec's variable count")
    rows, ncols, exact = _evaluation_matrix(points, t, restrict_alpha0=True)
    if exact:
        rank = exact_rank(rows)
    else:
        rank = float_rank(np.array(rows, dtype=complex), cutoff=cutoff)
    return ncols - rank


def dim_point_ideal(points, t: int, cutoff: float = 1e-8) -> int:
    """dim I_t for the point ideal: codimension of the evaluation rank in S_t."""
    if t < 0:
        return 0
    coords_list = list(points.points if isinstance(points, PointSet) else points)
    num_vars = len(coords_list[0])
    return comb(t + num_vars - 1, num_vars - 1) - point_ideal_hilbert(points, t, cutoff)


@dataclass(frozen=True)
class TorusElement:
    """A variable rescaling (l_0, ..., l_n) with prod l_i^(d_i) = 1."""

    lam: tuple[complex, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.lam) != len(self.exponents):
            raise ValueError("scaling vector length must match the exponent tuple")
        if any(not v for v in self.lam):
            raise ValueError("torus elements have nonzero entries")
        check = prod(v ** d for v, d in zip(self.lam, self.exponents))
        if abs(check - 1) > 1e-10:
            raise ValueError(f"not a torus element: prod lambda_i^d_i = {check}")


def apply_torus(torus: TorusElement, points) -> PointSet:
    """Coordinatewise action on points, renormalized back to the a0 = 1 chart."""
    coords_list = list(points.points if isinstance(points, PointSet) else points)
    out = []
    for p in coords_list:
        scaled = [complex(l) * complex(c) for l, c in zip(torus.lam, p)]
        out.append(tuple(c / scaled[0] for c in scaled))
    return PointSet(points=tuple(out), multiplicity_free=True,
                    raw_alpha0=tuple(p[0] for p in out))


def torus_normalize(spec: MonomialSpec, phi: PhiTuple) -> tuple[TorusElement, PhiTuple]:
    """For equal exponents, the torus element carrying V(I(n, phi)) onto the
    canonical variety V(a_i^(k+1) - a0^(k+1)).

    The scalars phi_i must be nonzero (radicality).  Writing k for the common
    exponent, the ratios lambda_i / lambda_0 must be (k+1)-th roots of 1/phi_i;
    the principal branch is used, and a single global factor places the vector
    inside the torus.  The summed principal logarithms make the torus relation
    hold on the nose rather than up to a root of unity.
    """
    k = spec.exponents[0]
    if any(d != k for d in spec.exponents):
        raise ValueError("torus normalization applies to equal exponents only")
    if len(phi) != spec.n:
        raise ValueError("need a complete phi tuple")
    values = []
    for i, p in enumerate(phi.entries, start=1):
        if not p:
            raise NonRadicalIdealError(f"phi_{i} = 0: the ideal is not radical")
        if p.degree() != 0:
            raise ValueError("equal exponents force scalar phi entries")
        values.append(complex(next(iter(p.terms.values()))))
    n = spec.n
    logs = [cmath.log(v) for v in values]
    # lambda_i = c * exp(-log(phi_i)/(k+1)), with c balancing prod lambda^k = 1
    c = cmath.exp(sum(logs) / ((n + 1) * (k + 1)))
    lam = (c,) + tuple(c * cmath.exp(-logs[i] / (k + 1)) for i in range(n))
    torus = TorusElement(lam=lam, exponents=spec.exponents)
    ones = PhiTuple(spec, [SparsePoly.constant(n + 1, DUAL, Fraction(1)) for _ in range(n)])
    return torus, ones


def check_alpha0_nonzero(points, tol: float = 1e-8) -> bool:
    """Every point keeps its a0 coordinate away from zero.

    Exact coordinates are tested exactly; floating data compares the
    pre-normalization a0 against the point's scale.
    """
    coords_list = list(points.points if isinstance(points, PointSet) else points)
    raw = points.raw_alpha0 if isinstance(points, PointSet) and points.raw_alpha0 else None
    scales = points.raw_scale if isinstance(points, PointSet) and points.raw_scale else None
    for j, p in enumerate(coords_list):
        lead = raw[j] if raw else p[0]
        if _is_exact_scalar(lead):
            if not lead:
                return False
        else:
            scale = scales[j] if scales else max(abs(complex(c)) for c in p)
            if abs(complex(lead)) <= tol * scale:
                return False
    return True


@dataclass
class SampleReport:
    """One seeded sample: the phi drawn, its radicality, and verification data."""

    seed: int
    phi: PhiTuple
    radical: bool
    verified: bool
    residual: float | None


def sample_decompositions(
    spec: MonomialSpec, seed: int, count: int, tol: float = 1e-8
) -> list[SampleReport]:
    """Run the sampling pipeline for seeds seed, seed+1, ..., seed+count-1."""
    space = parameter_space(spec)
    reports = []
    for s in range(seed, seed + count):
        phi = sample_phi(space, s)
        radical = is_radical(spec, phi)
        verified = False
        residual = None
        if radical:
            dec = decompose_from_phi(spec, phi, tol=tol, seed=s)
            verified = dec.verified == "numeric"
            residual = dec.residual
        reports.append(SampleReport(seed=s, phi=phi, radical=radical,
                                    verified=verified, residual=residual))
    return reports
