"""Zero-dimensional solving of the decomposition ideals I(n, phi).

In the affine chart a0 = 1 the dehomogenized generators g_i = a_i^(d_i+1) - psi_i
have pairwise coprime leading monomials, so they already form a reduction basis:
normal forms are supported on the r = (d1+1)*...*(dn+1) standard monomials
a^e with e_i <= d_i.  From the multiplication matrices on that basis we get

* an exact radicality certificate (the rank of the trace bilinear form equals
  the number of distinct points of the scheme),
* the points themselves via a floating-point eigendecomposition of a random
  linear combination of the multiplication matrices, and
* the summand coefficients of the decomposition by linear solving.

Homogeneous ideal membership runs an actual Buchberger completion, since the
homogeneous generators need not have coprime leading terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .cyclotomic import CycloScalar
from .groebner import groebner_basis, in_ideal
from .ideals import CIIdeal, PhiTuple
from .linalg import exact_rank, exact_solve, float_rank, lstsq_solve
from .monomials import MonomialSpec
from .polynomial import (
    Exponent,
    SparsePoly,
    dehomogenize,
    exponents_of_degree,
    grevlex_key,
    multinomial,
)


class NonRadicalIdealError(ValueError):
    """Raised when an operation requires a radical ideal and the input is not."""


class PointExtractionError(RuntimeError):
    """Eigenvector clustering or conditioning failed during point extraction."""


def _is_exact_scalar(c) -> bool:
    return isinstance(c, (int, Fraction, CycloScalar))


@dataclass
class QuotientAlgebra:
    """S/I(n, phi) in the chart a0 = 1, with its multiplication matrices.

    ``basis`` lists the standard monomials (exponent tuples over the full
    sorted frame, first entry always 0); ``columns[i-1][b]`` holds the normal
    form of a_i * basis[b] as sparse (row, coeff) pairs.
    """

    spec: MonomialSpec
    phi: PhiTuple
    basis: tuple[Exponent, ...]
    index: dict[Exponent, int]
    columns: tuple[tuple[tuple[tuple[int, object], ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_exact(self) -> bool:
        return all(
            _is_exact_scalar(c) for cols in self.columns for col in cols for _, c in col
        )

    def apply(self, var: int, vec: list) -> list:
        """Multiply a coefficient vector by a_var (1-based variable index)."""
        out = [0] * self.dim
        for col_idx, v in enumerate(vec):
            if v:
                for row, c in self.columns[var - 1][col_idx]:
                    out[row] = out[row] + c * v
        return out

    def dense_matrix(self, var: int) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=complex)
        for col_idx, col in enumerate(self.columns[var - 1]):
            for row, c in col:
                m[row, col_idx] = complex(c)
        return m


def build_quotient(spec: MonomialSpec, phi: PhiTuple) -> QuotientAlgebra:
    """Dehomogenize the generators at a0 = 1 and build the multiplication matrices.

    The reduction a_i^(d_i+1) -> psi_i strictly drops degree (deg psi_i <= d_i - d0),
    so normal forms terminate; pairwise commutation of the resulting matrices
    is asserted, failure would mean a reduction bug.
    """
    n = spec.n
    if len(phi) != n:
        raise ValueError("build_quotient needs a complete phi tuple (k = n)")
    psi = [dehomogenize(p, 0) if p else p for p in phi.entries]
    bounds = spec.exponents

    basis = sorted(
        (
            (0,) + e
            for e in product(*(range(bounds[i] + 1) for i in range(1, n + 1)))
        ),
        key=grevlex_key,
    )
    index = {e: i for i, e in enumerate(basis)}

    def reduce_terms(terms: dict[Exponent, object]) -> dict[int, object]:
        out: dict[int, object] = {}
        work = dict(terms)
        while work:
            e, c = work.popitem()
            over = next((i for i in range(1, n + 1) if e[i] > bounds[i]), None)
            if over is None:
                idx = index[e]
                s = out.get(idx, 0) + c
                if s:
                    out[idx] = s
                else:
                    out.pop(idx, None)
                continue
            rest = tuple(
                ei - (bounds[over] + 1) if i == over else ei for i, ei in enumerate(e)
            )
            for pe, pc in psi[over - 1].terms.items():
                ne = tuple(a + b for a, b in zip(rest, pe))
                s = work.get(ne, 0) + c * pc
                if s:
                    work[ne] = s
                else:
                    work.pop(ne, None)
        return out

    columns = []
    for i in range(1, n + 1):
        cols_i = []
        for e in basis:
            lifted = tuple(ei + 1 if j == i else ei for j, ei in enumerate(e))
            if lifted in index:
                cols_i.append(((index[lifted], 1),))
            else:
                reduced = reduce_terms({lifted: 1})
                cols_i.append(tuple(sorted(reduced.items())))
        columns.append(tuple(cols_i))

    algebra = QuotientAlgebra(spec=spec, phi=phi, basis=tuple(basis), index=index,
                              columns=tuple(columns))
    _assert_commuting(algebra)
    return algebra


def _assert_commuting(q: QuotientAlgebra):
    r = q.dim
    for i in range(1, q.spec.n + 1):
        for j in range(i + 1, q.spec.n + 1):
            for b in range(r):
                unit = [0] * r
                unit[b] = 1
                ij = q.apply(i, q.apply(j, unit))
                ji = q.apply(j, q.apply(i, unit))
                if any(x - y for x, y in zip(ij, ji)):
                    raise AssertionError(
                        f"multiplication matrices {i} and {j} do not commute"
                    )


def _normal_form_grid(q: QuotientAlgebra) -> dict[Exponent, list]:
    """Normal forms of every monomial with exponents up to 2*d_i, by dynamic programming."""
    n = q.spec.n
    bounds = q.spec.exponents
    grid_exponents = sorted(
        ((0,) + e for e in product(*(range(2 * bounds[i] + 1) for i in range(1, n + 1)))),
        key=lambda e: (sum(e), e),
    )
    table: dict[Exponent, list] = {}
    for e in grid_exponents:
        if sum(e) == 0:
            unit = [0] * q.dim
            unit[q.index[e]] = 1
            table[e] = unit
            continue
        i = next(idx for idx in range(1, n + 1) if e[idx] > 0)
        prev = tuple(ei - 1 if idx == i else ei for idx, ei in enumerate(e))
        table[e] = q.apply(i, table[prev])
    return table


def trace_form_rank(q: QuotientAlgebra) -> int:
    """Exact rank of the trace bilinear form; equals the number of distinct points.

    Entry (a, b) is the trace of multiplication by basis[a] * basis[b]; traces
    of basis multiplications are read off a shared normal-form table, so no
    full product matrices are materialized.  Floating-point coefficient
    domains are refused: this is a certificate, not an estimate.
    """
    if not q.is_exact():
        raise TypeError("trace form requires an exact coefficient domain")
    r = q.dim
    table = _normal_form_grid(q)
    traces = []
    for c in q.basis:
        traces.append(
            sum(table[tuple(x + y for x, y in zip(c, a))][idx] for idx, a in enumerate(q.basis))
        )
    matrix = []
    for a in q.basis:
        row = []
        for b in q.basis:
            v = table[tuple(x + y for x, y in zip(a, b))]
            row.append(sum(t * vi for t, vi in zip(traces, v) if vi))
        matrix.append(row)
    return exact_rank(matrix)


def is_radical(spec: MonomialSpec, phi: PhiTuple) -> bool:
    """True when I(n, phi) cuts out r distinct reduced points.

    A zero entry in phi forces a_i^(d_i+1) into the ideal, which already rules
    out reducedness, so that case short-circuits without building the algebra.
    """
    if len(phi) != spec.n:
        raise ValueError("radicality is decided for complete tuples only")
    if any(not p for p in phi.entries):
        return False
    q = build_quotient(spec, phi)
    return trace_form_rank(q) == q.dim


def ideal_membership(poly: SparsePoly, ideal: CIIdeal) -> bool:
    """Exact homogeneous membership test via Buchberger completion plus reduction."""
    if not poly.is_homogeneous():
        raise ValueError("membership test expects a homogeneous polynomial")
    basis = getattr(ideal, "_groebner", None)
    if basis is None:
        basis = groebner_basis(ideal.generators)
        ideal._groebner = basis
    return in_ideal(poly, basis)


@dataclass
class PointSet:
    """Projective points, normalized to a0 = 1 whenever the chart allows.

    ``raw_alpha0`` keeps the pre-normalization a0 data (the coordinate of the
    constant basis monomial in each unit-norm eigenvector, for extracted
    points), so the no-point-at-infinity check has something to look at.
    ``residuals`` reports, per point, the worst relative error on a generator.
    """

    points: tuple[tuple, ...]
    multiplicity_free: bool
    tol: float | None = None
    residuals: tuple[float, ...] | None = None
    raw_alpha0: tuple | None = None
    raw_scale: tuple[float, ...] | None = None

    def __len__(self) -> int:
        return len(self.points)

    def is_exact(self) -> bool:
        return all(_is_exact_scalar(c) for p in self.points for c in p)


def points_from_decomposition(dec, spec: MonomialSpec) -> PointSet:
    """The point set of a decomposition's forms, rescaled to a0 = 1, sorted frame."""
    pts = []
    for _, form in dec.summands:
        sorted_coords = tuple(form.coeffs[spec.positions[i]] for i in range(spec.n + 1))
        lead = sorted_coords[0]
        if not lead:
            raise ValueError("form has zero a0 coordinate; cannot normalize")
        pts.append(tuple(c / lead for c in sorted_coords))
    return PointSet(
        points=tuple(pts),
        multiplicity_free=True,
        raw_alpha0=tuple(form.coeffs[spec.positions[0]] for _, form in dec.summands),
    )


def extract_points(
    q: QuotientAlgebra,
    tol: float = 1e-8,
    seed: int = 0,
    expect_radical: bool = True,
) -> PointSet:
    """Eigenvalue method: read the points off the eigenvectors of a random combination.

    A seeded random real combination M of the multiplication matrices is
    eigendecomposed; each left eigenvector is (up to scale) the evaluation
    vector of the basis monomials at one point, so after normalizing the
    constant coordinate to 1 the degree-one coordinates are the point itself.
    Points closer than ``tol`` are clustered; with ``expect_radical`` the call
    must produce exactly dim-many separated points or it raises.
    """
    spec = q.spec
    n = spec.n
    r = q.dim
    if n == 0:
        return PointSet(points=((1.0 + 0j,),), multiplicity_free=True, tol=tol,
                        residuals=(0.0,), raw_alpha0=(1.0,), raw_scale=(1.0,))
    rng = np.random.default_rng(seed)
    weights = rng.uniform(0.5, 1.5, size=n)
    m = sum(weights[i - 1] * q.dense_matrix(i) for i in range(1, n + 1))
    _, vectors = np.linalg.eig(m.T)

    one_idx = q.index[(0,) * (n + 1)]
    var_idx = [q.index[tuple(1 if j == i else 0 for j in range(n + 1))] for i in range(1, n + 1)]
    raw_points = []
    raw_alpha0 = []
    raw_scale = []
    for col in range(vectors.shape[1]):
        v = vectors[:, col]
        v = v / np.linalg.norm(v)
        lead = v[one_idx]
        window = np.concatenate(([v[one_idx]], v[var_idx]))
        scale = float(np.linalg.norm(window))
        if abs(lead) < 1e-12 * scale:
            if expect_radical:
                raise PointExtractionError(
                    "eigenvector has vanishing constant coordinate; "
                    "the combination matrix looks non-diagonalizable"
                )
            continue
        raw_points.append(tuple(complex(v[k] / lead) for k in var_idx))
        raw_alpha0.append(complex(lead))
        raw_scale.append(scale)

    clusters: list[list[int]] = []
    for idx, p in enumerate(raw_points):
        for cluster in clusters:
            rep = raw_points[cluster[0]]
            if max(abs(a - b) for a, b in zip(p, rep)) < tol:
                cluster.append(idx)
                break
        else:
            clusters.append([idx])

    points = []
    alpha0 = []
    scales = []
    for cluster in clusters:
        members = [raw_points[i] for i in cluster]
        points.append((1.0 + 0j,) + tuple(sum(pt[k] for pt in members) / len(members)
                                          for k in range(n)))
        alpha0.append(raw_alpha0[cluster[0]])
        scales.append(raw_scale[cluster[0]])

    order = sorted(
        range(len(points)),
        key=lambda i: tuple((round(c.real, 9), round(c.imag, 9)) for c in points[i]),
    )
    points = [points[i] for i in order]
    alpha0 = [alpha0[i] for i in order]
    scales = [scales[i] for i in order]

    multiplicity_free = len(points) == r
    if expect_radical and not multiplicity_free:
        raise PointExtractionError(
            f"expected {r} separated points, found {len(points)} clusters at tol={tol}"
        )

    psi = [
        dehomogenize(p, 0).map_coefficients(complex) if p else p for p in q.phi.entries
    ]
    residuals = []
    for p in points:
        worst = 0.0
        top = max(abs(c) for c in p)
        for i in range(1, n + 1):
            d = spec.exponents[i]
            lhs = p[i] ** (d + 1)
            rhs = psi[i - 1].evaluate(p) if psi[i - 1] else 0j
            worst = max(worst, abs(lhs - rhs) / max(1.0, top ** (d + 1)))
        residuals.append(worst)

    return PointSet(
        points=tuple(points),
        multiplicity_free=multiplicity_free,
        tol=tol,
        residuals=tuple(residuals),
        raw_alpha0=tuple(alpha0),
        raw_scale=tuple(scales),
    )


def _point_rows(spec: MonomialSpec, coords_list) -> tuple[list[Exponent], list[list]]:
    """Rows of the power-expansion system: one row per degree-d exponent."""
    d = spec.degree
    n = spec.n
    exponents = exponents_of_degree(n + 1, d)
    rows = []
    for e in exponents:
        scale = multinomial(d, e)
        row = []
        for coords in coords_list:
            v = scale
            for i, ei in enumerate(e):
                if ei:
                    v = v * coords[i] ** ei
            row.append(v)
        rows.append(row)
    return exponents, rows


def fit_coefficients(spec: MonomialSpec, points, tol: float = 1e-6):
    """Solve sum_j c_j * (l_j)^d = monomial for the coefficients c_j.

    ``points`` may be a PointSet or a plain sequence of coordinate tuples (the
    latter allows unnormalized forms).  Exact coordinates get an exact solve;
    floats go through least squares with rank and residual checks.  The system
    is consistent with a unique solution exactly when the points are a genuine
    power-sum configuration for the monomial.
    """
    coords_list = list(points.points if isinstance(points, PointSet) else points)
    if len(coords_list) != spec.rank:
        raise ValueError(f"expected {spec.rank} points, got {len(coords_list)}")
    exponents, rows = _point_rows(spec, coords_list)
    target = [1 if e == spec.exponents else 0 for e in exponents]
    exact = all(_is_exact_scalar(c) for coords in coords_list for c in coords)
    if exact:
        return exact_solve(rows, target)
    a = np.array(rows, dtype=complex)
    b = np.array(target, dtype=complex)
    if float_rank(a) < spec.rank:
        raise NonRadicalIdealError("power-expansion system is rank deficient")
    x, residual = lstsq_solve(a, b)
    if residual > tol:
        raise NonRadicalIdealError(
            f"power-expansion system is inconsistent (residual {residual:.3e}); "
            "the points are not a power-sum configuration for this monomial"
        )
    return [complex(c) for c in x]
