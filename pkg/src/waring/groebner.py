"""Buchberger's algorithm and normal forms in graded reverse lexicographic order.

Used for exact homogeneous ideal membership; the generators of a decomposition
ideal do not have coprime leading terms in the homogeneous ring, so a genuine
completion is required there (unlike the affine chart, where the dehomogenized
generators are already a reduction basis).
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Exponent, SparsePoly, grevlex_key


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _exactify(p: SparsePoly) -> SparsePoly:
    """Promote integer coefficients to Fractions so division never hits floats."""
    if any(isinstance(c, int) for c in p.terms.values()):
        return p.map_coefficients(lambda c: Fraction(c) if isinstance(c, int) else c)
    return p


def _monic(p: SparsePoly) -> SparsePoly:
    _, c = p.leading_term()
    one = c / c
    return p if c == one else p.scale(one / c)


def normal_form(poly: SparsePoly, basis: list[SparsePoly]) -> SparsePoly:
    """Fully reduce a polynomial: no remaining term is divisible by any leading term."""
    leads = [g.leading_term() for g in basis]
    tail = SparsePoly.zero(poly.num_vars, poly.ring)
    work = poly
    while work:
        e, c = work.leading_term()
        hit = next(
            (idx for idx, (le, _) in enumerate(leads) if _divides(le, e)), None
        )
        if hit is None:
            mono = SparsePoly.monomial(work.num_vars, work.ring, e, c)
            tail = tail + mono
            work = work - mono
            continue
        le, lc = leads[hit]
        shift = tuple(a - b for a, b in zip(e, le))
        work = work - basis[hit] * SparsePoly.monomial(work.num_vars, work.ring, shift, c / lc)
    return tail


def s_polynomial(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    ef, cf = f.leading_term()
    eg, cg = g.leading_term()
    lcm_e = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = SparsePoly.monomial(f.num_vars, f.ring, tuple(a - b for a, b in zip(lcm_e, ef)), 1)
    mg = SparsePoly.monomial(g.num_vars, g.ring, tuple(a - b for a, b in zip(lcm_e, eg)), 1)
    return f * mf.scale(1 / cf) - g * mg.scale(1 / cg)


def groebner_basis(generators, max_basis: int = 512) -> list[SparsePoly]:
    """A minimal reduced Groebner basis in grevlex order, by Buchberger's algorithm.

    Pairs with coprime leading terms are skipped (their S-polynomials always
    reduce to zero); ``max_basis`` is a safety cap for malformed input.
    """
    basis = [_monic(_exactify(g)) for g in generators if g]
    if not basis:
        return []
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (
                grevlex_key(
                    tuple(
                        max(a, b)
                        for a, b in zip(
                            basis[p[0]].leading_term()[0], basis[p[1]].leading_term()[0]
                        )
                    )
                ),
                p,
            ),
        )
        pairs.remove((i, j))
        ei = basis[i].leading_term()[0]
        ej = basis[j].leading_term()[0]
        if all(a == 0 or b == 0 for a, b in zip(ei, ej)):
            continue  # coprime leading terms: S-polynomial reduces to zero
        remainder = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if remainder:
            basis.append(_monic(remainder))
            if len(basis) > max_basis:
                raise RuntimeError("Groebner basis exceeded the size cap")
            pairs.update((k, len(basis) - 1) for k in range(len(basis) - 1))
    # minimalize: processing by ascending leading term, drop any generator whose
    # leading term is divisible by one already kept
    minimal = []
    for g in sorted(basis, key=lambda p: grevlex_key(p.leading_term()[0])):
        e = g.leading_term()[0]
        if not any(_divides(h.leading_term()[0], e) for h in minimal):
            minimal.append(g)
    # inter-reduce for a canonical (reduced) basis
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        reduced.append(_monic(normal_form(g, others)) if others else g)
    return reduced


def in_ideal(poly: SparsePoly, basis: list[SparsePoly]) -> bool:
    """Membership test against a precomputed Groebner basis."""
    return not normal_form(_exactify(poly), basis)
