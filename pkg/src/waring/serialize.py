"""JSON encoding and decoding for the package's value types.

Scalar records are polymorphic by shape: a rational value is the string "p/q"
(or "p" when the denominator is 1), an irrational cyclotomic value is
{"conductor": m, "coeffs": ["p/q", ...]}, and a float value is
{"re": ..., "im": ...}.  Polynomials are lists of {"exponent": [...],
"coeff": record} entries in descending grevlex order, which makes every
serialization byte-stable for equal inputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .cyclotomic import CycloScalar
from .ideals import CIIdeal, PhiTuple
from .monomials import Decomposition, MonomialSpec
from .polynomial import DUAL, LinearForm, SparsePoly
from .solver import PointSet


def scalar_to_json(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, CycloScalar):
        if value.is_rational():
            return str(value.to_fraction())
        return {
            "conductor": value.conductor,
            "coeffs": [str(c) for c in value.coeffs],
        }
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, float):
        return {"re": value, "im": 0.0}
    raise TypeError(f"cannot serialize scalar {value!r}")


def scalar_from_json(obj):
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, dict) and "conductor" in obj:
        coeffs = [Fraction(c) for c in obj["coeffs"]]
        den = 1
        for c in coeffs:
            den = lcm(den, c.denominator)
        return CycloScalar(obj["conductor"], tuple(int(c * den) for c in coeffs), den)
    if isinstance(obj, dict) and "re" in obj:
        return complex(obj["re"], obj.get("im", 0.0))
    raise ValueError(f"not a scalar record: {obj!r}")


def poly_to_json(poly: SparsePoly) -> list:
    return [
        {"exponent": list(e), "coeff": scalar_to_json(c)} for e, c in poly.sorted_terms()
    ]


def poly_from_json(data: list, num_vars: int, ring: str) -> SparsePoly:
    terms = {}
    for entry in data:
        terms[tuple(entry["exponent"])] = scalar_from_json(entry["coeff"])
    return SparsePoly(num_vars, ring, terms)


def spec_to_json(spec: MonomialSpec) -> dict:
    return {
        "monomial": str(spec),
        "original_exponents": list(spec.original_exponents),
        "sorted_exponents": list(spec.exponents),
        "degree": spec.degree,
        "rank": spec.rank,
        "conductor": spec.conductor,
    }


def decomposition_to_json(dec: Decomposition) -> dict:
    out = {
        "degree": dec.degree,
        "domain": dec.domain,
        "summands": [
            {
                "coeff": scalar_to_json(c),
                "form": [scalar_to_json(v) for v in form.coeffs],
            }
            for c, form in dec.summands
        ],
        "verified": dec.verified,
    }
    if dec.residual is not None:
        out["residual"] = dec.residual
    return out


def decomposition_from_json(data: dict) -> Decomposition:
    summands = tuple(
        (
            scalar_from_json(entry["coeff"]),
            LinearForm([scalar_from_json(v) for v in entry["form"]]),
        )
        for entry in data["summands"]
    )
    return Decomposition(
        degree=data["degree"],
        domain=data["domain"],
        summands=summands,
        verified=data.get("verified", "unverified"),
        residual=data.get("residual"),
    )


def phi_to_json(phi: PhiTuple) -> dict:
    return {
        "entries": [poly_to_json(p) for p in phi.entries],
        "canonical": phi.canonical,
    }


def phi_from_json(data, spec: MonomialSpec) -> PhiTuple:
    entries_data = data["entries"] if isinstance(data, dict) else data
    entries = [poly_from_json(p, spec.n + 1, DUAL) for p in entries_data]
    return PhiTuple(spec, entries)


def ci_ideal_to_json(ideal: CIIdeal) -> dict:
    return {
        "spec": spec_to_json(ideal.spec),
        "phi": phi_to_json(ideal.phi),
        "k": ideal.k,
        "generators": [str(g) for g in ideal.generators],
        "generators_json": [poly_to_json(g) for g in ideal.generators],
    }


def pointset_to_json(points: PointSet) -> dict:
    out = {
        "points": [[scalar_to_json(c) for c in p] for p in points.points],
        "normalized": "alpha0=1",
        "multiplicity_free": points.multiplicity_free,
    }
    if points.tol is not None:
        out["tol"] = points.tol
    if points.residuals is not None:
        out["residuals"] = list(points.residuals)
    return out


def pointset_from_json(data: dict) -> PointSet:
    return PointSet(
        points=tuple(tuple(scalar_from_json(c) for c in p) for p in data["points"]),
        multiplicity_free=data.get("multiplicity_free", True),
        tol=data.get("tol"),
        residuals=tuple(data["residuals"]) if "residuals" in data else None,
    )
