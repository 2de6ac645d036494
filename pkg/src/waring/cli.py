"""Command-line front end.

Every subcommand takes a monomial ("x^2*y^2*z^3", "x0^2*x1^2*x2^3", or an
exponent list "2,2,3") and writes JSON by default (``--format text`` for a
human-readable rendering).  Exit codes: 0 on success, 1 on a mathematical
failure (for example a non-radical phi where a radical one is required), 2 on
usage or parse errors.  Randomized subcommands require a seed, either via
--seed or the WARING_SEED environment variable, and are reproducible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize
from .ideals import (
    PhiTuple,
    canonicalize_phi,
    dim_perp_cap_alpha0,
    dim_vsp,
    explicit_phi,
    hilbert_S_mod_J,
    make_ci_ideal,
)
from .linalg import LinearSolveError
from .monomials import (
    MonomialSpec,
    explicit_decomposition,
    multinomial_C,
    rank_lower_bound,
    verify_decomposition,
    waring_rank,
)
from .polynomial import DUAL, parse_poly
from .solver import (
    NonRadicalIdealError,
    PointExtractionError,
    build_quotient,
    extract_points,
    ideal_membership,
    is_radical,
    trace_form_rank,
)
from .vsp import (
    apply_torus,
    check_alpha0_nonzero,
    decompose_from_phi,
    dim_point_ideal,
    fit_phi_from_points,
    parameter_space,
    point_ideal_hilbert,
    q_t_diagnostic,
    sample_decompositions,
    sample_phi,
    torus_normalize,
)


class MathFailure(Exception):
    """A well-posed computation with a negative outcome that the command treats as failure."""


def _parse_spec(text: str) -> MonomialSpec:
    return MonomialSpec.parse(text)


def _parse_phi(spec: MonomialSpec, phi_args: list[str] | None) -> PhiTuple:
    if not phi_args:
        return explicit_phi(spec)
    if len(phi_args) != spec.n:
        raise ValueError(f"expected {spec.n} phi entries, got {len(phi_args)}")
    entries = [parse_poly(text, spec.n + 1, DUAL) for text in phi_args]
    return PhiTuple(spec, entries)


def _need_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("WARING_SEED")
    if env is not None:
        return int(env)
    raise SystemExit2("this command is randomized; pass --seed or set WARING_SEED")


class SystemExit2(Exception):
    """Usage error surfaced with exit code 2."""


def cmd_rank(args) -> dict:
    spec = _parse_spec(args.monomial)
    return {"monomial": str(spec), "rank": waring_rank(spec)}


def cmd_bounds(args) -> dict:
    spec = _parse_spec(args.monomial)
    return {
        "monomial": str(spec),
        "lower_bound": rank_lower_bound(spec),
        "rank": waring_rank(spec),
        "upper_bound": waring_rank(spec),
        "normalizing_constant": serialize.scalar_to_json(multinomial_C(spec)),
    }


def cmd_decompose(args) -> dict:
    spec = _parse_spec(args.monomial)
    if args.exact or (not args.phi and args.seed is None and "WARING_SEED" not in os.environ):
        dec = explicit_decomposition(spec)
        report = verify_decomposition(spec, dec)
        if not report.ok:
            raise MathFailure(f"exact decomposition failed verification: {report}")
        dec.verified = "exact"
    else:
        seed = _need_seed(args)
        if args.phi:
            phi = _parse_phi(spec, args.phi)
        else:
            phi = sample_phi(parameter_space(spec), seed)
        try:
            dec = decompose_from_phi(spec, phi, tol=args.tol, seed=seed)
        except (NonRadicalIdealError, PointExtractionError) as exc:
            raise MathFailure(str(exc)) from None
    out = serialize.decomposition_to_json(dec)
    out["monomial"] = str(spec)
    return out


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def cmd_verify(args) -> dict:
    spec = _parse_spec(args.monomial)
    data = _load_json(args.input)
    dec = serialize.decomposition_from_json(data)
    report = verify_decomposition(spec, dec, tol=args.tol)
    if not report.ok:
        raise MathFailure(str(report))
    return {
        "monomial": str(spec),
        "verified": report.mode,
        "max_error": report.max_error,
    }


def cmd_hilbert(args) -> dict:
    spec = _parse_spec(args.monomial)
    t_max = args.t_max if args.t_max is not None else spec.degree + 2
    table = {str(t): hilbert_S_mod_J(spec, t) for t in range(t_max + 1)}
    return {
        "monomial": str(spec),
        "hilbert_S_mod_J": table,
        "stable_value": spec.rank,
    }


def cmd_vsp_dim(args) -> dict:
    spec = _parse_spec(args.monomial)
    return {"monomial": str(spec), "dim_vsp": dim_vsp(spec)}


def cmd_ideal(args) -> dict:
    spec = _parse_spec(args.monomial)
    phi = _parse_phi(spec, args.phi)
    if args.canonicalize:
        phi = canonicalize_phi(spec, phi)
    ideal = make_ci_ideal(spec, phi)
    out = serialize.ci_ideal_to_json(ideal)
    if args.member:
        poly = parse_poly(args.member, spec.n + 1, DUAL)
        out["member"] = {"poly": str(poly), "in_ideal": ideal_membership(poly, ideal)}
    return out


def cmd_radical(args) -> dict:
    spec = _parse_spec(args.monomial)
    phi = _parse_phi(spec, args.phi)
    if any(not p for p in phi.entries):
        return {
            "monomial": str(spec),
            "phi": serialize.phi_to_json(phi),
            "radical": False,
            "trace_rank": None,
            "dimension": spec.rank,
            "note": "a zero phi entry forces a non-reduced point",
        }
    q = build_quotient(spec, phi)
    rank = trace_form_rank(q)
    return {
        "monomial": str(spec),
        "phi": serialize.phi_to_json(phi),
        "radical": rank == q.dim,
        "trace_rank": rank,
        "dimension": q.dim,
    }


def cmd_points(args) -> dict:
    spec = _parse_spec(args.monomial)
    phi = _parse_phi(spec, args.phi)
    seed = _need_seed(args)
    if not is_radical(spec, phi):
        raise MathFailure("the ideal is not radical; points would not be reduced")
    q = build_quotient(spec, phi)
    try:
        points = extract_points(q, tol=args.tol, seed=seed)
    except PointExtractionError as exc:
        raise MathFailure(str(exc)) from None
    out = serialize.pointset_to_json(points)
    out["monomial"] = str(spec)
    out["alpha0_nonzero"] = check_alpha0_nonzero(points)
    return out


def cmd_fit_phi(args) -> dict:
    spec = _parse_spec(args.monomial)
    data = _load_json(args.points)
    points = serialize.pointset_from_json(data)
    try:
        phi = fit_phi_from_points(spec, points)
    except (ValueError, LinearSolveError) as exc:
        raise MathFailure(str(exc)) from None
    return {"monomial": str(spec), "phi": serialize.phi_to_json(phi)}


def cmd_normalize(args) -> dict:
    spec = _parse_spec(args.monomial)
    phi = _parse_phi(spec, args.phi)
    try:
        torus, ones = torus_normalize(spec, phi)
    except (ValueError, NonRadicalIdealError) as exc:
        raise MathFailure(str(exc)) from None
    out = {
        "monomial": str(spec),
        "lambda": [serialize.scalar_to_json(v) for v in torus.lam],
        "phi_normalized": serialize.phi_to_json(ones),
    }
    if args.seed is not None or "WARING_SEED" in os.environ:
        seed = _need_seed(args)
        q = build_quotient(spec, phi)
        points = extract_points(q, tol=args.tol, seed=seed)
        moved = apply_torus(torus, points)
        k = spec.exponents[0]
        residual = max(
            abs(p[i] ** (k + 1) - 1) for p in moved.points for i in range(1, spec.n + 1)
        )
        out["canonical_residual"] = residual
    return out


def cmd_sample(args) -> dict:
    spec = _parse_spec(args.monomial)
    seed = _need_seed(args)
    reports = sample_decompositions(spec, seed, args.count, tol=args.tol)
    radical = sum(1 for r in reports if r.radical)
    return {
        "spec": serialize.spec_to_json(spec),
        "samples": [
            {
                "seed": r.seed,
                "phi": serialize.phi_to_json(r.phi),
                "radical": r.radical,
                "verified": r.verified,
                "residual": r.residual,
            }
            for r in reports
        ],
        "radical_fraction": radical / len(reports) if reports else 0.0,
    }


def cmd_diagnose(args) -> dict:
    spec = _parse_spec(args.monomial)
    if args.phi:
        phi = _parse_phi(spec, args.phi)
    elif args.seed is not None or "WARING_SEED" in os.environ:
        phi = sample_phi(parameter_space(spec), _need_seed(args))
    else:
        phi = explicit_phi(spec)
    if not is_radical(spec, phi):
        raise MathFailure("the ideal is not radical; diagnostics need reduced points")
    q = build_quotient(spec, phi)
    points = extract_points(q, tol=args.tol, seed=args.seed or 0)
    t_max = args.t_max if args.t_max is not None else spec.degree + 2
    rows = []
    for t in range(t_max + 1):
        h_model = hilbert_S_mod_J(spec, t)
        h_points = point_ideal_hilbert(points, t)
        rows.append(
            {
                "t": t,
                "hilbert_model": h_model,
                "hilbert_points": h_points,
                "agree": h_model == h_points,
                "dim_I_t": dim_point_ideal(points, t),
                "q_t": q_t_diagnostic(spec, points, t),
                "perp_cap_alpha0": dim_perp_cap_alpha0(spec, t),
            }
        )
    return {
        "monomial": str(spec),
        "phi": serialize.phi_to_json(phi),
        "table": rows,
        "all_agree": all(r["agree"] for r in rows),
    }


def _render_text(payload: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(_render_text(item, indent + 1))
                lines.append(pad + "  -")
            lines.pop()
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="waring",
        description="Exact Waring ranks and decompositions of monomials.",
    )
    parser.add_argument("--format", choices=["json", "text"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("monomial", help="monomial, e.g. \"x^2*y^2*z^3\" or \"2,2,3\"")
        p.set_defaults(fn=fn)
        return p

    add("rank", cmd_rank, help="Waring rank of the monomial")
    add("bounds", cmd_bounds, help="rank with its lower/upper bounds")

    p = add("decompose", cmd_decompose, help="compute a decomposition")
    p.add_argument("--exact", action="store_true", help="the explicit exact decomposition")
    p.add_argument("--phi", action="append", help="phi entry (repeat per entry)")
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, default=1e-8)

    p = add("verify", cmd_verify, help="verify a decomposition JSON file")
    p.add_argument("--input", required=True, help="decomposition JSON path or -")
    p.add_argument("--tol", type=float, default=1e-8)

    p = add("hilbert", cmd_hilbert, help="Hilbert function of the model quotient")
    p.add_argument("--t-max", type=int, dest="t_max")

    add("vsp-dim", cmd_vsp_dim, help="dimension of the space of decompositions")

    p = add("ideal", cmd_ideal, help="the complete intersection ideal of a phi tuple")
    p.add_argument("--phi", action="append")
    p.add_argument("--canonicalize", action="store_true")
    p.add_argument("--member", help="test a dual polynomial for membership")

    p = add("radical", cmd_radical, help="exact radicality certificate")
    p.add_argument("--phi", action="append")

    p = add("points", cmd_points, help="extract the decomposition points")
    p.add_argument("--phi", action="append")
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, default=1e-8)

    p = add("fit-phi", cmd_fit_phi, help="recover phi from a point-set JSON")
    p.add_argument("--points", required=True, help="point-set JSON path or -")

    p = add("normalize", cmd_normalize, help="torus normalization (equal exponents)")
    p.add_argument("--phi", action="append")
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, default=1e-8)

    p = add("sample", cmd_sample, help="sample random phi tuples and decompose")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-8)

    p = add("diagnose", cmd_diagnose, help="Hilbert-function and q_t diagnostics")
    p.add_argument("--phi", action="append")
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--t-max", type=int, dest="t_max")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.fn(args)
    except SystemExit2 as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (MathFailure, NonRadicalIdealError, PointExtractionError) as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True))
        return 1
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True))
        return 2
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(_render_text(payload))
    return 0


if __name__ == "__main__":
    sys.exit(main())
