"""Command-line interface.

Subcommands: rootsys, symmetric, hull, mincover, tropical, verify.
Exit codes: 0 success / all verifications pass, 1 refuted verification,
2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q

from . import claims, cover, polytopes as poly, rational as rat, rootsystems as rsys, tropical
from .constructions import SymmetricSpec, seed_vertex, symmetric_alcoved, symmetric_generators
from .errors import AlcoveError


class InputError(Exception):
    pass


def _parse_type(type_arg: str, rank_arg: int | None) -> tuple[str, int]:
    t = type_arg.strip().upper()
    if len(t) > 1 and t[1:].isdigit():
        return t[0], int(t[1:])
    if rank_arg is None:
        raise InputError(f"type {type_arg!r} needs --rank")
    return t, rank_arg


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_points(path: str) -> list[tuple]:
    data = _load_json(path)
    if not isinstance(data, list) or not data:
        raise InputError(f"{path}: expected a nonempty JSON array of points")
    try:
        return [rat.vector(p) for p in data]
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: bad point entry ({exc})") from None


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_rootsys(args) -> int:
    fam, rank = _parse_type(args.type, args.rank)
    rs = rsys.build_root_system(fam, rank)
    h = rsys.coxeter_number(rs)
    payload = rsys.to_json(rs)
    payload["coxeter_number"] = h
    payload["theta_roots"] = [[rat.format_q(v) for v in t] for t in rsys.theta_roots(rs)]
    if not args.full:
        payload.pop("roots")
    lines = [f"{rs.name}: {len(rs.roots)} roots in R^{rs.ambient_dim}, "
             f"Coxeter number {h}",
             "basis: " + "; ".join(",".join(rat.format_q(v) for v in b) for b in rs.basis)]
    if args.full:
        lines += ["roots:"] + ["  " + ",".join(rat.format_q(v) for v in r) for r in rs.roots]
    _emit(payload, args.json, lines)
    return 0


def _cmd_symmetric(args) -> int:
    fam, rank = _parse_type(args.type, args.rank)
    rs = rsys.build_root_system(fam, rank)
    lam = Q(args.lam)
    mu = Q(args.mu) if args.mu is not None else None
    spec = SymmetricSpec(rs, lam, mu)
    P = symmetric_alcoved(spec)
    payload = poly.hpolytope_to_json(P)
    lines = [f"P_({rat.format_q(lam)}{'' if mu is None else ',' + rat.format_q(mu)}) "
             f"of {rs.name}: {len(P.constraints)} constraints"]
    if args.seed or args.generators:
        seeds = seed_vertex(spec)
        payload["seed_points"] = [[rat.format_q(v) for v in p] for p in seeds]
        lines.append("seed: " + "; ".join(",".join(rat.format_q(v) for v in p) for p in seeds))
    if args.generators:
        gens = symmetric_generators(spec)
        payload["generators"] = [[rat.format_q(v) for v in p] for p in gens]
        payload["verified"] = True
        lines.append(f"generators: {len(gens)} points (verified generating set)")
        lines += ["  " + ",".join(rat.format_q(v) for v in p) for p in gens]
    _emit(payload, args.json, lines)
    return 0


def _cmd_hull(args) -> int:
    fam, rank = _parse_type(args.type, args.rank)
    rs = rsys.build_root_system(fam, rank)
    pts = _load_points(args.points)
    P = poly.alcoved_hull(pts, rs)
    payload = poly.hpolytope_to_json(P)
    lines = [f"alcoved hull over {rs.name}: {len(P.constraints)} constraints"]
    if args.vertices:
        V = poly.vertices(P)
        payload["vertices"] = poly.vpolytope_to_json(V)["vertices"]
        lines.append(f"vertices: {len(V.vertices)}")
    _emit(payload, args.json, lines)
    return 0


def _cmd_mincover(args) -> int:
    data = _load_json(args.polytope)
    try:
        P = poly.hpolytope_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad polytope file: {exc}") from None
    inst = cover.build_cover_instance(P)
    sol = cover.min_cover(inst, budget_cap=args.budget)
    verts = poly.vertices(P).vertices
    payload = sol.to_json()
    payload["chosen_vertices"] = [[rat.format_q(v) for v in verts[j]] for j in sol.chosen]
    lines = [f"universe {inst.n_universe} support hyperplanes, "
             f"{len(inst.candidate_masks)} candidate vertices",
             f"minimum cover: {sol.size} (optimal: {sol.optimal}, "
             f"lower bound: {sol.lower_bound})"]
    _emit(payload, args.json, lines)
    return 0


def _cmd_tropical(args) -> int:
    pts = _load_points(args.points)
    x = rat.vector(args.x.split(","))
    member = tropical.trop_hull_contains(pts, x)
    payload = {"point": [rat.format_q(v) for v in tropical.trop_normalize(x)],
               "in_tropical_hull": member}
    if args.compare_alcoved:
        rep = tropical.trop_hull_vs_alcoved(pts)
        payload["tropical_equals_alcoved"] = rep.equal
        payload["alcoved_vertices_outside"] = [
            [rat.format_q(v) for v in p] for p in rep.outside_vertices]
    lines = [f"in tropical hull: {member}"]
    if args.compare_alcoved:
        lines.append(f"tropical hull equals alcoved hull: {payload['tropical_equals_alcoved']}")
    _emit(payload, args.json, lines)
    return 0


def _cmd_verify(args) -> int:
    if args.claim:
        try:
            results = [claims.verify(args.claim, max_effort=args.max_effort)]
        except KeyError as exc:
            raise InputError(str(exc)) from None
    elif args.all:
        results = claims.run_all(max_effort=args.max_effort)
    else:
        raise InputError("pass --claim ID or --all")
    if args.no_timings:
        results = [claims.ClaimResult(r.id, r.status, r.detail, r.witness, 0)
                   for r in results]
    payload = {"claims": [r.to_json() for r in results]}
    lines = [f"{r.id:28s} {r.status:16s} {r.elapsed_ms:7d} ms"
             + (f"  witness: {r.witness}" if r.witness else "")
             for r in results]
    refuted = [r for r in results if r.status == claims.REFUTED]
    lines.append(f"{len(results)} claims: "
                 f"{sum(r.status == claims.VERIFIED for r in results)} verified, "
                 f"{len(refuted)} refuted, "
                 f"{sum(r.status in (claims.SKIPPED, claims.RESOURCE_CAPPED) for r in results)} capped/skipped")
    _emit(payload, args.json, lines)
    return 1 if refuted else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="alcove",
                                 description="Exact root-system and alcoved-polytope toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootsys", help="build and inspect a root system")
    p.add_argument("--type", required=True, help="family letter or name, e.g. D or D4")
    p.add_argument("--rank", type=int)
    p.add_argument("--full", action="store_true", help="include the full root list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rootsys)

    p = sub.add_parser("symmetric", help="build a Weyl-invariant polytope")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--lambda", dest="lam", required=True, help="long-root right-hand side")
    p.add_argument("--mu", help="short-root right-hand side (two-length families)")
    p.add_argument("--seed", action="store_true", help="emit the seed vertex")
    p.add_argument("--generators", action="store_true",
                   help="emit the verified Coxeter-orbit generating set")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_symmetric)

    p = sub.add_parser("hull", help="alcoved hull of a point set")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--points", required=True, help="JSON file: array of coordinate arrays")
    p.add_argument("--vertices", action="store_true", help="also enumerate vertices")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hull)

    p = sub.add_parser("mincover", help="exact minimum generating set of a polytope")
    p.add_argument("--polytope", required=True, help="JSON H-representation file")
    p.add_argument("--budget", type=int, help="node budget for branch and bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mincover)

    p = sub.add_parser("tropical", help="tropical hull membership")
    p.add_argument("--points", required=True, help="JSON file of generators")
    p.add_argument("--x", required=True, help="comma-separated coordinates")
    p.add_argument("--compare-alcoved", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_tropical)

    p = sub.add_parser("verify", help="run claim verifiers")
    p.add_argument("--claim", help="single claim id")
    p.add_argument("--all", action="store_true")
    p.add_argument("--max-effort", action="store_true",
                   help="lift resource caps (the E8 face count runs for hours)")
    p.add_argument("--no-timings", action="store_true",
                   help="zero out elapsed_ms for byte-identical reports")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AlcoveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
