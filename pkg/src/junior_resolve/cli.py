"""Command-line front end.

    junior-resolve info     R W1 W2 W3 [--format text|json]
    junior-resolve sectors  R W1 W2 W3 [--format text|json]
    junior-resolve hilb     R W1 W2 W3 [--format json|tikz|text]
    junior-resolve quiver   R W1 W2 W3 [--format dot|text] [--ext]
    junior-resolve deform   R W1 W2 W3 [--hilb | --triangulation FILE]
                            [--format json|text] [--bound B]
    junior-resolve sweep    R W1 W2 W3 [--format json|text] [--cap N] [--bound B]
    junior-resolve verify   --rmax N [--shallow]

Exit status: 2 on invalid input, 1 when verify finds a violation, 0
otherwise.  All output is deterministic.  JUNIOR_RESOLVE_THREADS caps
the number of worker processes used by verify.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .checks import all_actions, run_checks
from .deformations import deformation_report, minimality_sweep
from .errors import JuniorResolveError
from .hj import corner_fan
from .orbifold import charge_matrix, junior_simplex, normalize_action
from .render import quiver_dot, simplex_text, triangulation_text, triangulation_tikz
from .singlets import (
    junior_sectors,
    singlet_count_pf,
    singlets_case1,
    singlets_case2,
)
from .triangulation import (
    ghilbert_triangulation,
    quiver_from_singlets,
    triangulation_from_dict,
    triangulation_to_dict,
)


def _parser():
    top = argparse.ArgumentParser(
        prog="junior-resolve",
        description="Crepant resolutions and tangent-sheaf deformation "
        "counts for cyclic Calabi-Yau orbifolds C^3/Z_r.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_action_args(p):
        p.add_argument("r", type=int, help="group order")
        p.add_argument("weights", type=int, nargs=3, metavar="W",
                       help="the three weights of the diagonal action")

    p = sub.add_parser("info", help="normalized action, points, charge matrix")
    add_action_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("sectors", help="twisted-sector and singlet tables")
    add_action_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("hilb", help="distinguished (G-Hilbert) triangulation")
    add_action_args(p)
    p.add_argument("--format", choices=("json", "tikz", "text"), default="json")

    p = sub.add_parser("quiver", help="singlet quiver or Ext-quiver")
    add_action_args(p)
    p.add_argument("--format", choices=("dot", "text"), default="dot")
    p.add_argument("--ext", action="store_true",
                   help="emit the Ext-quiver of the distinguished "
                   "triangulation instead of the singlet quiver")

    p = sub.add_parser("deform", help="deformation report for a triangulation")
    add_action_args(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--hilb", action="store_true", default=True,
                       help="use the distinguished triangulation (default)")
    group.add_argument("--triangulation", metavar="FILE",
                       help="read the triangulation from a JSON file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--bound", type=int, default=None,
                   help="exponent search box half-width (default 2r)")

    p = sub.add_parser("sweep", help="totals over every crepant triangulation")
    add_action_args(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--cap", type=int, default=None,
                   help="abort beyond this many triangulations")
    p.add_argument("--bound", type=int, default=None)

    p = sub.add_parser("verify", help="run the invariant suite over all "
                       "isolated Calabi-Yau actions up to --rmax")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--shallow", action="store_true",
                   help="skip the per-action three-route agreement check")

    return top


def _simplex(args):
    action = normalize_action(args.r, *args.weights)
    return junior_simplex(action)


def _cmd_info(args, out):
    simplex = _simplex(args)
    action = simplex.action
    if args.format == "json":
        data = {
            "schema": "1",
            "r": action.r,
            "weights": [1, action.a, action.b],
            "points": [
                {
                    "index": p.index,
                    "kind": p.kind,
                    "coords": list(p.coords3),
                    "nu_numerators": list(p.nu_num),
                }
                for p in simplex.points
            ],
            "charge_matrix": [
                [str(x) for x in row] for row in charge_matrix(simplex).rows
            ],
            "corner_fractions": {
                str(k): list(corner_fan(simplex, k).fraction.b)
                for k in (1, 2, 3)
            },
        }
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(simplex_text(simplex))
        phi = charge_matrix(simplex)
        for p, row in zip(simplex.interior, phi.rows):
            out.write(
                f"charge row u{p.index}: "
                + " ".join(str(x) for x in row)
                + "\n"
            )
        for k in (1, 2, 3):
            fan = corner_fan(simplex, k)
            rays = ", ".join(
                f"u{ray.point.index}:{ray.strength}" for ray in fan.rays
            )
            out.write(
                f"corner u{k}: {fan.fraction.r}/{fan.fraction.c} = "
                f"[[{','.join(map(str, fan.fraction.b))}]] rays {rays}\n"
            )
    return 0


def _cmd_sectors(args, out):
    simplex = _simplex(args)
    rows = []
    for sector in junior_sectors(simplex.action):
        point = simplex.by_sector[sector.j]
        case1 = {str(k): len(v) for k, v in singlets_case1(sector).items()}
        case2 = {
            f"{i}:{depth}": len(v)
            for (i, depth), v in sorted(singlets_case2(sector).items())
        }
        rows.append(
            {
                "sector": sector.j,
                "point": f"u{point.index}",
                "nu_numerators": list(sector.nu_num),
                "tilde_numerators": list(sector.tilde_num),
                "energy": str(sector.energy),
                "charge": str(sector.charge),
                "case1_by_corner": case1,
                "case2_by_node": case2,
                "pf_count": singlet_count_pf(sector),
            }
        )
    if args.format == "json":
        out.write(json.dumps({"schema": "1", "sectors": rows}, indent=2) + "\n")
    else:
        for row in rows:
            out.write(
                f"sector {row['sector']} ({row['point']}): "
                f"nu/{simplex.r}={tuple(row['nu_numerators'])} "
                f"E={row['energy']} q={row['charge']} "
                f"case1={row['case1_by_corner']} case2={row['case2_by_node']} "
                f"pf={row['pf_count']}\n"
            )
    return 0


def _cmd_hilb(args, out):
    simplex = _simplex(args)
    triang = ghilbert_triangulation(simplex)
    if args.format == "json":
        out.write(json.dumps(triangulation_to_dict(triang), indent=2) + "\n")
    elif args.format == "tikz":
        out.write(triangulation_tikz(triang))
    else:
        out.write(triangulation_text(triang))
    return 0


def _cmd_quiver(args, out):
    simplex = _simplex(args)
    if args.ext:
        report = deformation_report(ghilbert_triangulation(simplex))
        arrows = sorted(report.ext_quiver_arrows().items())
        name = "ext_quiver"
    else:
        arrows = quiver_from_singlets(simplex).arrows
        name = "singlet_quiver"
    if args.format == "dot":
        out.write(quiver_dot(simplex, arrows, name=name))
    else:
        for (src, dst), mult in arrows:
            out.write(f"u{src} -> u{dst} x{mult}\n")
    return 0


def _cmd_deform(args, out):
    simplex = _simplex(args)
    if args.triangulation:
        with open(args.triangulation) as fh:
            triang = triangulation_from_dict(json.load(fh))
        if triang.simplex.action != simplex.action:
            raise JuniorResolveError(
                "triangulation file is for a different action"
            )
    else:
        triang = ghilbert_triangulation(simplex)
    report = deformation_report(triang, bound=args.bound)
    if args.format == "json":
        data = {
            "schema": "1",
            "triangles": [list(t) for t in triang.triangles],
            "vertex_pairs": [
                {"pair": list(pair), "dim": dim}
                for pair, dim in report.vertex_pairs
            ],
            "interior_pairs": [
                {"pair": list(pair), "dim": dim}
                for pair, dim in report.interior_pairs
            ],
            "sectors": [
                {
                    "point": s.sector,
                    "case1": s.case1,
                    "case2": s.case2,
                    "vertex_dim_sum": s.vertex_dim_sum,
                }
                for s in report.sectors
            ],
            "vertex_total": report.vertex_total,
            "interior_total": report.interior_total,
            "grand_total": report.grand_total,
        }
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        for pair, dim in report.vertex_pairs:
            out.write(f"pair (u{pair[0]}, u{pair[1]}): dim {dim}\n")
        for pair, dim in report.interior_pairs:
            out.write(f"pair (u{pair[0]}, u{pair[1]}): dim {dim}\n")
        out.write(f"vertex total {report.vertex_total}\n")
        out.write(f"interior total {report.interior_total}\n")
        out.write(f"grand total {report.grand_total}\n")
    return 0


def _cmd_sweep(args, out):
    simplex = _simplex(args)
    result = minimality_sweep(simplex, cap=args.cap, bound=args.bound)
    if args.format == "json":
        data = {
            "schema": "1",
            "n_triangulations": result.n_triangulations,
            "minimum": result.minimum,
            "ghilbert_total": result.ghilbert_total,
            "singlet_total": result.singlet_total,
            "minimal_is_ghilbert": result.minimal_is_ghilbert,
            "totals": [
                {"grand_total": total, "triangles": [list(t) for t in tris]}
                for total, tris in result.totals
            ],
        }
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(
            f"{result.n_triangulations} triangulations, minimum "
            f"{result.minimum}, distinguished {result.ghilbert_total}, "
            f"singlets {result.singlet_total}\n"
        )
        for total, tris in result.totals:
            out.write(f"total {total}: {' '.join(map(str, tris))}\n")
    return 0


def _verify_one(params):
    r, a, b, deep = params
    from .orbifold import GroupAction

    return run_checks(GroupAction(r, a, b), deep=deep)


def _cmd_verify(args, out):
    actions = all_actions(args.rmax)
    deep = not args.shallow
    workers = int(os.environ.get("JUNIOR_RESOLVE_THREADS", "1") or 1)
    failures = []
    if workers > 1:
        params = [(act.r, act.a, act.b, deep) for act in actions]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(_verify_one, params):
                failures.extend(result)
    else:
        for act in actions:
            failures.extend(run_checks(act, deep=deep))
    for line in failures:
        out.write(f"FAIL {line}\n")
    out.write(
        f"checked {len(actions)} actions up to r={args.rmax}: "
        + ("all invariants hold\n" if not failures
           else f"{len(failures)} violations\n")
    )
    return 1 if failures else 0


_COMMANDS = {
    "info": _cmd_info,
    "sectors": _cmd_sectors,
    "hilb": _cmd_hilb,
    "quiver": _cmd_quiver,
    "deform": _cmd_deform,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except JuniorResolveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
