"""Command-line interface.

Subcommands: catalog, isolation, lefschetz, branch, geometry (with
verify-integral / jacobi / hessian / volume / thresholds).  Data goes to
stdout in the selected format (json, csv, md), logs to stderr.  Exit codes:
0 success, 2 criterion-failure verdicts under --strict, 64 usage errors,
65 enumeration cap exceeded.  Identical argv and config produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import branching as br
from . import geometry as geo
from . import isolation as iso
from . import lefschetz as lef
from . import serialize as ser
from . import vz_catalog as vz
from .config import make_config
from .partitions import BoxContext, CapExceededError, as_partition, compatible_pair, ortho_classify

EXIT_OK = 0
EXIT_CRITERION = 2
EXIT_USAGE = 64
EXIT_CAP = 65


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def parse_partition(text: str):
    text = (text or "").strip()
    if text in ("", "-", "()"):
        return ()
    return as_partition(tuple(int(v) for v in text.split(",")))


def render(rows: list[dict], fmt: str, **meta) -> str:
    if fmt == "json":
        return ser.dumps(ser.document(rows, **meta))
    if fmt == "csv":
        keys = sorted({k for row in rows for k in row})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(row.get(k)) for k in keys})
        return buf.getvalue()
    if fmt == "md":
        keys = sorted({k for row in rows for k in row})
        lines = ["| " + " | ".join(keys) + " |",
                 "| " + " | ".join("---" for _ in keys) + " |"]
        for row in rows:
            lines.append("| " + " | ".join(_cell(row.get(k)) for k in keys) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(fmt)


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    if isinstance(v, float):
        return repr(v)
    return str(v)


# ---------------------------------------------------------------------------


def cmd_catalog(args, cfg) -> int:
    rows = []
    for mod in vz.catalog(args.kind, args.p, args.q, cap=cfg.enum_cap):
        row = ser.module_to_json(mod)
        row["provenance"] = "computed"
        rows.append(row)
    sys.stdout.write(render(rows, cfg.format, command="catalog",
                            kind=args.kind, p=args.p, q=args.q))
    return EXIT_OK


def cmd_isolation(args, cfg) -> int:
    rows = []
    if args.lam is not None:
        lam = parse_partition(args.lam)
        ctx = BoxContext(args.p, args.q)
        if args.kind == "U":
            mu = parse_partition(args.mu)
            cp = compatible_pair(lam, mu, ctx)
            if cp is None:
                sys.stderr.write("not a compatible pair\n")
                return EXIT_USAGE
            rows.append({"kind": "U", "lam": list(lam), "mu": list(mu),
                         "isolated": iso.is_isolated_U(cp), "provenance": "Prop Uisol"})
        else:
            orth = ortho_classify(lam, ctx)
            if orth is None:
                sys.stderr.write("not an orthogonal partition\n")
                return EXIT_USAGE
            rows.append({"kind": "O", "lam": list(lam),
                         "isolated": iso.is_isolated_O(orth),
                         "degree": sum(lam), "provenance": "Prop Oisol"})
    else:
        th = iso.min_degree_nonisolated(args.kind, args.p, args.q)
        row = {"kind": args.kind, "p": args.p, "q": args.q, "rank": th.rank,
               "bound": th.bound, "witness": list(th.witness) if th.witness else None,
               "note": th.note, "provenance": "Cor mino"}
        if args.kind == "O" and args.p * args.q <= cfg.enum_cap:
            count, best, argmin = iso.nonisolated_degree_scan(args.p, args.q)
            row["scan_min_degree"] = best
            row["scan_argmin"] = [list(a) for a in argmin]
        rows.append(row)
    sys.stdout.write(render(rows, cfg.format, command="isolation"))
    return EXIT_OK


def cmd_lefschetz(args, cfg) -> int:
    G = lef.parse_group(args.G)
    H = None
    if args.H:
        parts = args.H.split("+")
        groups = [lef.parse_group(t) for t in parts]
        H = groups[0] if len(groups) == 1 else tuple(groups)
    component = None
    if args.component:
        pieces = args.component.split(";")
        component = parse_partition(pieces[0]) if len(pieces) == 1 else (
            parse_partition(pieces[0]), parse_partition(pieces[1]))
    if args.mode == "restriction":
        v = lef.restriction_verdict(G, H, degree=args.degree, component=component,
                                    r=args.r, l2=args.l2)
    elif args.mode == "cup":
        v = lef.cup_verdict(G, H, degree=args.degree, component=component,
                            r=args.r, l2=args.l2)
    elif args.mode == "tensor":
        if args.degrees is None:
            sys.stderr.write("tensor mode needs --degrees k,l\n")
            return EXIT_USAGE
        k, l = (int(x) for x in args.degrees.split(","))
        comps = None
        if args.component:
            pieces = args.component.split(";")
            comps = (parse_partition(pieces[0]), parse_partition(pieces[1]))
        v = lef.cup_classes_verdict(G, k, l, components=comps)
    elif args.mode == "modular-symbol":
        v = lef.modular_symbol_verdict(G.kind, G.p, G.q, args.r or 1)
    else:
        sys.stderr.write(f"unknown mode {args.mode}\n")
        return EXIT_USAGE
    row = ser.verdict_to_json(v)
    row["provenance"] = v.anchor
    sys.stdout.write(render([row], cfg.format, command="lefschetz", mode=args.mode,
                            G=str(G), H=args.H))
    if args.strict and v.status == lef.FAILS:
        return EXIT_CRITERION
    return EXIT_OK


def cmd_branch(args, cfg) -> int:
    lam = parse_partition(args.lam)
    rows = []
    if args.op == "lr":
        mu, nu = parse_partition(args.mu), parse_partition(args.nu)
        rows.append({"op": "lr", "lam": list(lam), "mu": list(mu), "nu": list(nu),
                     "coefficient": br.lr_coefficient(lam, mu, nu), "provenance": "computed"})
    elif args.op == "gl-to-o":
        mu = parse_partition(args.mu)
        val = br.gl_to_o_mult(lam, mu, args.n)
        rows.append({"op": "gl-to-o", "lam": list(lam), "mu": list(mu), "n": args.n,
                     "multiplicity": val,
                     "note": None if val is not None else "outside stable range: needs character oracle",
                     "provenance": "computed"})
    elif args.op == "restrict-u":
        mu = parse_partition(args.mu)
        res = br.restrict_U_pair(lam, mu, BoxContext(args.p, args.q), args.r)
        rows.append({"op": "restrict-u", "lam": list(lam), "mu": list(mu),
                     "r": args.r, "contains": res["contains"],
                     "multiplicity": res["multiplicity"],
                     "target": {"lam": list(res["target"][0]), "mu": list(res["target"][1])} if res["target"] else None,
                     "provenance": "computed"})
    elif args.op == "restrict-o":
        res = br.restrict_O(lam, BoxContext(args.p, args.q), args.r)
        rows.append({"op": "restrict-o", "lam": list(lam), "r": args.r,
                     "contains": res["contains"], "multiplicity": res["multiplicity"],
                     "provenance": "computed"})
    elif args.op == "tensor":
        params = tuple(int(v) for v in args.params.split(","))
        res = br.tensor_contains(args.kind, args.p, args.q, params)
        rows.append({"op": "tensor", "kind": args.kind, "params": list(params),
                     "contains": res["contains"], "multiplicity": res["multiplicity"],
                     "provenance": "computed"})
    elif args.op == "kobayashi":
        mu = parse_partition(args.mu) if args.mu else None
        ok = br.kobayashi_admissible(args.kind, args.p, args.q, args.r, lam, mu)
        rows.append({"op": "kobayashi", "kind": args.kind, "lam": list(lam),
                     "mu": list(mu) if mu else None, "admissible": ok,
                     "provenance": "Thm kobaU" if args.kind == "U" else "Thm kobaO"})
    elif args.op == "vanishing-uo":
        mu = parse_partition(args.mu)
        ok = br.restrict_UO_vanishing(lam, mu, BoxContext(args.p, args.q))
        rows.append({"op": "vanishing-uo", "lam": list(lam), "mu": list(mu),
                     "can_be_nontrivial": ok, "provenance": "computed"})
    else:
        sys.stderr.write(f"unknown op {args.op}\n")
        return EXIT_USAGE
    sys.stdout.write(render(rows, cfg.format, command="branch"))
    return EXIT_OK


def cmd_geometry(args, cfg) -> int:
    rows = []
    if args.geo_op == "verify-integral":
        res = geo.mc_verify_integral(args.s, args.p, args.n,
                                     args.samples or cfg.mc_samples,
                                     args.seed if args.seed is not None else cfg.seed,
                                     batches=cfg.mc_batches)
        res["provenance"] = "computed"
        rows.append(res)
    elif args.geo_op == "jacobi":
        rng = np.random.default_rng(args.seed if args.seed is not None else cfg.seed)
        M = rng.normal(size=(args.r, args.p))
        M /= np.linalg.norm(M)
        spec = geo.jacobi_spectrum(M, args.p, args.q, args.r)
        T = geo.curvature_operator_matrix(M, args.p, args.q, args.r, "xv")
        P = geo.curvature_operator_matrix(M, args.p, args.q, args.r, "perp")
        ev_t = np.sort(np.linalg.eigvalsh(0.5 * (T + T.T)))
        ev_p = np.sort(np.linalg.eigvalsh(0.5 * (P + P.T)))
        rows.append({
            "p": args.p, "q": args.q, "r": args.r,
            "closed_tangent": spec["tangent"], "closed_normal": spec["normal"],
            "bracket_tangent": ev_t.tolist(), "bracket_normal": ev_p.tolist(),
            "max_deviation": float(max(np.abs(ev_t - np.array(spec["tangent"])).max(),
                                       np.abs(ev_p - np.array(spec["normal"])).max())),
            "provenance": "computed",
        })
    elif args.geo_op == "hessian":
        rng = np.random.default_rng(args.seed if args.seed is not None else cfg.seed)
        devs = []
        for _ in range(args.points):
            Z = geo.random_point(rng, args.p, args.q + 1) * 0.7
            devs.append(geo.hessian_numeric_check(Z, args.q, h=cfg.fd_step)["max_deviation"])
        rows.append({"p": args.p, "q": args.q, "r": 1, "points": args.points,
                     "step": cfg.fd_step, "max_deviation": max(devs),
                     "provenance": "computed"})
    elif args.geo_op == "volume":
        res = geo.volume_growth(args.t, args.p, args.q, args.r)
        rows.append({"p": args.p, "q": args.q, "r": args.r, "t": args.t,
                     "value": res["value"], "exact_shape": res["exact"],
                     "provenance": "computed"})
    elif args.geo_op == "thresholds":
        th = geo.dx_threshold(args.p, args.q, args.r)
        l2 = lef.l2_cup_threshold(args.p, args.q, args.r)
        rows.append({
            "p": args.p, "q": args.q, "r": args.r,
            "dx_limit_ones": th["limit_ones"],
            "dx_threshold_qpr": th["threshold_qpr"],
            "dx_threshold_pqr_variant": th["threshold_pqr"],
            "dx_convention": th["convention"],
            "l2_iso_max_degree": l2.iso_max_degree,
            "l2_iso_range": l2.iso_range,
            "l2_middle_injective": l2.middle_injective,
            "poincare_exponent": (args.p + args.q + args.r - 1) * (min(args.r, args.p) ** 0.5) / 2.0,
            "provenance": "Thm cohom l2",
        })
    else:
        sys.stderr.write(f"unknown geometry op {args.geo_op}\n")
        return EXIT_USAGE
    sys.stdout.write(render(rows, cfg.format, command=f"geometry {args.geo_op}"))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="key = value config file")
    common.add_argument("--format", choices=("json", "csv", "md"),
                        default=argparse.SUPPRESS)
    common.add_argument("--strict", action="store_true", default=argparse.SUPPRESS,
                        help="exit 2 on criterion-failure verdicts")

    top = Parser(prog="cohomrep", description=__doc__, parents=[common])
    top.set_defaults(config=None, format=None, strict=False)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    c = add("catalog", help="enumerate cohomological modules")
    c.add_argument("--kind", required=True, choices=("U", "O"))
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)

    i = add("isolation", help="isolation verdicts and degree thresholds")
    i.add_argument("--kind", required=True, choices=("U", "O"))
    i.add_argument("--p", type=int, required=True)
    i.add_argument("--q", type=int, required=True)
    i.add_argument("--lam")
    i.add_argument("--mu")

    l = add("lefschetz", help="injectivity verdicts with citations")
    l.add_argument("--mode", required=True,
                   choices=("restriction", "cup", "tensor", "modular-symbol"))
    l.add_argument("--G", required=True, help="group, e.g. O:3,4")
    l.add_argument("--H", help="subgroup(s), e.g. U:2,2 or U:2,2+U:1,3")
    l.add_argument("--degree", type=int)
    l.add_argument("--degrees", help="k,l for tensor mode")
    l.add_argument("--component", help="partition '2,1' or pair '2,1;3,2'")
    l.add_argument("--r", type=int)
    l.add_argument("--l2", action="store_true", help="L2/cuspidal variants")

    b = add("branch", help="branching multiplicities")
    b.add_argument("--op", required=True,
                   choices=("lr", "gl-to-o", "restrict-u", "restrict-o",
                            "tensor", "kobayashi", "vanishing-uo"))
    b.add_argument("--lam", default="")
    b.add_argument("--mu")
    b.add_argument("--nu")
    b.add_argument("--n", type=int)
    b.add_argument("--p", type=int)
    b.add_argument("--q", type=int)
    b.add_argument("--r", type=int)
    b.add_argument("--kind", choices=("U", "O"))
    b.add_argument("--params", help="i,j,k,l (U) or k,l (O) for tensor")

    g = add("geometry", help="numerical geometry on X_{p,q+r}")
    gsub = g.add_subparsers(dest="geo_op", required=True)
    vi = gsub.add_parser("verify-integral", parents=[common])
    vi.add_argument("--s", type=float, required=True)
    vi.add_argument("--p", type=int, required=True)
    vi.add_argument("--n", type=int, required=True)
    vi.add_argument("--samples", type=int)
    vi.add_argument("--seed", type=int)
    ja = gsub.add_parser("jacobi", parents=[common])
    ja.add_argument("--p", type=int, required=True)
    ja.add_argument("--q", type=int, required=True)
    ja.add_argument("--r", type=int, required=True)
    ja.add_argument("--seed", type=int)
    he = gsub.add_parser("hessian", parents=[common])
    he.add_argument("--p", type=int, required=True)
    he.add_argument("--q", type=int, required=True)
    he.add_argument("--points", type=int, default=5)
    he.add_argument("--seed", type=int)
    vo = gsub.add_parser("volume", parents=[common])
    vo.add_argument("--p", type=int, required=True)
    vo.add_argument("--q", type=int, required=True)
    vo.add_argument("--r", type=int, required=True)
    vo.add_argument("--t", type=float, required=True)
    th = gsub.add_parser("thresholds", parents=[common])
    th.add_argument("--p", type=int, required=True)
    th.add_argument("--q", type=int, required=True)
    th.add_argument("--r", type=int, required=True)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args.config, format=args.format)
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_USAGE
    try:
        if args.command == "catalog":
            return cmd_catalog(args, cfg)
        if args.command == "isolation":
            return cmd_isolation(args, cfg)
        if args.command == "lefschetz":
            return cmd_lefschetz(args, cfg)
        if args.command == "branch":
            return cmd_branch(args, cfg)
        if args.command == "geometry":
            return cmd_geometry(args, cfg)
    except CapExceededError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_CAP
    parser.error("no command")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
