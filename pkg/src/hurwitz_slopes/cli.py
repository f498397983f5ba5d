"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (e.g. empty cover set), 2 on a
usage error (bad flags or unparsable input).
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Any

from .braid import orbit_decompose, orbit_of
from .cyclic import (
    CyclicCoverSpec,
    cyclic_cross_check,
    cyclic_genus,
    cyclic_lyapunov_sum,
    cyclic_slope,
    degree_bound_check,
)
from .degen import DIRECTIONS, DegenerationReport, degenerate
from .hurwitz import enumerate_covers, genus_of_profile
from .invariants import SlopeReport, slope, slope_of_orbits
from .notation import (
    ParseError,
    format_profile,
    format_rational,
    format_tuple,
    parse_int_list,
    parse_profile,
    parse_tuple,
)
from .perm import format_permutation
from .qdiff import (
    OddPartition,
    ScanConfig,
    StratumScanRow,
    de_jonquieres_count,
    first_differences,
    kappa,
    stratum_scan,
    sv_lyapunov_relation,
)

COMMANDS = ("enumerate", "orbits", "slope", "degenerate", "cyclic", "stratum", "dejonquieres")
STRATUM_COLUMNS = ("d", "N", "delta", "slope", "sv_estimate", "orbit_count", "skipped_reason")


class UsageError(Exception):
    pass


def _q(x: Fraction | int | None) -> str | None:
    return None if x is None else format_rational(x)


def slope_report_json(rep: SlopeReport) -> dict[str, Any]:
    return {
        "degree": rep.profile.degree,
        "profile": format_profile(rep.profile),
        "orbit_size": rep.orbit_size,
        "orbit_count": rep.orbit_count,
        "delta": _q(rep.delta_O),
        "delta_prime": _q(rep.delta_prime_O),
        "ramification_defect": _q(rep.ramification_defect),
        "deg_lambda": _q(rep.deg_lambda),
        "deg_delta": _q(rep.deg_delta),
        "slope": _q(rep.slope),
        "rational_tails": rep.rational_tails,
        "warnings": list(rep.warnings),
    }


def degeneration_json(rep: DegenerationReport) -> dict[str, Any]:
    return {
        "tuple": format_tuple(rep.tuple),
        "direction": rep.direction,
        "node_permutation": format_permutation(rep.node_permutation),
        "nodes": [
            {
                "support": sorted(n.cycle_support),
                "multiplicity": n.multiplicity,
                "weight": _q(n.weight),
                "survives": n.survives,
                "components": [n.side_a, n.side_b],
            }
            for n in rep.nodes
        ],
        "components": [
            {"side": c.side, "letters": sorted(c.letters), "genus": c.genus, "node_count": c.node_count}
            for c in rep.components
        ],
        "delta": _q(rep.delta),
        "delta_prime": _q(rep.delta_prime),
        "arithmetic_genus": rep.arithmetic_genus,
        "rational_tails": rep.rational_tails,
        "bridge_chains": rep.bridge_chains,
        "warnings": list(rep.warnings),
    }


def stratum_row_json(row: StratumScanRow, diff: Fraction | None) -> dict[str, Any]:
    return {
        "d": row.d,
        "N": row.N,
        "delta": _q(row.delta_d_nu),
        "delta_prime": _q(row.delta_prime_d_nu),
        "slope": _q(row.slope),
        "sv_estimate": _q(row.sv_estimate),
        "sv_first_difference": _q(diff),
        "orbit_count": row.orbit_count,
        "rational_tails": row.rational_tails,
        "skipped_reason": row.skipped_reason,
    }


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _need(args, *names):
    for n in names:
        if getattr(args, n.replace("-", "_")) is None:
            raise UsageError(f"{args.command} requires --{n}")


def _profile(args):
    _need(args, "degree", "profile")
    return parse_profile(args.profile, args.degree)


def _cmd_enumerate(args):
    profile = _profile(args)
    covers = enumerate_covers(profile, workers=args.parallel)
    tuples = [format_tuple(r) for r in covers]
    if args.output == "json":
        return _dump({
            "degree": profile.degree,
            "profile": format_profile(profile),
            "genus": genus_of_profile(profile),
            "count": covers.count,
            "representatives": tuples,
        })
    if args.output == "csv":
        return _csv(["index", "tuple"], [[i, t] for i, t in enumerate(tuples)])
    return "\n".join([f"N = {covers.count}"] + tuples)


def _orbits_for(args):
    profile = _profile(args)
    if args.tuple is not None:
        seed = parse_tuple(args.tuple, args.degree)
        if seed.profile() != profile:
            raise UsageError(f"seed tuple has profile {format_profile(seed.profile())}")
        return profile, [orbit_of(seed)]
    return profile, orbit_decompose(enumerate_covers(profile, workers=args.parallel))


def _cmd_orbits(args):
    profile, orbits = _orbits_for(args)
    if args.output == "json":
        return _dump({
            "degree": profile.degree,
            "profile": format_profile(profile),
            "orbits": [{"size": o.size, "members": [format_tuple(r) for r in o]} for o in orbits],
        })
    if args.output == "csv":
        return _csv(["orbit", "tuple"], [[i, format_tuple(r)] for i, o in enumerate(orbits) for r in o])
    lines = []
    for i, o in enumerate(orbits):
        lines.append(f"orbit {i}: size {o.size}")
        lines.extend("  " + format_tuple(r) for r in o)
    return "\n".join(lines)


def _cmd_slope(args):
    profile, orbits = _orbits_for(args)
    if not orbits:
        raise ValueError(f"no connected covers with profile {format_profile(profile)}")
    per_orbit = [slope(o) for o in orbits]
    space = slope_of_orbits(profile, orbits) if args.tuple is None else per_orbit[0]
    if args.output == "json":
        out = slope_report_json(space)
        out["orbits"] = [slope_report_json(r) for r in per_orbit]
        return _dump(out)
    cols = ["orbit", "orbit_size", "delta", "delta_prime", "deg_lambda", "slope"]
    rows = [[i, r.orbit_size, _q(r.delta_O), _q(r.delta_prime_O), _q(r.deg_lambda), _q(r.slope)]
            for i, r in enumerate(per_orbit)]
    if args.tuple is None:
        rows.append(["all", space.orbit_size, _q(space.delta_O), _q(space.delta_prime_O),
                     _q(space.deg_lambda), _q(space.slope)])
    if args.output == "csv":
        return _csv(cols, rows)
    return "\n".join(" ".join(str(x) for x in row) for row in [cols] + rows)


def _cmd_degenerate(args):
    _need(args, "degree", "tuple")
    r = parse_tuple(args.tuple, args.degree)
    if not r.is_transitive():
        raise ValueError("tuple does not generate a transitive group")
    dirs = [args.direction] if args.direction else list(DIRECTIONS)
    reports = [degenerate(r, j) for j in dirs]
    if args.output == "json":
        body = [degeneration_json(x) for x in reports]
        return _dump(body[0] if args.direction else body)
    rows = [[x.direction, format_permutation(x.node_permutation), len(x.nodes), len(x.components),
             _q(x.delta), _q(x.delta_prime), x.rational_tails] for x in reports]
    cols = ["direction", "node_permutation", "nodes", "components", "delta", "delta_prime", "rational_tails"]
    if args.output == "csv":
        return _csv(cols, rows)
    return "\n".join(" ".join(str(x) for x in row) for row in [cols] + rows)


def _cmd_cyclic(args):
    _need(args, "d", "exponents")
    spec = CyclicCoverSpec(args.d, tuple(parse_int_list(args.exponents)))
    g = cyclic_genus(spec)
    check = cyclic_cross_check(spec)
    out = {
        "d": spec.d,
        "exponents": list(spec.exponents),
        "genus": g,
        "slope": _q(cyclic_slope(spec)),
        "lyapunov_sum": _q(cyclic_lyapunov_sum(spec)),
        "degree_bound": degree_bound_check(g, spec.d),
        "cross_check": {
            "passed": check.passed,
            "orbit_size": check.orbit_size,
            "deltas": [_q(x) for x in check.deltas],
            "pipeline_slope": _q(check.pipeline_slope),
            "pipeline_lyapunov_sum": _q(check.pipeline_lyapunov),
            "failures": check.failures,
        },
    }
    if args.output == "json":
        return _dump(out)
    flat = {k: v for k, v in out.items() if k != "cross_check"}
    flat["exponents"] = ",".join(map(str, spec.exponents))
    flat["cross_check"] = "pass" if check.passed else "fail"
    if args.output == "csv":
        return _csv(list(flat), [list(flat.values())])
    return "\n".join(f"{k}: {v}" for k, v in flat.items())


def _cmd_stratum(args):
    _need(args, "nu", "d-values")
    nu = OddPartition(tuple(parse_int_list(args.nu)))
    config = ScanConfig(budget=args.budget, workers=args.parallel)
    rows = stratum_scan(nu, parse_int_list(args.d_values), config)
    diffs = first_differences(rows)
    if args.output == "csv":
        return _csv(list(STRATUM_COLUMNS), [
            [r.d, r.N, _q(r.delta_d_nu), _q(r.slope), _q(r.sv_estimate), r.orbit_count, r.skipped_reason or ""]
            for r in rows
        ])
    body = []
    for row, diff in zip(rows, diffs):
        item = stratum_row_json(row, diff)
        if not row.skipped:
            rel = sv_lyapunov_relation(nu, row)
            item["lyapunov_estimate"] = _q(rel.lyapunov_estimate)
            item["relation_holds"] = rel.holds
        body.append(item)
    if args.output == "json":
        return _dump({"nu": list(nu.parts), "genus": nu.genus, "kappa": _q(kappa(nu)), "rows": body})
    lines = [f"nu={nu} g={nu.genus} kappa={_q(kappa(nu))}"]
    for item in body:
        lines.append(" ".join(f"{k}={v}" for k, v in item.items() if v is not None))
    return "\n".join(lines)


def _cmd_dejonquieres(args):
    _need(args, "genus", "zeros")
    zeros = parse_int_list(args.zeros)
    n = de_jonquieres_count(args.genus, zeros)
    if args.output == "json":
        return _dump({"genus": args.genus, "zeros": zeros, "count": n})
    if args.output == "csv":
        return _csv(["genus", "zeros", "count"], [[args.genus, ",".join(map(str, zeros)), n]])
    return str(n)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


HANDLERS = {
    "enumerate": _cmd_enumerate,
    "orbits": _cmd_orbits,
    "slope": _cmd_slope,
    "degenerate": _cmd_degenerate,
    "cyclic": _cmd_cyclic,
    "stratum": _cmd_stratum,
    "dejonquieres": _cmd_dejonquieres,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "csv", "text"), default="json")
    common.add_argument("--parallel", type=int, default=None, metavar="N")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="hurwitz-slopes",
        description="Covers of P^1 branched at four points: enumeration, orbits, degenerations, slopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("enumerate", "orbits", "slope"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--degree", type=int)
        p.add_argument("--profile", help='e.g. "4|4|3,1|3,1"; parts equal to 1 may be omitted')
        if name != "enumerate":
            p.add_argument("--tuple", "--seed", dest="tuple",
                           help='restrict to the orbit of a tuple, e.g. "(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)"')

    p = sub.add_parser("degenerate", parents=[common])
    p.add_argument("--degree", type=int)
    p.add_argument("--tuple")
    p.add_argument("--direction", type=int, choices=DIRECTIONS)

    p = sub.add_parser("cyclic", parents=[common])
    p.add_argument("--d", type=int)
    p.add_argument("--exponents", help="a1,a2,a3,a4")

    p = sub.add_parser("stratum", parents=[common])
    p.add_argument("--nu", help="odd parts, e.g. 1,1,1,1")
    p.add_argument("--d-values", help="even degrees, e.g. 12,14")
    p.add_argument("--budget", type=int, default=ScanConfig.budget)

    p = sub.add_parser("dejonquieres", parents=[common])
    p.add_argument("--genus", type=int)
    p.add_argument("--zeros", help="zero orders, e.g. 1,3")
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    # argparse writes usage errors and --help to sys.stdout/sys.stderr directly
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        text = HANDLERS[args.command](args)
    except (UsageError, ParseError) as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    print(text, file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
