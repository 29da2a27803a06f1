"""Command-line front end.

Subcommands: ``analyze`` (full singularity report), ``jumping`` (jumping
number listing), ``limit`` (limiting-valuation convergence table),
``preset`` (built-in examples, runnable or emitted as config JSON) and
``plotdata`` (CSV cross-section of the cone plus threshold pencil samples).

Exit codes: 0 success, 2 usage/config validation, 3 mathematical
infeasibility (no effective member in the pencil), 4 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .configio import ConfigError, load_singularity_file
from .exactnum import QuadNum
from .presets import PRESET_IDS, QUADRANT_SYNTHETIC, P1XE, build, config_for
from .singularity import (
    ConeSingularity,
    NoBoundaryExistsError,
    RationalityGuardError,
    analyze,
    limiting_valuation,
    jumping_numbers,
    minus_threshold,
    report_to_dict,
    report_to_text,
)
from .surface import QuadraticCone
from .threshold import (
    InfeasibleError,
    NotBoundedBelowError,
    ThresholdProblem,
    feasible_at,
)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _index_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated indices, like 0,1")
    try:
        i, j = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an index pair: {text!r}")
    if i == j:
        raise argparse.ArgumentTypeError("plane indices must differ")
    return i, j


def _coord_pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated rationals, like -1,-1")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational pair: {text!r}")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- commands ----------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    reports = [analyze(load_singularity_file(path)) for path in args.config]
    if args.json:
        payload = report_to_dict(reports[0]) if len(reports) == 1 else [
            report_to_dict(r) for r in reports
        ]
        _emit(_dump_json(payload))
    else:
        _emit("\n\n".join(report_to_text(r) for r in reports))
    return 0


def _jumping_payload(cone: ConeSingularity, count: int) -> dict:
    jumps = jumping_numbers(cone, count)
    return {
        "name": cone.name,
        "count": count,
        "irrational": jumps.irrational,
        "values": [{"exact": v.to_json(), "render": v.render()} for v in jumps.values],
    }


def cmd_jumping(args: argparse.Namespace) -> int:
    cone = load_singularity_file(args.config)
    payload = _jumping_payload(cone, args.count)
    if args.json:
        _emit(_dump_json(payload))
        return 0
    flag = "irrational" if payload["irrational"] else "rational"
    lines = [f"jumping numbers of {payload['name']}  [{flag}]"]
    for i, item in enumerate(payload["values"], start=1):
        lines.append(f"  {i:>4}: {item['render']}")
    _emit("\n".join(lines))
    return 0


def cmd_limit(args: argparse.Namespace) -> int:
    cone = load_singularity_file(args.config)
    t = minus_threshold(cone).t
    rows = []
    for m in range(1, args.max_m + 1):
        t_m, val_m = limiting_valuation(cone, m)
        gap = QuadNum(t_m) - t
        rows.append((m, t_m, val_m, gap))
    if args.json:
        payload = {
            "name": cone.name,
            "t_minus": t.to_json(),
            "t_minus_render": t.render(),
            "rows": [
                {"m": m, "t_m": str(t_m), "val_m": str(val_m), "gap_render": gap.approx6()}
                for m, t_m, val_m, gap in rows
            ],
        }
        _emit(_dump_json(payload))
        return 0
    lines = [f"limiting valuations of {cone.name}  (t_minus = {t.render()})"]
    w_t = max(len(str(r[1])) for r in rows)
    w_v = max(len(str(r[2])) for r in rows)
    for m, t_m, val_m, gap in rows:
        lines.append(
            f"  m={m:<3} t_m={str(t_m):<{w_t}}  val_m={str(val_m):<{w_v}}"
            f"  gap≈{gap.approx6()}"
        )
    _emit("\n".join(lines))
    return 0


def cmd_preset(args: argparse.Namespace) -> int:
    config = config_for(args.id, degree=args.degree, canonical=args.canonical)
    if args.emit_config:
        _emit(_dump_json(config))
        return 0
    report = analyze(build(args.id, degree=args.degree, canonical=args.canonical))
    if args.json:
        _emit(_dump_json(report_to_dict(report)))
    else:
        _emit(report_to_text(report))
    return 0


def _direction_feasible(surf, i: int, j: int, x: float, y: float) -> bool:
    """Float membership test for x*e_i + y*e_j; display pipeline only."""
    lat = surf.lattice
    if isinstance(surf.cone, QuadraticCone):
        form = [[float(v) for v in row] for row in lat.form]
        q_self = form[i][i] * x * x + 2 * form[i][j] * x * y + form[j][j] * y * y
        h = [float(c) for c in surf.cone.ample_selector.coords]
        sel = sum(form[i][k] * h[k] for k in range(lat.rank)) * x
        sel += sum(form[j][k] * h[k] for k in range(lat.rank)) * y
        return q_self >= 0 and sel >= 0
    return all(row[i] * x + row[j] * y >= 0 for row in surf.cone.inequalities)


def _boundary_rays(surf, i: int, j: int) -> list[tuple[float, float]]:
    """Unit directions of the two edges of the cone slice in the (i, j)
    plane, found by angular bisection; empty when the slice is trivial."""
    coarse = 720
    feas = []
    for k in range(coarse):
        th = 2 * math.pi * k / coarse
        feas.append(_direction_feasible(surf, i, j, math.cos(th), math.sin(th)))
    if all(feas) or not any(feas):
        return []
    start = feas.index(False)  # rotate so runs do not wrap
    order = [(start + k) % coarse for k in range(coarse)]
    runs: list[list[int]] = []
    for k in order:
        if feas[k]:
            if runs and (runs[-1][-1] + 1) % coarse == k:
                runs[-1].append(k)
            else:
                runs.append([k])
    run = max(runs, key=len)

    def refine(lo_idx: int, hi_idx: int) -> float:
        # invariant: lo infeasible, hi feasible (indices may differ by 1 mod coarse)
        lo = 2 * math.pi * lo_idx / coarse
        hi = lo + 2 * math.pi / coarse
        for _ in range(80):
            mid = (lo + hi) / 2
            if _direction_feasible(surf, i, j, math.cos(mid), math.sin(mid)):
                hi = mid
            else:
                lo = mid
        return hi

    def refine_rev(lo_idx: int) -> float:
        # lo feasible, lo+1 infeasible
        lo = 2 * math.pi * lo_idx / coarse
        hi = lo + 2 * math.pi / coarse
        for _ in range(80):
            mid = (lo + hi) / 2
            if _direction_feasible(surf, i, j, math.cos(mid), math.sin(mid)):
                lo = mid
            else:
                hi = mid
        return lo

    first = refine(run[0] - 1, run[0])
    last = refine_rev(run[-1])
    return [(math.cos(first), math.sin(first)), (math.cos(last), math.sin(last))]


def cmd_plotdata(args: argparse.Namespace) -> int:
    cone = load_singularity_file(args.config)
    surf = cone.surf
    i, j = args.plane
    if not (0 <= i < surf.lattice.rank and 0 <= j < surf.lattice.rank):
        raise ConfigError("plane", f"indices out of range for rank {surf.lattice.rank}")
    n = args.samples
    problem = ThresholdProblem(surf, surf.polarization, -surf.canonical_class)
    t = minus_threshold(cone).t

    lines = ["s,x,y,feasible"]
    rays = _boundary_rays(surf, i, j)
    for ux, uy in rays:
        for k in range(n):
            r = k / max(n - 1, 1)
            lines.append(f",{r * ux:.12f},{r * uy:.12f},1")
    lo, hi = t.floor() - 1, t.ceil() + 1
    for k in range(n):
        s = Fraction(lo) + Fraction(k * (hi - lo), max(n - 1, 1))
        cls = QuadNum(s) * problem.direction + problem.offset
        x, y = float(Fraction(cls.coords[i].a)), float(Fraction(cls.coords[j].a))
        ok = 1 if feasible_at(problem, s) else 0
        lines.append(f"{float(s):.12f},{x:.12f},{y:.12f},{ok}")
    _emit("\n".join(lines))
    return 0


# -- parser ------------------------------------------------------------------


def _add_format_flags(sub: argparse.ArgumentParser) -> None:
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable JSON output")
    fmt.add_argument("--text", action="store_true", help="plain-text output (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conesing",
        description="Exact singularity invariants of cone singularities over polarized surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one or more surface configs")
    p.add_argument("--config", action="append", required=True, help="path to a surface config JSON (repeatable)")
    _add_format_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("jumping", help="list jumping numbers of the vertex")
    p.add_argument("--config", required=True, help="path to a surface config JSON")
    p.add_argument("--count", type=_positive_int, default=10, help="how many jumping numbers (default 10)")
    _add_format_flags(p)
    p.set_defaults(func=cmd_jumping)

    p = sub.add_parser("limit", help="limiting-valuation convergence table")
    p.add_argument("--config", required=True, help="path to a surface config JSON")
    p.add_argument("--max-m", type=_positive_int, default=16, help="largest denominator m (default 16)")
    _add_format_flags(p)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("preset", help="built-in example surfaces")
    p.add_argument("id", choices=PRESET_IDS)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--emit-config", action="store_true", help="print the equivalent config JSON")
    mode.add_argument("--run", action="store_true", help="analyze the preset")
    p.add_argument("--degree", type=_positive_int, default=1,
                   help=f"elliptic polarization degree ({P1XE} only)")
    p.add_argument("--canonical", type=_coord_pair, default=(Fraction(-1), Fraction(-1)),
                   help=f"canonical class coordinates ({QUADRANT_SYNTHETIC} only),"
                        " written --canonical=-1,-1")
    _add_format_flags(p)
    p.set_defaults(func=cmd_preset)

    p = sub.add_parser("plotdata", help="CSV: cone cross-section edges and pencil samples")
    p.add_argument("--config", required=True, help="path to a surface config JSON")
    p.add_argument("--plane", type=_index_pair, required=True, help="two basis indices, like 0,1")
    p.add_argument("--samples", type=_positive_int, required=True, help="points per curve")
    p.set_defaults(func=cmd_plotdata)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error {exc}", file=sys.stderr)
        return 2
    except (InfeasibleError, NoBoundaryExistsError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except (AssertionError, NotBoundedBelowError, RationalityGuardError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
