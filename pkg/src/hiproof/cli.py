"""Command-line interface.

Angles are taken in degrees here and converted once at this boundary; all
library internals work in radians. Data goes to stdout, diagnostics to
stderr. Exit codes: 0 success, 2 usage errors (unknown flags, missing or
malformed arguments), 1 domain errors (values outside physical or
configured ranges, malformed input files).

Output of every command is a pure function of its arguments, so repeated
invocations are byte-identical; tables round to --precision decimals while
json and csv carry full double precision.
"""

from __future__ import annotations

import argparse
import functools
import math
import os
import sys

from .casestudy import audit_records, parse_records, render_report
from .errors import DomainError, ParseError
from .geometry import HouseParams, compactness, ratios_of, volume
from .optimize import (
    FixedFloorArea,
    FixedFootprintRatio,
    FixedSlenderness,
    FixedVolume,
    HeightRange,
    OptimalDesign,
    optimize_fixed_floor,
    optimize_fixed_k,
    optimize_fixed_r,
    optimize_fixed_volume,
    solve,
)
from .oracle import GridSpec, contour_grid
from .serialize import (
    compactness_to_csv,
    compactness_to_dict,
    contour_to_csv,
    contour_to_dict,
    design_to_csv,
    design_to_dict,
    dumps_pretty,
    render_kv_table,
)
from .verify import verify_all

# help text must not depend on the invoking terminal's width
_FORMATTER = functools.partial(argparse.HelpFormatter, width=96)

DEFAULT_PORT = 8080

_SCENARIO_FLAGS = {
    "fixed-volume": ("volume", "alpha_deg"),
    "fixed-r": ("volume", "alpha_deg", "ratio_r"),
    "fixed-k": ("volume", "alpha_deg", "ratio_k"),
    "fixed-floor": ("floor_area", "height", "alpha_deg"),
    "height-range": ("volume", "alpha_deg", "hmin", "hmax"),
}

_OPTIMIZE_FLAGS = ("volume", "alpha_deg", "ratio_r", "ratio_k", "floor_area", "height", "hmin", "hmax")


def _flag(dest: str) -> str:
    return "--" + dest.replace("_", "-")


def _grid_shape(text: str) -> tuple[int, int]:
    try:
        n_r, _, n_k = text.partition("x")
        return int(n_r), int(n_k)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected COLSxROWS like 201x201, got {text!r}") from None


def _axis_range(text: str) -> tuple[float, float]:
    try:
        lo, _, hi = text.partition(":")
        return float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI like 0.2:5, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hiproof",
        description="Minimal-surface design and compactness auditing for hip-roof houses.",
        formatter_class=_FORMATTER,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    opt = sub.add_parser(
        "optimize",
        help="solve one design scenario for the smallest envelope",
        description="Solve one design scenario and print the surface-minimal house.",
        formatter_class=_FORMATTER,
    )
    opt.add_argument(
        "--scenario", required=True, choices=sorted(_SCENARIO_FLAGS),
        help="which quantities are fixed",
    )
    opt.add_argument("--volume", type=float, help="heated volume in m^3")
    opt.add_argument("--alpha-deg", type=float, help="roof pitch in degrees, 0 < a < 90")
    opt.add_argument("--ratio-r", type=float, help="footprint ratio L/W (fixed-r)")
    opt.add_argument("--ratio-k", type=float, help="slenderness H/W (fixed-k)")
    opt.add_argument("--floor-area", type=float, help="floor area W*L in m^2 (fixed-floor)")
    opt.add_argument("--height", type=float, help="wall height in m (fixed-floor)")
    opt.add_argument("--hmin", type=float, help="lower wall-height bound in m (height-range)")
    opt.add_argument("--hmax", type=float, help="upper wall-height bound in m (height-range)")
    _add_output_flags(opt, ("table", "json", "csv"))
    opt.set_defaults(func=cmd_optimize, command_parser=opt)

    score = sub.add_parser(
        "score",
        help="rate a drafted house against its optimal envelope",
        description="Compare a house's surface with the smallest one its constraints allow.",
        formatter_class=_FORMATTER,
    )
    score.add_argument("--width", type=float, required=True, help="footprint width W in m")
    score.add_argument("--length", type=float, required=True, help="footprint length L in m")
    score.add_argument("--height", type=float, required=True, help="wall height H in m")
    score.add_argument("--alpha-deg", type=float, required=True, help="roof pitch in degrees")
    score.add_argument(
        "--against", choices=("fixed-volume", "fixed-r", "fixed-k", "fixed-floor"),
        default="fixed-volume",
        help="scenario providing the reference minimum (default fixed-volume)",
    )
    _add_output_flags(score, ("table", "json", "csv"))
    score.set_defaults(func=cmd_score, command_parser=score)

    contour = sub.add_parser(
        "contour",
        help="sample the surface landscape over the shape plane",
        description="Sample external surface over a grid of (r, k) shapes at fixed volume and pitch.",
        formatter_class=_FORMATTER,
    )
    contour.add_argument("--volume", type=float, required=True, help="heated volume in m^3")
    contour.add_argument("--alpha-deg", type=float, required=True, help="roof pitch in degrees")
    contour.add_argument(
        "--grid", type=_grid_shape, default=(201, 201), metavar="NRxNK",
        help="samples per axis (default 201x201)",
    )
    contour.add_argument(
        "--r-range", type=_axis_range, default=(0.2, 5.0), metavar="LO:HI",
        help="footprint ratio window (default 0.2:5)",
    )
    contour.add_argument(
        "--k-range", type=_axis_range, default=(0.1, 3.0), metavar="LO:HI",
        help="slenderness window (default 0.1:3)",
    )
    contour.add_argument(
        "--output-format", choices=("json", "csv"), default="json",
        help="matrix encoding (default json)",
    )
    contour.set_defaults(func=cmd_contour, command_parser=contour)

    aud = sub.add_parser(
        "audit",
        help="audit recorded houses against four scenarios",
        description="Read house records (CSV or JSON) and report how compact each one is "
                    "under every applicable scenario.",
        formatter_class=_FORMATTER,
    )
    aud.add_argument(
        "file", nargs="?", default="-", metavar="FILE",
        help="records file; '-' or omitted reads stdin (default CSV)",
    )
    aud.add_argument(
        "--input-format", choices=("csv", "json"),
        help="force the input format; default infers json from a .json suffix",
    )
    _add_output_flags(aud, ("table", "json", "csv"))
    aud.set_defaults(func=cmd_audit, command_parser=aud)

    ver = sub.add_parser(
        "verify",
        help="cross-check closed forms against brute-force grids",
        description="Solve seeded random instances of every scenario twice, closed form "
                    "against dense grid search, and report the agreement.",
        formatter_class=_FORMATTER,
    )
    ver.add_argument("--samples", type=int, default=200, help="instances per scenario (default 200)")
    ver.add_argument("--seed", type=int, default=7, help="random seed (default 7)")
    ver.set_defaults(func=cmd_verify, command_parser=ver)

    srv = sub.add_parser(
        "serve",
        help="run the JSON-over-HTTP service",
        description="Serve the optimizer over HTTP. The port comes from --port, then the "
                    "HIPROOF_PORT environment variable, then 8080.",
        formatter_class=_FORMATTER,
    )
    srv.add_argument("--host", default="127.0.0.1", help="bind address (default 127.0.0.1)")
    srv.add_argument("--port", type=int, help="TCP port (default $HIPROOF_PORT or 8080)")
    srv.add_argument(
        "--cors-origin",
        help="value for Access-Control-Allow-Origin (default $HIPROOF_CORS_ORIGIN or *)",
    )
    srv.set_defaults(func=cmd_serve, command_parser=srv)

    return parser


def _add_output_flags(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument(
        "--output-format", choices=formats, default=formats[0],
        help=f"output encoding (default {formats[0]})",
    )
    parser.add_argument(
        "--precision", type=int, default=2,
        help="decimals in table output (default 2); json and csv always carry full precision",
    )


# ---------------------------------------------------------------------------
# commands


def _design_pairs(scenario: str, design: OptimalDesign) -> list[tuple[str, object]]:
    pairs: list[tuple[str, object]] = [("scenario", scenario)]
    pairs += list(design_to_dict(design).items())
    if design.kkt is not None:
        pairs.pop()  # replace the nested dict with flat rows
        diag = design.kkt
        pairs += [("h_crit", diag.h_crit), ("active", diag.active),
                  ("mu1", diag.mu1), ("mu2", diag.mu2)]
    return pairs


def cmd_optimize(args, parser: argparse.ArgumentParser) -> int:
    wanted = _SCENARIO_FLAGS[args.scenario]
    for dest in wanted:
        if getattr(args, dest) is None:
            parser.error(f"{_flag(dest)} is required for scenario '{args.scenario}'")
    for dest in _OPTIMIZE_FLAGS:
        if dest not in wanted and getattr(args, dest) is not None:
            parser.error(f"{_flag(dest)} is not used by scenario '{args.scenario}'")

    alpha = math.radians(args.alpha_deg)
    if args.scenario == "fixed-volume":
        spec = FixedVolume(args.volume, alpha)
    elif args.scenario == "fixed-r":
        spec = FixedFootprintRatio(args.volume, alpha, args.ratio_r)
    elif args.scenario == "fixed-k":
        spec = FixedSlenderness(args.volume, alpha, args.ratio_k)
    elif args.scenario == "fixed-floor":
        spec = FixedFloorArea(args.floor_area, args.height, alpha)
    else:
        spec = HeightRange(args.volume, alpha, args.hmin, args.hmax)
    design = solve(spec)

    if args.output_format == "json":
        out = dumps_pretty(design_to_dict(design))
    elif args.output_format == "csv":
        out = design_to_csv(design)
    else:
        out = render_kv_table(_design_pairs(args.scenario, design), args.precision)
    sys.stdout.write(out)
    return 0


def _reference_design(p: HouseParams, against: str) -> OptimalDesign:
    if against == "fixed-volume":
        return optimize_fixed_volume(volume(p), p.alpha)
    if against == "fixed-r":
        return optimize_fixed_r(volume(p), p.alpha, ratios_of(p).r)
    if against == "fixed-k":
        return optimize_fixed_k(volume(p), p.alpha, ratios_of(p).k)
    return optimize_fixed_floor(p.width * p.length, p.height, p.alpha)


def cmd_score(args, parser: argparse.ArgumentParser) -> int:
    p = HouseParams.from_degrees(args.width, args.length, args.height, args.alpha_deg)
    report = compactness(p, _reference_design(p, args.against).s_min)
    if args.output_format == "json":
        out = dumps_pretty(compactness_to_dict(report))
    elif args.output_format == "csv":
        out = compactness_to_csv(report)
    else:
        out = render_kv_table(list(compactness_to_dict(report).items()), args.precision)
    sys.stdout.write(out)
    return 0


def cmd_contour(args, parser: argparse.ArgumentParser) -> int:
    n_r, n_k = args.grid
    grid = GridSpec(r_range=args.r_range, k_range=args.k_range, n_r=n_r, n_k=n_k)
    result = contour_grid(args.volume, math.radians(args.alpha_deg), grid)
    if args.output_format == "csv":
        sys.stdout.write(contour_to_csv(result))
    else:
        sys.stdout.write(dumps_pretty(contour_to_dict(result)))
    return 0


def cmd_audit(args, parser: argparse.ArgumentParser) -> int:
    if args.file == "-":
        text = sys.stdin.read()
        fmt = args.input_format or "csv"
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as err:
            raise ParseError(f"cannot read {args.file}: {err.strerror}") from None
        fmt = args.input_format or ("json" if args.file.endswith(".json") else "csv")
    rows = audit_records(parse_records(text, fmt))
    sys.stdout.write(render_report(rows, args.output_format, args.precision))
    return 0


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.samples < 1:
        parser.error("--samples must be at least 1")
    checks = verify_all(args.samples, args.seed)
    header = f"{'scenario':<13} {'samples':>7} {'max_gap':>10} {'median':>10} {'refined':>10}  checks"
    lines = [header]
    for c in checks:
        flags = "dominance={} bound={} convergence={}".format(
            "ok" if c.dominance_ok else "FAIL",
            "ok" if c.within_bound else "FAIL",
            "ok" if c.converges else "FAIL",
        )
        lines.append(
            f"{c.scenario:<13} {c.samples:>7} {c.max_rel_gap:>10.3e} "
            f"{c.median_rel_gap:>10.3e} {c.median_rel_gap_refined:>10.3e}  {flags}"
        )
    all_ok = all(c.passed for c in checks)
    lines.append("result: " + ("all scenarios agree with the grid oracle" if all_ok else "FAILED"))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if all_ok else 1


def cmd_serve(args, parser: argparse.ArgumentParser) -> int:
    from .service import build_server  # deferred so the CLI works without a socket

    port = args.port
    if port is None:
        raw = os.environ.get("HIPROOF_PORT", "")
        if raw:
            try:
                port = int(raw)
            except ValueError:
                raise DomainError("port", f"HIPROOF_PORT must be an integer, got {raw!r}") from None
        else:
            port = DEFAULT_PORT
    if not 0 <= port <= 65535:
        raise DomainError("port", "must be between 0 and 65535")
    cors = args.cors_origin or os.environ.get("HIPROOF_CORS_ORIGIN") or "*"

    server = build_server(host=args.host, port=port, cors_origin=cors)
    bound_port = server.server_address[1]
    print(f"listening on http://{args.host}:{bound_port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, args.command_parser)
    except (DomainError, ParseError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
