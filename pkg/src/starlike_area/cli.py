"""Command-line interface.

Exit codes: 0 success, 2 invalid configuration, 3 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .area import area_z_over_f
from .boundary import boundary_curve, curve_to_csv, curve_to_svg
from .errors import StarlikeAreaError
from .family import FamilyParams, SchwarzSpec, extremal_g, extremal_k
from .series import DEFAULT_ORDER, HIGH_RADIUS_ORDER, TruncatedSeries
from .special import max_area, max_area_beta0
from .verify import conjecture_trial, solve_lambda, solve_lambda_exact

log = logging.getLogger("starlike_area")

EXIT_OK, EXIT_CONFIG, EXIT_VERIFY = 0, 2, 3
COMMANDS = ("table1", "table2", "area", "extremal", "boundary", "sample-test", "lambda")

TABLE1_PARAMS = [(Fraction(2, 3), Fraction(1, 4)), (Fraction(2, 3), Fraction(2, 3)), (Fraction(2, 3), Fraction(5, 6)),
                 (Fraction(4, 5), Fraction(1, 4)), (Fraction(4, 5), Fraction(2, 3)), (Fraction(4, 5), Fraction(5, 6))]
TABLE2_ALPHAS = [Fraction(1, 4), Fraction(2, 3), Fraction(5, 6), Fraction(8, 9)]

TAIL_REL_TOL = 1e-8
MAX_AREA_ORDER = 1 << 14


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    alpha: float = 1.0
    beta: float = 0.0
    rho: list = field(default_factory=lambda: [1.0])
    order: int | None = None
    samples: int = 100
    seed: int = 0
    format: str | None = None
    output: Path | None = None
    function: str = "g"
    radius: float = 1.0
    points: int = 512
    rotation: float = 0.0
    input: Path | None = None
    exact: bool = False
    force_constant: list = field(default_factory=list)
    max_modulus: float = 1.0
    workers: int = 1

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command}")
        try:
            self.params = FamilyParams(self.alpha, self.beta)
        except StarlikeAreaError as exc:
            raise ConfigError(str(exc)) from None
        if any(not 0.0 < r <= 1.0 for r in self.rho):
            raise ConfigError("rho must lie in (0, 1]")
        if self.samples < 1:
            raise ConfigError("samples must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if self.order is not None and self.order < 1:
            raise ConfigError("order must be at least 1")
        if not 0.0 < self.max_modulus <= 1.0:
            raise ConfigError("max-modulus must lie in (0, 1]")
        allowed = {"table1": ("csv", "json"), "table2": ("csv", "json"), "boundary": ("csv", "svg")}
        fmt_ok = allowed.get(self.command, ("json",))
        self.format = self.format or fmt_ok[0]
        if self.format not in fmt_ok:
            raise ConfigError(f"{self.command} supports --format {'|'.join(fmt_ok)}")
        return self


def fmt6(x: float) -> str:
    return f"{x:.6g}"


def table1_rows() -> list[dict]:
    rows = []
    for beta, alpha in TABLE1_PARAMS:
        value = max_area(FamilyParams(float(alpha), float(beta)), 1.0)
        rows.append({"beta": str(beta), "alpha": str(alpha), "max_area": value})
    return rows


def table2_rows() -> list[dict]:
    return [{"alpha": str(a), "max_area": max_area_beta0(float(a), 1.0)} for a in TABLE2_ALPHAS]


def _render_table(rows, fmt):
    if fmt == "json":
        return json.dumps([{k: (fmt6(v) if isinstance(v, float) else v) for k, v in r.items()} for r in rows], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for r in rows:
        writer.writerow(fmt6(v) if isinstance(v, float) else v for v in r.values())
    return buf.getvalue()


def cmd_table1(cfg: RunConfig):
    return _render_table(table1_rows(), cfg.format), EXIT_OK


def cmd_table2(cfg: RunConfig):
    return _render_table(table2_rows(), cfg.format), EXIT_OK


def _area_with_tail_control(f_builder, rho, order):
    """Doubles the order until the tail term is below TAIL_REL_TOL * value."""
    while True:
        res = area_z_over_f(f_builder(order), rho)
        if res.tail_estimate <= TAIL_REL_TOL * res.value or order >= MAX_AREA_ORDER:
            break
        log.warning("tail %.3g exceeds %.0e of area at order %d; raising order", res.tail_estimate, TAIL_REL_TOL, order)
        order *= 2
    if res.tail_estimate > TAIL_REL_TOL * res.value:
        log.warning("tail still %.3g at order %d; area is a lower bound", res.tail_estimate, order)
    return res


def cmd_area(cfg: RunConfig):
    out = []
    for rho in cfg.rho:
        order = cfg.order or (HIGH_RADIUS_ORDER if rho > 0.9 else DEFAULT_ORDER)
        if cfg.input is not None:
            f = TruncatedSeries.from_json(Path(cfg.input).read_text())
            res = area_z_over_f(f, rho)
            if res.tail_estimate > TAIL_REL_TOL * res.value:
                log.warning("tail %.3g exceeds %.0e of area; supply a longer series", res.tail_estimate, TAIL_REL_TOL)
            entry = res.to_dict()
        else:
            res = _area_with_tail_control(lambda n: extremal_k(cfg.params, n), rho, order)
            entry = res.to_dict()
            entry["max_area"] = max_area(cfg.params, rho)
        entry["rho"] = rho
        out.append(entry)
    return json.dumps(out[0] if len(out) == 1 else out, indent=2) + "\n", EXIT_OK


def cmd_extremal(cfg: RunConfig):
    order = cfg.order or DEFAULT_ORDER
    if cfg.function == "k":
        series = extremal_k(cfg.params, order)
    else:
        series = extremal_g(cfg.params, order)
    return series.to_json() + "\n", EXIT_OK


def cmd_boundary(cfg: RunConfig):
    theta, w = boundary_curve(cfg.params, cfg.function, cfg.radius, cfg.points, cfg.rotation)
    if cfg.format == "svg":
        return curve_to_svg(w), EXIT_OK
    return curve_to_csv(theta, w), EXIT_OK


def cmd_sample_test(cfg: RunConfig):
    forced = [SchwarzSpec.constant(c) for c in cfg.force_constant]
    rho_grid = [r for r in cfg.rho if r < 1.0]
    if not rho_grid:
        raise ConfigError("sample-test needs rho < 1")
    report = conjecture_trial(cfg.params, rho_grid, cfg.samples, cfg.seed, order=cfg.order or HIGH_RADIUS_ORDER,
                              forced_specs=forced, max_modulus=cfg.max_modulus, workers=cfg.workers)
    status = EXIT_OK if report.passed else EXIT_VERIFY
    if not report.passed:
        log.error("%d sample(s) exceed the maximal area", len(report.violations))
    return json.dumps(report.to_dict(), indent=2) + "\n", status


def cmd_lambda(cfg: RunConfig):
    N = cfg.order or 10
    rho = cfg.rho[0]
    sol = solve_lambda(N, cfg.params, rho)
    data = sol.to_dict()
    ok = sol.all_positive and sol.max_residual < 1e-12
    if cfg.exact:
        exact = solve_lambda_exact(N, cfg.alpha, cfg.beta, rho)
        data["lambda_exact"] = [str(x) for x in exact]
        data["exact_all_positive"] = all(x > 0 for x in exact)
        ok = ok and data["exact_all_positive"]
    return json.dumps(data, indent=2) + "\n", EXIT_OK if ok else EXIT_VERIFY


HANDLERS = {
    "table1": cmd_table1,
    "table2": cmd_table2,
    "area": cmd_area,
    "extremal": cmd_extremal,
    "boundary": cmd_boundary,
    "sample-test": cmd_sample_test,
    "lambda": cmd_lambda,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "svg"))
    common.add_argument("--output", type=Path, help="write to PATH instead of stdout")
    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--alpha", type=float, default=1.0)
    family.add_argument("--beta", type=float, default=0.0)
    family.add_argument("--order", type=int)

    parser = argparse.ArgumentParser(prog="starlike-area", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table1", parents=[common], help="maximal areas at rho = 1 for six (beta, alpha)")
    sub.add_parser("table2", parents=[common], help="maximal areas at rho = 1 for beta = 0")

    p = sub.add_parser("area", parents=[common, family], help="area of the image of |z|<rho under z/f")
    p.add_argument("--rho", type=float, nargs="+", default=[1.0])
    p.add_argument("--input", type=Path, help="series JSON for f; default is the extremal k")

    p = sub.add_parser("extremal", parents=[common, family], help="Taylor coefficients of k or z/k")
    p.add_argument("--function", choices=("k", "g"), default="k")

    p = sub.add_parser("boundary", parents=[common, family], help="image curve of |z| = radius")
    p.add_argument("--function", choices=("k", "g"), default="g")
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--points", type=int, default=512)
    p.add_argument("--rotation", type=float, default=0.0)

    p = sub.add_parser("sample-test", parents=[common, family], help="seeded sampling test of the area bound")
    p.add_argument("--rho", type=float, nargs="+", default=[0.3, 0.6, 0.9])
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force-constant", type=complex, action="append", default=[],
                   help="use w = C for the next forced sample (repeatable)")
    p.add_argument("--max-modulus", type=float, default=1.0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("lambda", parents=[common, family], help="multipliers of the triangular system")
    p.add_argument("--rho", type=float, nargs=1, default=[1.0])
    p.add_argument("--exact", action="store_true", help="also solve in exact rational arithmetic")
    return parser


def main(argv=None) -> int:
    args = vars(build_parser().parse_args(argv))
    logging.basicConfig(level=logging.INFO if args.pop("verbose") else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        cfg = RunConfig(**args).validate()
        text, status = HANDLERS[cfg.command](cfg)
    except (ConfigError, StarlikeAreaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.output is not None:
        cfg.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
