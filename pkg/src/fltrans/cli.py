"""Command-line front end.

Subcommands:

    pairs      list the double-transform registry (optionally one row)
    verify     run mixed-domain verification of registry rows
    rte        evaluate the 2-D radiative transfer solution to CSV
    transform  forward/inverse radial Fourier transforms of named profiles

Exit status is 0 only when every requested check or row succeeded.  CSV
output uses a mandatory header row, LF line endings, UTF-8, and shortest
round-trip decimal formatting.  JSON reports embed "schema": 1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .numerics import DomainError, QuadratureSpec
from .pairs import (
    PAIR_IDS,
    UnknownPairError,
    catalog_list,
    catalog_lookup,
    lookup,
    registry_rows,
)
from .radial_fourier import Dimension, RadialProfile, forward_result, \
    inverse_result
from .rte2d import TransportParams, check_energy, intensity
from .verify import reports_to_text, verify_all

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


class ConfigError(ValueError):
    """Invalid or incomplete command configuration."""


@dataclass
class RunConfig:
    """Validated per-command configuration; computation starts only after
    validation passes."""

    command: str
    pair_id: Optional[str] = None
    dimensions: tuple = ()
    original_ids: tuple = ()
    params: Optional[TransportParams] = None
    k_grid: tuple = ()
    t_grid: tuple = ()
    r_grid: tuple = ()
    tolerance: float = 1e-6
    nodes: int = 48
    output_path: Optional[str] = None
    output_format: str = "text-table"
    energy: bool = False
    direction: str = "forward"
    profile: Optional[str] = None
    min_points: int = 20

    def validate(self) -> None:
        if self.command == "verify":
            if not self.dimensions:
                raise ConfigError("verify requires --dim")
            if any(d < 1 for d in self.dimensions):
                raise ConfigError("dimensions must be >= 1")
            if self.nodes < 4:
                raise ConfigError("--nodes must be >= 4")
            if not self.tolerance > 0:
                raise ConfigError("--tol must be positive")
        elif self.command == "rte":
            if self.params is None:
                raise ConfigError("rte requires --c, --ell and --A0")
            if not self.t_grid:
                raise ConfigError("rte requires --t")
            if not self.r_grid and not self.energy:
                raise ConfigError("rte requires --r (or --energy)")
        elif self.command == "transform":
            if self.direction not in ("forward", "inverse"):
                raise ConfigError("--direction must be forward or inverse")
            if not self.dimensions or self.dimensions[0] < 1:
                raise ConfigError("transform requires --dim >= 1")
            if self.profile is None:
                raise ConfigError("transform requires --profile")
            if not self.k_grid:
                raise ConfigError("transform requires --grid")
        if self.output_format not in ("csv", "json-report", "text-table"):
            raise ConfigError(f"unknown format {self.output_format!r}")


def _floats(text: str) -> tuple:
    try:
        return tuple(float(x) for x in text.split(",") if x != "")
    except ValueError:
        raise ConfigError(f"expected a comma-separated number list, got {text!r}")


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError:
        raise ConfigError(f"expected a comma-separated integer list, got {text!r}")


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_pairs_list(config: RunConfig) -> int:
    rows = registry_rows()
    if config.pair_id is not None:
        rows = (lookup(config.pair_id),)
    lines = ["id   dims      Fourier-Laplace side  <->  space-time side"]
    for row in rows:
        lines.append(f"{row.id}  {row.dim_note:8s}  {row.fl_text}  <->  "
                     f"{row.st_text}   [{row.note}]")
    _emit("\n".join(lines) + "\n", config.output_path)
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    spec = QuadratureSpec()
    if config.original_ids:
        originals = [catalog_lookup(oid) for oid in config.original_ids]
    else:
        originals = catalog_list()
    pair_ids = list(PAIR_IDS) if config.pair_id in (None, "all") \
        else [lookup(config.pair_id).id]
    reports = verify_all(config.dimensions, config.tolerance,
                         spec=spec, nodes=config.nodes, originals=originals,
                         pair_ids=pair_ids, min_points=config.min_points)
    if not reports:
        raise ConfigError(
            f"no admissible (pair, dimension) combinations for pair="
            f"{config.pair_id} dims={config.dimensions}")
    if config.output_format == "json-report":
        text = json.dumps([r.to_dict() for r in reports], indent=1) + "\n"
    else:
        text = reports_to_text(reports)
    _emit(text, config.output_path)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_rte(config: RunConfig) -> int:
    p = config.params
    spec = QuadratureSpec()
    rows = []
    for t in config.t_grid:
        for r in config.r_grid:
            if abs(r - p.c * t) <= 1e-9 * max(1.0, p.c * t):
                raise ConfigError(
                    f"grid point r = {r:g}, t = {t:g} sits on the ballistic "
                    f"shell r = c t; the smooth value is undefined there")
            value = intensity(p, r, t)
            rows.append((r, t, value.smooth, value.ballistic_weight))
    out = _csv_text(("r", "t", "smooth", "ballistic_weight"), rows)
    if config.energy:
        energy_rows = [(t, check_energy(p, t, spec)) for t in config.t_grid]
        energy_csv = _csv_text(("t", "energy"), energy_rows)
        if config.output_path is not None:
            _emit(out, config.output_path)
            _emit(energy_csv, config.output_path + ".energy.csv")
        else:
            _emit(out + energy_csv, None)
    else:
        _emit(out, config.output_path)
    return EXIT_OK


_PROFILES = {
    "gaussian": {
        "dims": (1, 2, 3, 4, 5, 6),
        "make": lambda d: RadialProfile(lambda r: math.exp(-0.5 * r * r),
                                        decay_class="gaussian"),
    },
    "exponential": {
        "dims": (1, 2, 3, 4, 5, 6),
        "make": lambda d: RadialProfile(lambda r: math.exp(-r),
                                        decay_class="exponential"),
    },
    "yukawa": {
        "dims": (2, 3),
        "make": lambda d: RadialProfile(
            lambda r: math.exp(-r) / r if r > 0 else 0.0,
            decay_class="exponential"),
    },
    "gaussian-image": {
        "dims": (1, 2, 3, 4, 5, 6),
        "make": lambda d: RadialProfile(
            lambda k: (2 * math.pi) ** (0.5 * d) * math.exp(-0.5 * k * k),
            decay_class="gaussian"),
    },
    "yukawa-image": {
        "dims": (2, 3),
        "make": lambda d: RadialProfile(
            (lambda k: 2 * math.pi / math.sqrt(1 + k * k)) if d == 2
            else (lambda k: 4 * math.pi / (1 + k * k)),
            decay_class="algebraic"),
    },
}


def cmd_transform(config: RunConfig) -> int:
    d = config.dimensions[0]
    entry = _PROFILES.get(config.profile)
    if entry is None:
        raise ConfigError(
            f"unknown profile {config.profile!r}; choices: "
            f"{', '.join(sorted(_PROFILES))}")
    if d not in entry["dims"]:
        raise ConfigError(
            f"profile {config.profile!r} is not defined for d = {d}")
    spec = QuadratureSpec(abs_tol=max(1e-14, 0.01 * config.tolerance),
                          rel_tol=config.tolerance)
    dim = Dimension(d)
    profile = entry["make"](d)
    hop = forward_result if config.direction == "forward" else inverse_result
    rows = []
    all_ok = True
    for x in config.k_grid:
        try:
            res = hop(dim, profile, x, spec)
            value, err, ok = float(res.value), res.error_estimate, res.converged
        except DomainError as exc:
            raise ConfigError(str(exc))
        all_ok = all_ok and ok
        rows.append((x, value, err, ok))
    _emit(_csv_text(("x", "value", "error_estimate", "converged"), rows),
          config.output_path)
    return EXIT_OK if all_ok else EXIT_FAILED


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fltrans",
        description="Simultaneous Fourier-Laplace double transforms: "
                    "registry, verification, and 2-D radiative transfer.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_pairs = sub.add_parser("pairs", help="list the transform-pair registry")
    p_pairs.add_argument("--id", dest="pair_id")
    p_pairs.add_argument("--out", dest="output_path")

    p_verify = sub.add_parser("verify", help="verify registry rows")
    p_verify.add_argument("--pair", dest="pair_id", default="all",
                          help="row id (e.g. 2.1), 2D-SDT, or 'all'")
    p_verify.add_argument("--dim", default="2,3",
                          help="comma-separated dimensions")
    p_verify.add_argument("--f", dest="originals", default="all",
                          help="catalog id like exp_decay:1 (comma-separated) "
                               "or 'all'")
    p_verify.add_argument("--tol", type=float, default=1e-6)
    p_verify.add_argument("--nodes", type=int, default=48)
    p_verify.add_argument("--min-points", type=int, default=20)
    p_verify.add_argument("--out", dest="output_path")
    p_verify.add_argument("--format", dest="output_format",
                          default="text-table",
                          choices=("text-table", "json-report"))

    p_rte = sub.add_parser("rte", help="2-D radiative transfer solution")
    p_rte.add_argument("--c", type=float, default=1.0)
    p_rte.add_argument("--ell", type=float, default=1.0)
    p_rte.add_argument("--A0", type=float, default=1.0)
    p_rte.add_argument("--t", default="", help="comma-separated times")
    p_rte.add_argument("--r", default="", help="comma-separated radii")
    p_rte.add_argument("--energy", action="store_true",
                       help="emit the t,energy companion table")
    p_rte.add_argument("--out", dest="output_path")

    p_tr = sub.add_parser("transform", help="radial Fourier transforms")
    p_tr.add_argument("--direction", choices=("forward", "inverse"),
                      default="forward")
    p_tr.add_argument("--dim", type=int, default=2)
    p_tr.add_argument("--profile", help=", ".join(sorted(_PROFILES)))
    p_tr.add_argument("--grid", default="", help="comma-separated k (or r)")
    p_tr.add_argument("--tol", type=float, default=1e-10,
                      help="relative quadrature tolerance")
    p_tr.add_argument("--out", dest="output_path")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "pairs":
        return RunConfig(command="pairs", pair_id=args.pair_id,
                         output_path=args.output_path)
    if args.command == "verify":
        original_ids = () if args.originals == "all" \
            else tuple(args.originals.split(","))
        return RunConfig(command="verify", pair_id=args.pair_id,
                         dimensions=_ints(args.dim),
                         original_ids=original_ids, tolerance=args.tol,
                         nodes=args.nodes, min_points=args.min_points,
                         output_path=args.output_path,
                         output_format=args.output_format)
    if args.command == "rte":
        try:
            params = TransportParams(args.c, args.ell, args.A0)
        except DomainError as exc:
            raise ConfigError(str(exc))
        return RunConfig(command="rte", params=params,
                         t_grid=_floats(args.t), r_grid=_floats(args.r),
                         energy=args.energy, output_path=args.output_path,
                         output_format="csv")
    if args.command == "transform":
        if not args.tol > 0:
            raise ConfigError("--tol must be positive")
        return RunConfig(command="transform", direction=args.direction,
                         dimensions=(args.dim,), profile=args.profile,
                         k_grid=_floats(args.grid), tolerance=args.tol,
                         output_path=args.output_path, output_format="csv")
    raise ConfigError(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        config.validate()
        handler = {
            "pairs": cmd_pairs_list,
            "verify": cmd_verify,
            "rte": cmd_rte,
            "transform": cmd_transform,
        }[config.command]
        return handler(config)
    except (ConfigError, UnknownPairError, DomainError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"fltrans: error: {message}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
