"""Command-line surface: eval, zeros, verify, report.

Configuration precedence: built-in defaults < JSON file named by the
ZETASCOPE_CONFIG environment variable < command-line flags. Data files are
byte-deterministic for identical configuration; run parameters live in a
sidecar field of the JSON report, never timestamps.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

from . import convergence, functional_eq, series, zeros as zeros_mod
from .errors import ZetascopeError
from .euler_maclaurin import EulerMaclaurinConfig, remainder, zeta_hat_reference
from .zeros import ZeroRecord

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MODULE_ERROR = 2
EXIT_CLAIMS_FAILED = 3

REPORT_SCHEMA = 1

_QUANTITIES = (
    "zeta_n",
    "xi_n",
    "zeta_hat_n",
    "zeta_hat",
    "H_hat",
    "H_hat_n",
    "H_n",
    "h_2n",
    "g_2n",
    "R_n",
)
_N_DEPENDENT = {"zeta_n", "xi_n", "zeta_hat_n", "H_hat_n", "H_n", "h_2n", "g_2n", "R_n"}

ZEROS_CSV_COLUMNS = (
    "index",
    "t",
    "re_rho",
    "im_rho",
    "residual",
    "bracket_lo",
    "bracket_hi",
)


@dataclass(frozen=True)
class RunConfig:
    """Validated run-wide defaults; flags override file values."""

    em: EulerMaclaurinConfig = field(default_factory=EulerMaclaurinConfig)
    n0: int = 64
    doublings: int = 10
    t_min: float = 10.0
    t_max: float = 50.0
    step: float = 0.05
    out_format: str = "json"

    def __post_init__(self):
        if self.n0 < 1:
            raise ZetascopeError(f"n0 must be positive, got {self.n0}")
        if self.out_format not in ("csv", "json"):
            raise ZetascopeError(f"format must be csv or json, got {self.out_format}")


def load_config(env: dict | None = None) -> RunConfig:
    """Defaults, overlaid with the flat dotted-key JSON file from
    ZETASCOPE_CONFIG when set."""
    env = env if env is not None else os.environ
    path = env.get("ZETASCOPE_CONFIG")
    cfg = RunConfig()
    if not path:
        return cfg
    with open(path) as fh:
        data = json.load(fh)
    em_kwargs = {}
    for key, attr in (
        ("em.depth", "depth"),
        ("em.n_base", "n_base"),
        ("em.target_rel_error", "target_rel_error"),
        ("em.window_C", "window_C"),
    ):
        if key in data:
            em_kwargs[attr] = data[key]
    if em_kwargs:
        cfg = replace(cfg, em=replace(cfg.em, **em_kwargs))
    for key in ("n0", "doublings", "t_min", "t_max", "step", "out_format"):
        if key in data:
            cfg = replace(cfg, **{key: data[key]})
    return cfg


def parse_complex(text: str) -> complex:
    """Accepts '2', '0.5+14.1i', '-1.5-3e-2i' (i or j suffix)."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise ZetascopeError(f"cannot parse complex value {text!r}") from exc


def _format_real(x: float, signed: bool = False) -> str:
    sign = "+" if signed else ""
    if x == 0:
        return "+0" if signed else "0"
    if 1e-4 <= abs(x) < 1e16:
        return f"{x:{sign}.15f}"
    return f"{x:{sign}.15e}"


def format_value(v: complex) -> str:
    """15 digits after the point; drops a numerically-silent imaginary part."""
    if v == 0:
        return "0"
    if abs(v.imag) <= 1e-14 * max(1.0, abs(v.real)):
        return _format_real(v.real)
    return _format_real(v.real) + _format_real(v.imag, signed=True) + "i"


def _eval_quantity(what: str, z: complex, n: int, em: EulerMaclaurinConfig) -> complex:
    if what == "zeta_n":
        return series.zeta_partial(z, n)
    if what == "xi_n":
        return series.xi_partial(z, n)
    if what == "zeta_hat_n":
        return series.zeta_hat_partial(z, n)
    if what == "zeta_hat":
        return zeta_hat_reference(z, em)
    if what == "H_hat":
        return functional_eq.h_hat_exact(z)
    if what == "H_hat_n":
        return functional_eq.h_hat_n(z, n)
    if what == "H_n":
        return functional_eq.h_n(z, n)
    if what == "h_2n":
        return functional_eq.small_h_2n(z, n)
    if what == "g_2n":
        return functional_eq.small_g_2n(z, n)
    if what == "R_n":
        return remainder(z, n, em)
    raise ZetascopeError(f"unknown quantity {what!r}")


def cmd_eval(args, cfg: RunConfig) -> int:
    if args.z is not None:
        z = parse_complex(args.z)
    elif args.re is not None:
        z = complex(args.re, args.im or 0.0)
    else:
        print("usage error: provide --z or --re/--im", file=sys.stderr)
        return EXIT_USAGE
    if args.what not in _QUANTITIES:
        print(
            f"usage error: unknown quantity {args.what!r}; choose from "
            + ", ".join(_QUANTITIES),
            file=sys.stderr,
        )
        return EXIT_USAGE
    n = args.n if args.n is not None else 1024
    value = _eval_quantity(args.what, z, n, cfg.em)
    print(format_value(value))
    if args.what in _N_DEPENDENT:
        print(f"n = {n}")
    return EXIT_OK


def write_zeros_csv(records: list[ZeroRecord], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(ZEROS_CSV_COLUMNS)
        for r in records:
            writer.writerow(
                [
                    r.index,
                    repr(r.t),
                    repr(r.rho.real),
                    repr(r.rho.imag),
                    repr(r.residual),
                    repr(r.bracket[0]),
                    repr(r.bracket[1]),
                ]
            )


def read_zeros_csv(path: Path) -> list[ZeroRecord]:
    records = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            records.append(
                ZeroRecord(
                    index=int(row["index"]),
                    t=float(row["t"]),
                    rho=complex(float(row["re_rho"]), float(row["im_rho"])),
                    bracket=(float(row["bracket_lo"]), float(row["bracket_hi"])),
                    residual=float(row["residual"]),
                )
            )
    return records


def cmd_zeros(args, cfg: RunConfig) -> int:
    t_min = args.t_min if args.t_min is not None else cfg.t_min
    t_max = args.t_max if args.t_max is not None else cfg.t_max
    step = args.step if args.step is not None else cfg.step
    if not t_min < t_max:
        print(
            f"usage error: need t_min < t_max, got ({t_min}, {t_max})",
            file=sys.stderr,
        )
        return EXIT_USAGE
    records = zeros_mod.find_zeros(t_min, t_max, step, cfg.em)
    write_zeros_csv(records, Path(args.out))
    print(len(records))
    return EXIT_OK


def _claims_for_one(payload):
    zero, plan = payload
    return convergence._claims_for_zero(zero, plan)


def cmd_verify(args, cfg: RunConfig) -> int:
    zeros_path = Path(args.zeros)
    if not zeros_path.exists():
        print(f"error: zeros file {zeros_path} does not exist", file=sys.stderr)
        return EXIT_USAGE
    records = read_zeros_csv(zeros_path)
    n0 = args.n0 if args.n0 is not None else cfg.n0
    doublings = args.doublings if args.doublings is not None else cfg.doublings
    if doublings < 4:
        print(
            f"usage error: verification needs at least 4 doublings, got {doublings}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    plan = convergence.SweepPlan(n0=n0, doublings=doublings, cfg=cfg.em)
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_claims_for_one, [(z, plan) for z in records])
        rows = [row for chunk in chunks for row in chunk]
    else:
        rows = convergence.verify_claims(records, plan)
    report = {
        "schema": REPORT_SCHEMA,
        "run": {
            "n0": n0,
            "doublings": doublings,
            "zeros_file": str(zeros_path),
            "zero_count": len(records),
        },
        "results": [r.as_dict() for r in rows],
    }
    with open(args.out, "w") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
    failing = [r for r in rows if not r.passed]
    if failing:
        print(f"{len(failing)} claim(s) failed:")
        for r in failing:
            print(f"  zero {r.zero_index} {r.claim}: measured {r.measured} "
                  f"(tolerance {r.tolerance:g}) {r.detail}")
        return EXIT_CLAIMS_FAILED
    print(f"all {len(rows)} claims passed")
    return EXIT_OK


def cmd_report(args, cfg: RunConfig) -> int:
    path = Path(getattr(args, "in"))
    if not path.exists():
        print(f"error: report file {path} does not exist", file=sys.stderr)
        return EXIT_USAGE
    report = json.loads(path.read_text())
    rows = report["results"]
    header = ("zero", "claim", "expected", "measured", "tol", "pass")
    widths = [len(h) for h in header]
    table = []
    for r in rows:
        line = (
            str(r["zero_index"]),
            r["claim"],
            str(r["expected"]),
            str(r["measured"]),
            f"{r['tolerance']:g}",
            "yes" if r["pass"] else "NO",
        )
        widths = [max(w, len(c)) for w, c in zip(widths, line)]
        table.append(line)
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    print(fmt.format(*header))
    for line in table:
        print(fmt.format(*line))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetascope",
        description="Zeta partial sums, critical-line zeros, and convergence checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one quantity at a point")
    p_eval.add_argument("--z", help="complex point, e.g. 0.5+14.13i")
    p_eval.add_argument("--re", type=float, help="real part (alternative to --z)")
    p_eval.add_argument("--im", type=float, help="imaginary part")
    p_eval.add_argument("--what", required=True, help="quantity name")
    p_eval.add_argument("--n", type=int, help="truncation length for finite sums")

    p_zeros = sub.add_parser("zeros", help="scan for critical-line zeros")
    p_zeros.add_argument("--t-min", type=float, dest="t_min")
    p_zeros.add_argument("--t-max", type=float, dest="t_max")
    p_zeros.add_argument("--step", type=float)
    p_zeros.add_argument("--out", default="zeros.csv")

    p_verify = sub.add_parser("verify", help="run the claim checks at each zero")
    p_verify.add_argument("--zeros", required=True, help="zeros CSV from the scan")
    p_verify.add_argument("--n0", type=int)
    p_verify.add_argument("--doublings", type=int)
    p_verify.add_argument("--out", default="report.json")
    p_verify.add_argument("--jobs", type=int, default=0, help="0 = all cores")

    p_report = sub.add_parser("report", help="pretty-print a JSON report")
    p_report.add_argument("--in", default="report.json")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config()
    except (OSError, json.JSONDecodeError, ZetascopeError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    handlers = {
        "eval": cmd_eval,
        "zeros": cmd_zeros,
        "verify": cmd_verify,
        "report": cmd_report,
    }
    try:
        return handlers[args.command](args, cfg)
    except ZetascopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODULE_ERROR


if __name__ == "__main__":
    sys.exit(main())
