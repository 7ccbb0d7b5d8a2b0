"""Command-line front end: trial-factor scans, complete factorizations, and
direct Gauss-sum evaluation, with CSV/JSON output and plot-ready data."""

import argparse
import json
import math
import sys
from dataclasses import asdict

from .core import ConfigurationError, FactorizationTarget, gauss_sum_exact
from .methods import DifferentialParams, SpatialParams
from .scanner import (
    Method,
    ScanConfig,
    ScanRecord,
    ScanResult,
    full_factorize,
    scan,
)


def _decimal_int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal integer") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussfactor",
        description="Factor integers by scanning trial factors with simulated "
        "Gauss-sum pulse sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_target(p):
        p.add_argument(
            "--n",
            required=True,
            type=_decimal_int,
            metavar="N",
            help="number to factor (decimal, arbitrary size)",
        )
        p.add_argument(
            "--exponent",
            type=int,
            default=2,
            help="power of the pulse index in the phase (default 2)",
        )

    def add_method(p):
        p.add_argument(
            "--method", required=True, choices=[m.value for m in Method]
        )
        p.add_argument(
            "--m",
            required=True,
            type=int,
            help="truncation number M (the sequence applies M+1 pulses)",
        )
        p.add_argument(
            "--theta-deg",
            type=float,
            default=None,
            help="differential flip angle in degrees (default 1.0); "
            "the spatial flip angle is fixed at pi/(M+1)",
        )
        p.add_argument(
            "--slices",
            type=int,
            default=None,
            help="spatial gradient slices (default 256)",
        )
        p.add_argument(
            "--windings",
            type=int,
            default=None,
            help="full dephasing turns across the sample (default 1)",
        )
        p.add_argument("--threshold", type=float, default=0.7)
        p.add_argument("--jobs", type=int, default=1)

    p_scan = sub.add_parser("scan", help="sweep a trial-factor range")
    add_target(p_scan)
    add_method(p_scan)
    p_scan.add_argument("--j-min", required=True, type=int)
    p_scan.add_argument("--j-max", required=True, type=int)
    p_scan.add_argument("--format", choices=["csv", "json"], default="csv")
    p_scan.add_argument("--out", default=None, help="result file path")
    p_scan.add_argument("--plot-out", default=None, help="plot-ready data path")
    p_scan.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the timestamp from JSON output",
    )

    p_fact = sub.add_parser("factorize", help="factor completely")
    add_target(p_fact)
    add_method(p_fact)

    p_gauss = sub.add_parser("gauss-sum", help="evaluate one truncated Gauss sum")
    add_target(p_gauss)
    p_gauss.add_argument("--j", required=True, type=int)
    p_gauss.add_argument("--m", required=True, type=int)

    return parser


def _build_params(args) -> tuple[Method, DifferentialParams | SpatialParams]:
    method = Method(args.method)
    if method is Method.DIFFERENTIAL:
        if args.slices is not None or args.windings is not None:
            raise ConfigurationError(
                "--slices/--windings apply to the spatial method only"
            )
        theta_deg = 1.0 if args.theta_deg is None else args.theta_deg
        return method, DifferentialParams(theta=math.radians(theta_deg))
    if args.theta_deg is not None:
        raise ConfigurationError(
            "--theta-deg applies to the differential method only; "
            "the spatial flip angle is fixed at pi/(M+1)"
        )
    return method, SpatialParams(
        n_slices=256 if args.slices is None else args.slices,
        windings=1 if args.windings is None else args.windings,
    )


def result_to_json(result: ScanResult) -> dict:
    data = {
        "n": result.n,
        "exponent": result.exponent,
        "method": result.method.value,
        "m": result.truncation,
        "threshold": result.threshold,
        "params": result.params,
        "records": [asdict(r) for r in result.records],
    }
    if result.timestamp is not None:
        data["timestamp"] = result.timestamp
    return data


def result_from_json(data: dict) -> ScanResult:
    return ScanResult(
        n=data["n"],
        exponent=data["exponent"],
        method=Method(data["method"]),
        truncation=data["m"],
        threshold=data["threshold"],
        params=dict(data["params"]),
        records=tuple(ScanRecord(**r) for r in data["records"]),
        timestamp=data.get("timestamp"),
    )


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def _csv_text(result: ScanResult) -> str:
    lines = ["j,normalized,classified,arithmetic_check"]
    for r in result.records:
        lines.append(
            f"{r.j},{r.normalized:.9f},"
            f"{_bool_text(r.classified)},{_bool_text(r.arithmetic_check)}"
        )
    return "\n".join(lines) + "\n"


def emit_results(result: ScanResult, fmt: str, path) -> None:
    """Write scan records as CSV (normalized to 9 decimals) or JSON."""
    if fmt not in ("csv", "json"):
        raise ConfigurationError(f"unknown output format {fmt!r}")
    with open(path, "w") as f:
        if fmt == "csv":
            f.write(_csv_text(result))
        else:
            json.dump(result_to_json(result), f, indent=2)
            f.write("\n")


def emit_plot_data(result: ScanResult, path) -> None:
    """Two-column (j, normalized) text for external plotting tools."""
    with open(path, "w") as f:
        f.write(f"# N={result.n} method={result.method.value} M={result.truncation}\n")
        for r in result.records:
            f.write(f"{r.j} {r.normalized:.9f}\n")


def _cmd_scan(args) -> int:
    target = FactorizationTarget(args.n, exponent=args.exponent)
    method, params = _build_params(args)
    cfg = ScanConfig(
        method=method,
        j_min=args.j_min,
        j_max=args.j_max,
        truncation=args.m,
        threshold=args.threshold,
        params=params,
    )
    result = scan(target, cfg, jobs=args.jobs, with_timestamp=not args.no_timestamp)
    if args.out is not None:
        emit_results(result, args.format, args.out)
    if args.plot_out is not None:
        emit_plot_data(result, args.plot_out)
    found = [r.j for r in result.records if r.classified]
    failed = sum(1 for r in result.records if r.error is not None)
    print(
        f"N={target.n} method={method.value} M={args.m} "
        f"j=[{args.j_min},{args.j_max}] threshold={cfg.threshold}"
    )
    print(
        "classified factors: "
        + (", ".join(str(j) for j in found) if found else "none")
    )
    if failed:
        print(f"warning: {failed} trial factors failed to evaluate", file=sys.stderr)
    return 0


def _cmd_factorize(args) -> int:
    target = FactorizationTarget(args.n, exponent=args.exponent)
    method, params = _build_params(args)
    cfg = ScanConfig(
        method=method,
        j_min=2,
        j_max=2,  # range fields are overridden every round
        truncation=args.m,
        threshold=args.threshold,
        params=params,
    )
    factors = full_factorize(target, cfg, jobs=args.jobs)
    parts: list[str] = []
    for f, k in factors:
        parts.extend([str(f)] * k)
    print(f"{target.n} = " + " × ".join(parts))
    return 0


def _cmd_gauss_sum(args) -> int:
    target = FactorizationTarget(args.n, exponent=args.exponent)
    value = gauss_sum_exact(target, args.j, args.m)
    print(f"{value.magnitude:.6f}")
    return 0


_COMMANDS = {
    "scan": _cmd_scan,
    "factorize": _cmd_factorize,
    "gauss-sum": _cmd_gauss_sum,
}


def run(argv: list[str]) -> int:
    """Execute one invocation; 0 on success, 2 on a configuration error,
    1 on a runtime error."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the message
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
