"""Command-line interface.

    bernoulli-check <command> [args] [--format text|json] [--cache PATH] [--workers N]

Exit status: 0 when every check passes, 1 when at least one identity or
number-theory check fails (the full report is still printed), 2 on usage or
I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import cache as cache_io
from .exact import padic_valuation, primes_upto, to_str
from .identities import (
    DEFAULT_D_MAX,
    IdentityId,
    SuiteReport,
    p_integrality_eq1,
    render,
    run_suite,
)
from .sequences import (
    CACHE,
    bernoulli_number,
    bernoulli_poly,
    euler_poly,
    harmonic,
    vsc_check,
    vsc_primes,
    wolstenholme_check,
)
from .series import bernoulli_egf, bernoulli_poly_egf, euler_poly_egf

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

COMPUTE_KINDS = ("bn", "bpoly", "epoly", "harmonic", "harmonic2", "egf")
EGF_FAMILIES = {
    "bernoulli": bernoulli_egf,
    "bernoulli-poly": bernoulli_poly_egf,
    "euler-poly": euler_poly_egf,
}


class UsageError(Exception):
    pass


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", metavar="PATH", help="Bernoulli number cache file")
    common.add_argument("--workers", type=int, default=1, metavar="N")

    parser = argparse.ArgumentParser(
        prog="bernoulli-check",
        description="Exact Bernoulli/Euler computations and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    for kind in COMPUTE_KINDS:
        p = sub.add_parser(kind, parents=[common], help=f"compute {kind}")
        p.add_argument("n", type=_nonnegative, help="index (truncation order for egf)")
        if kind == "egf":
            p.add_argument("--family", choices=sorted(EGF_FAMILIES), default="bernoulli")

    p = sub.add_parser("verify", parents=[common], help="verify identities")
    p.add_argument("ids", nargs="+", help="identity ids or 'all'")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--d", type=_nonnegative, default=DEFAULT_D_MAX, help="largest d for eq6")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing reports too")

    p = sub.add_parser("vsc", parents=[common], help="von Staudt-Clausen check")
    p.add_argument("--k-max", type=int, default=50)
    for name in ("wolstenholme", "pintegral"):
        p = sub.add_parser(name, parents=[common], help=f"{name} check for primes below --p-max")
        p.add_argument("--p-max", type=int, default=200)

    p = sub.add_parser("cache", parents=[common], help="save or load the Bernoulli cache")
    p.add_argument("mode", choices=("save", "load"))
    p.add_argument("path", nargs="?", help="cache file (defaults to --cache)")
    p.add_argument("--n", type=_nonnegative, default=100, help="largest index to save")
    return parser


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_compute(args: argparse.Namespace) -> int:
    kind, n = args.command, args.n
    if kind == "egf":
        series = EGF_FAMILIES[args.family](n)
        coeffs = [render(c) for c in series.coeffs]
        payload = {"kind": kind, "family": args.family, "order": n, "coefficients": coeffs}
        text = "\n".join(f"t^{k}: {c}" for k, c in enumerate(coeffs))
        _emit(args, payload, text)
        return EXIT_OK
    if kind == "bn":
        value = to_str(bernoulli_number(n))
    elif kind == "bpoly":
        value = str(bernoulli_poly(n))
    elif kind == "epoly":
        value = str(euler_poly(n))
    elif kind == "harmonic":
        value = to_str(harmonic(n, 1))
    else:
        value = to_str(harmonic(n, 2))
    _emit(args, {"kind": kind, "n": n, "value": value}, value)
    return EXIT_OK


def _parse_ids(raw: Sequence[str]) -> list[IdentityId]:
    ids: list[IdentityId] = []
    for token in raw:
        for part in token.split(","):
            part = part.strip()
            if not part:
                continue
            if part.lower() == "all":
                ids.extend(IdentityId)
                continue
            try:
                ids.append(IdentityId.parse(part))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    if not ids:
        raise UsageError("no identity ids given")
    return ids


def _format_params(params: dict[str, Any]) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def render_suite_text(report: SuiteReport, verbose: bool = False) -> str:
    lines = []
    for r in report.reports:
        if verbose or not r.equal:
            status = "ok  " if r.equal else "FAIL"
            line = f"{status} {r.id.value} {_format_params(r.params)}: lhs = {r.lhs}; rhs = {r.rhs}"
            if r.witness:
                line += f"; witness: {r.witness}"
            lines.append(line)
    for ident, entry in report.summary()["identities"].items():
        verdict = "PASS" if entry["failed"] == 0 else "FAIL"
        lines.append(f"{ident:<17} {entry['checked']:>6} checked {entry['failed']:>6} failed  {verdict}")
    overall = "PASS" if report.passed else "FAIL"
    lines.append(f"overall: {overall} ({len(report.reports)} checks, {len(report.failures)} failed)")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    ids = _parse_ids(args.ids)
    if args.n_max is not None and args.n_max < 1:
        raise UsageError(f"--n-max must be >= 1, got {args.n_max}")
    report = run_suite(ids, args.n_max, d_max=args.d, workers=args.workers)
    payload = {"command": "verify", **report.to_dict()}
    _emit(args, payload, render_suite_text(report, args.verbose))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _number_theory_results(kind: str, bound: int) -> list[dict[str, Any]]:
    results = []
    if kind == "vsc":
        if bound < 1:
            raise UsageError(f"--k-max must be >= 1, got {bound}")
        for k in range(1, bound + 1):
            primes = vsc_primes(k)
            results.append({
                "params": {"k": k},
                "passed": vsc_check(k),
                "detail": f"B_{2 * k} = {to_str(bernoulli_number(2 * k))}, primes {primes}",
            })
        return results
    if bound <= 5:
        raise UsageError(f"--p-max must exceed 5, got {bound}")
    for p in (q for q in primes_upto(bound - 1) if q >= 5):
        if kind == "wolstenholme":
            detail = (f"v_p(H_{p - 1}) = {padic_valuation(harmonic(p - 1), p)}, "
                      f"v_p(H2_{p - 1}) = {padic_valuation(harmonic(p - 1, 2), p)}")
            results.append({"params": {"p": p}, "passed": wolstenholme_check(p), "detail": detail})
        else:
            r = p_integrality_eq1(p)
            results.append({"params": {"p": p}, "passed": r.equal,
                            "detail": r.witness or f"p-integral: {r.lhs}"})
    return results


def cmd_numbertheory(args: argparse.Namespace) -> int:
    bound = args.k_max if args.command == "vsc" else args.p_max
    results = _number_theory_results(args.command, bound)
    failed = [r for r in results if not r["passed"]]
    summary = {"passed": not failed, "checked": len(results), "failed": len(failed)}
    lines = [
        f"{'ok  ' if r['passed'] else 'FAIL'} {args.command} {_format_params(r['params'])}: {r['detail']}"
        for r in results
    ]
    lines.append(f"overall: {'PASS' if not failed else 'FAIL'} ({len(results)} checks, {len(failed)} failed)")
    _emit(args, {"command": args.command, "results": results, "summary": summary}, "\n".join(lines))
    return EXIT_OK if not failed else EXIT_MISMATCH


def cmd_cache(args: argparse.Namespace) -> int:
    path = args.path or args.cache
    if not path:
        raise UsageError("cache command needs a path (positional or --cache)")
    if args.mode == "save":
        cache_io.save(path, args.n + 1)
        msg = f"saved B_0..B_{args.n} to {path}"
        payload = {"command": "cache", "mode": "save", "path": str(path), "count": args.n + 1}
    else:
        count = cache_io.load(path)
        msg = f"loaded {count} Bernoulli numbers from {path}"
        payload = {"command": "cache", "mode": "load", "path": str(path), "count": count}
    _emit(args, payload, msg)
    return EXIT_OK


def _dispatch(args: argparse.Namespace) -> int:
    if args.command in COMPUTE_KINDS:
        return cmd_compute(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command in ("vsc", "wolstenholme", "pintegral"):
        return cmd_numbertheory(args)
    return cmd_cache(args)


def _error(message: str) -> None:
    print(f"bernoulli-check: error: {message}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.workers < 1:
        _error("--workers must be >= 1")
        return EXIT_USAGE

    use_cache = args.cache and args.command != "cache"
    try:
        if use_cache and Path(args.cache).exists():
            cache_io.load(args.cache)
        before = len(CACHE.bernoulli)
        status = _dispatch(args)
        if use_cache and (len(CACHE.bernoulli) > before or not Path(args.cache).exists()):
            cache_io.save(args.cache, len(CACHE.bernoulli))
        return status
    except (UsageError, cache_io.CacheError, ValueError, OSError) as exc:
        _error(str(exc))
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - exit codes are a contract
        _error(f"internal error: {exc!r}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
