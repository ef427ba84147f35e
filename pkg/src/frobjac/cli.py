"""Command-line interface.

Exit codes: 0 success or passing verification, 1 failed verification,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from frobjac import frobenius as fb
from frobjac import wronskian as wr
from frobjac.errors import CapacityError, DimensionError, Inconclusive
from frobjac.harness import LAWS, SessionConfig, run_verification
from frobjac.polynomial import PolyMap, det_fraction_free, jacobian, jacobian_ideal_generators
from frobjac.textio import ParseError, parse_polynomial, print_canonical, read_polynomial_lines

MAP_COMMANDS = ("jacobian", "delta", "umatrix", "wronskian", "represent", "basis-check")


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, default=2, help="field characteristic (prime, 2..13)")
    common.add_argument("-n", type=int, default=None, help="number of variables (default: inferred from the map)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--max-degree", type=int, default=3)
    common.add_argument("--max-terms", type=int, default=4)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="frobjac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in MAP_COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "represent":
            sp.add_argument("g", help="polynomial to represent")
        sp.add_argument("map", nargs="?", help="components separated by ';'")
        sp.add_argument("--file", help="read the map from a file, one component per line")
        if name == "wronskian":
            sp.add_argument("--order", "-r", type=int, default=None, help="Wronskian order r (default p)")
    sp = sub.add_parser("ideal-gens", parents=[common])
    sp.add_argument("generators", nargs="?", help="polynomials separated by ';'")
    sp.add_argument("--file")
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("law", help="one of: " + ", ".join(LAWS))
    return parser


def _split(text: str | None, path: str | None) -> list[str]:
    if path:
        return read_polynomial_lines(path)
    if text is None:
        raise UsageError("no polynomials given (pass them inline or with --file)")
    return [s.strip() for s in text.split(";") if s.strip()]


def _config(args, n: int) -> SessionConfig:
    try:
        return SessionConfig(
            p=args.p,
            n=n,
            seed=args.seed,
            trials=args.trials,
            max_degree=args.max_degree,
            max_terms=args.max_terms,
            output=args.output,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _read_map(args) -> tuple[PolyMap, SessionConfig]:
    parts = _split(args.map, args.file)
    n = args.n if args.n is not None else len(parts)
    cfg = _config(args, n)
    if len(parts) != n:
        raise UsageError(f"map has {len(parts)} components but n = {n}")
    return PolyMap(parse_polynomial(s, cfg.p, n) for s in parts), cfg


def _matrix(M) -> list[list[str]]:
    return [[print_canonical(x) for x in row] for row in M]


def _mi(a) -> str:
    return "(" + ",".join(map(str, a)) + ")"


def execute(args) -> tuple[dict, object, int]:
    """Run one subcommand; returns (inputs, result, exit code)."""
    cmd = args.command
    if cmd == "verify":
        if args.law not in LAWS:
            raise UsageError(f"unknown law {args.law!r}; choose from {', '.join(LAWS)}")
        cfg = _config(args, args.n if args.n is not None else 1)
        if args.law == "formula5" and cfg.n != 1:
            raise UsageError("formula5 needs -n 1")
        report = run_verification(args.law, cfg)
        inputs = {
            "law": args.law,
            "p": cfg.p,
            "n": cfg.n,
            "seed": cfg.seed,
            "trials": cfg.trials,
            "max_degree": cfg.max_degree,
            "max_terms": cfg.max_terms,
        }
        return inputs, report, 0 if report.passed else 1
    if cmd == "ideal-gens":
        parts = _split(args.generators, args.file)
        if args.n is None:
            raise UsageError("ideal-gens needs -n")
        cfg = _config(args, args.n)
        G = [parse_polynomial(s, cfg.p, cfg.n) for s in parts]
        if len(G) < cfg.n:
            raise UsageError(f"need at least n = {cfg.n} generators, got {len(G)}")
        inputs = {"p": cfg.p, "n": cfg.n, "generators": [print_canonical(g) for g in G]}
        return inputs, [print_canonical(j) for j in jacobian_ideal_generators(G)], 0

    F, cfg = _read_map(args)
    inputs = {"p": cfg.p, "n": cfg.n, "map": [print_canonical(f) for f in F]}
    if cmd == "jacobian":
        return inputs, print_canonical(jacobian(F)), 0
    if cmd == "delta":
        return inputs, print_canonical(fb.delta(F)), 0
    if cmd == "umatrix":
        return inputs, _matrix(fb.u_matrix(F)), 0
    if cmd == "basis-check":
        return inputs, fb.is_frobenius_basis(F), 0
    if cmd == "wronskian":
        r = args.order if args.order is not None else cfg.p
        try:
            W = wr.wronskian_matrix(F, r)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        inputs["order"] = r
        return inputs, {"matrix": _matrix(W), "det": print_canonical(det_fraction_free(W))}, 0
    if cmd == "represent":
        g = parse_polynomial(args.g, cfg.p, cfg.n)
        inputs["g"] = print_canonical(g)
        coeffs = fb.represent_delta_multiple(g, F)
        return inputs, {
            "delta": print_canonical(fb.delta(F)),
            "coefficients": {_mi(b): print_canonical(c) for b, c in coeffs.items()},
        }, 0
    raise UsageError(f"unknown command {cmd!r}")


def render_text(cmd: str, result) -> str:
    if cmd == "verify":
        r = result
        status = "PASS" if r.passed else "FAIL"
        lines = [f"{r.law}: {status} {r.trials - r.failures}/{r.trials}"]
        if r.tag_counts:
            lines.append("  " + ", ".join(f"{k}={v}" for k, v in r.tag_counts.items()))
        if r.first_counterexample:
            lines.append(f"  first counterexample: {r.first_counterexample}")
        return "\n".join(lines)
    if isinstance(result, bool):
        return "true" if result else "false"
    if isinstance(result, str):
        return result
    if isinstance(result, list) and result and isinstance(result[0], list):
        return "\n".join("[" + ", ".join(row) + "]" for row in result)
    if isinstance(result, list):
        return "\n".join(result)
    if cmd == "wronskian":
        return render_text("", result["matrix"]) + f"\ndet = {result['det']}"
    if cmd == "represent":
        lines = [f"delta = {result['delta']}"]
        lines += [f"{b}: {c}" for b, c in result["coefficients"].items()]
        return "\n".join(lines)
    return str(result)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        inputs, result, code = execute(args)
    except (UsageError, ParseError, DimensionError, CapacityError, Inconclusive, ValueError, OSError) as exc:
        print(f"frobjac: error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    if args.output == "json":
        payload = result.to_dict() if args.command == "verify" else result
        doc = {
            "command": args.command,
            "inputs": inputs,
            "result": payload,
            "timing": {"seconds": round(elapsed, 6)} if args.timing else None,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(render_text(args.command, result))
        if args.timing:
            print(f"time: {elapsed:.3f}s")
    return code


if __name__ == "__main__":
    sys.exit(main())
