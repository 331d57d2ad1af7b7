"""Command-line entry point.

Exit status: 0 when every check passes, 1 when a check fails, 2 for usage
errors, unreadable or malformed algebra files and refused inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from ..errors import ResenvError
from ..liealg import RestrictedLieAlgebra, validate
from ..radical import jacobson_radical
from .report import SCHEMA_VERSION
from .scenarios import SCENARIOS
from .specfile import load_algebra

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_ALGEBRA = {
    "locally-finite": "builtin:heisenberg",
    "free-module": "builtin:heisenberg",
    "semiperfect-abelian": "builtin:torus-plus-nil",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _elements(L: RestrictedLieAlgebra, text: str | None):
    if text is None:
        return None
    return [L.parse_element(part) for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="resenv", description="Restricted Lie algebras and restricted enveloping algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_flags(p):
        p.add_argument("--report", choices=("json", "text"), default="text")
        p.add_argument("--out", type=Path, help="write the report to this file instead of stdout")

    p = sub.add_parser("validate", help="check the restricted Lie algebra axioms")
    p.add_argument("--algebra", required=True, help="JSON file or builtin:NAME[?key=value&...]")
    output_flags(p)

    p = sub.add_parser("verify", help="run a verification scenario")
    p.add_argument("scenario", choices=sorted(SCENARIOS))
    p.add_argument("--algebra", help="JSON file or builtin:NAME[?key=value&...]")
    p.add_argument("--m", type=int, default=2, help="number of indeterminates (perfect-field)")
    p.add_argument("--r", type=int, default=2, help="power depth 2^r (perfect-field)")
    p.add_argument("--k", type=int, default=3, help="torus chain length")
    p.add_argument("--p", type=int, default=2, help="characteristic (torus-chain)")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--ideal", help="comma-separated generators of P (locally-finite)")
    p.add_argument("--subalgebra", help="comma-separated generators of H (free-module)")
    p.add_argument("--chain", help="comma-separated chain x_1,x_2,... (free-module)")
    p.add_argument("--sabotage", action="store_true", help="negative control: y_1^[2] = 0 (perfect-field)")
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    output_flags(p)

    p = sub.add_parser("radical", help="compute the Jacobson radical of u(L)")
    p.add_argument("--algebra", required=True)
    p.add_argument("--ideal", help="comma-separated generators of a p-nil restricted ideal P")
    output_flags(p)

    p = sub.add_parser("torus-chain", help="shortcut for 'verify torus-chain'")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--timing", action="store_true")
    output_flags(p)
    return parser


def _emit(args, payload: dict | None, text: str) -> None:
    body = json.dumps(payload, indent=2, sort_keys=True) + "\n" if args.report == "json" else text
    if args.out is not None:
        args.out.write_text(body)
    else:
        sys.stdout.write(body)


def _run_scenario(args) -> int:
    name = args.scenario
    if name == "perfect-field":
        kwargs = dict(m=args.m, r=args.r, trials=args.trials, seed=args.seed, sabotage=args.sabotage)
        runner = lambda: SCENARIOS[name](**kwargs)  # noqa: E731
    elif name == "torus-chain":
        runner = lambda: SCENARIOS[name](k=args.k, p=args.p)  # noqa: E731
    else:
        L = load_algebra(args.algebra or DEFAULT_ALGEBRA[name])
        if name == "locally-finite":
            P = _elements(L, args.ideal)
            runner = lambda: SCENARIOS[name](L, P)  # noqa: E731
        elif name == "free-module":
            H, chain = _elements(L, args.subalgebra), _elements(L, args.chain)
            runner = lambda: SCENARIOS[name](L, H, chain, trials=args.trials, seed=args.seed)  # noqa: E731
        else:
            runner = lambda: SCENARIOS[name](L)  # noqa: E731
    start = time.perf_counter()
    report = runner()
    if getattr(args, "timing", False):
        report.wall_time = time.perf_counter() - start
    _emit(args, report.to_dict(), report.to_text())
    return report.exit_status


def _run_validate(args) -> int:
    L = load_algebra(args.algebra)
    rep = validate(L)
    payload = {"schema": SCHEMA_VERSION, "algebra": L.name, "dim": L.n, **rep.to_dict()}
    lines = [f"algebra {L.name or args.algebra} (dim {L.n}, p = {L.p})"]
    lines += [f"  {'PASS' if ok else 'FAIL'} {name}" for name, ok in rep.checks.items()]
    lines += [f"       {f}" for f in rep.failures]
    lines.append("valid" if rep.ok else "invalid")
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _run_radical(args) -> int:
    L = load_algebra(args.algebra)
    cert = jacobson_radical(L, _elements(L, args.ideal))
    A = L.env
    payload = {"schema": SCHEMA_VERSION, "algebra": L.name, "dim_u(L)": A.dim, **cert.to_dict()}
    payload["basis"] = [str(e) for e in cert.elements()]
    lines = [f"J(u({L.name or 'L'})): dimension {cert.dim} of {A.dim}, nilpotency index {cert.nilpotency_index}"]
    lines += [f"  {t}" for t in cert.trail]
    lines += [f"  basis: {e}" for e in payload["basis"]]
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "torus-chain":
        args.scenario = "torus-chain"
        command = _run_scenario
    else:
        command = {"validate": _run_validate, "verify": _run_scenario, "radical": _run_radical}[args.command]
    try:
        return command(args)
    except ResenvError as exc:
        print(f"resenv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
