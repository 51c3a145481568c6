"""Command-line interface.

    disclab verify --n 3..5 --check lemma1,divisibility --seed 42
    disclab resultant --f F.json --g G.json --var x
    disclab discriminant --n 4 [--out FILE]
    disclab dtilde --n 3 --k 2
    disclab vk --n 4 --k 3

Exit codes: 0 on success with no claim failures, 1 when any claim
failed, 2 on usage errors.  The environment variable DISCLAB_MAX_N
(default 8) caps the family degree for every subcommand.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__
from .polyring import (
    MultiPoly,
    PolyJSONError,
    a_var,
    poly_from_json,
    poly_to_json,
    var_from_name,
)
from .report import BadCheckNameError, BadRangeError, max_n_from_env, run
from .resultant import (
    BadDegreeError,
    BadIndexError,
    D_tilde,
    DegreeZeroError,
    UniPolyView,
    V_k,
    discriminant_R,
    resultant,
)


def _parse_n_range(text: str) -> list:
    out = set()
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.update(range(lo, hi + 1))
        else:
            out.add(int(part))
    return sorted(out)


def _check_n(n: int, max_n: int) -> None:
    if n < 2:
        raise BadRangeError(f"n must be >= 2, got {n}")
    if n > max_n:
        raise BadRangeError(f"n={n} exceeds the configured maximum {max_n}")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    n_range = _parse_n_range(args.n) if args.n else None
    checks = [c.strip() for c in args.check.split(",") if c.strip()]
    report = run(n_range, checks, args.seed, args.samples, slow=args.slow)
    if args.format == "json":
        text = report.to_json(include_timings=args.timings)
    else:
        text = report.to_text()
    _emit(text, args.out)
    return 0 if report.summary["fail"] == 0 else 1


def cmd_resultant(args) -> int:
    with open(args.f, encoding="utf-8") as fh:
        f = poly_from_json(fh.read())
    with open(args.g, encoding="utf-8") as fh:
        g = poly_from_json(fh.read())
    v = var_from_name(args.var)
    for name, poly in (("--f", f), ("--g", g)):
        d = poly.degree_in_var(v)
        if not isinstance(d, int) or d < 1:
            raise DegreeZeroError(f"{name} polynomial has no positive degree in {args.var}")
    res = resultant(UniPolyView.from_multipoly(f, v), UniPolyView.from_multipoly(g, v))
    _emit(poly_to_json(res), args.out)
    return 0


def cmd_discriminant(args) -> int:
    _check_n(args.n, max_n_from_env())
    r = discriminant_R(args.n)
    _emit(poly_to_json(r, universe=[a_var(j) for j in range(1, args.n + 1)]), args.out)
    return 0


def cmd_dtilde(args) -> int:
    _check_n(args.n, max_n_from_env())
    d = D_tilde(args.n, args.k)
    universe = [a_var(j) for j in range(1, args.n + 1) if j != args.k]
    _emit(poly_to_json(d, universe=universe), args.out)
    return 0


def cmd_vk(args) -> int:
    _check_n(args.n, max_n_from_env())
    v = V_k(args.n, args.k)
    universe = [a_var(j) for j in range(1, args.n + 1) if j != args.k]
    _emit(poly_to_json(v, universe=universe), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disclab",
        description="Exact discriminant-set machinery with a claim-verification harness.",
    )
    parser.add_argument("--version", action="version", version=f"disclab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run claim checkers and emit a report")
    p.add_argument("--n", help="degree range, e.g. 3..5 or 3,4,6 (default: per-check)")
    p.add_argument(
        "--check",
        default="all",
        help="comma-separated check names or 'all' "
        "(lemma1, remark1, lemma2, smoothness, divisibility, statements, sigma, irreducibility)",
    )
    p.add_argument("--seed", type=int, default=42, help="64-bit sampling seed (default 42)")
    p.add_argument(
        "--samples", type=int, default=0, help="samples per sampled check (0 = per-check default)"
    )
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report to a file instead of stdout")
    p.add_argument(
        "--slow",
        action="store_true",
        help="include the opt-in slow instances (the n=6 specialization certificate)",
    )
    p.add_argument(
        "--timings",
        action="store_true",
        help="include wall-clock timings in the JSON report (breaks byte-identity)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("resultant", help="resultant of two polynomial JSON files")
    p.add_argument("--f", required=True, help="first polynomial (JSON file)")
    p.add_argument("--g", required=True, help="second polynomial (JSON file)")
    p.add_argument("--var", required=True, help="variable to eliminate, e.g. x")
    p.add_argument("--out")
    p.set_defaults(func=cmd_resultant)

    p = sub.add_parser("discriminant", help="Res(P, P', x) for the degree-n family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_discriminant)

    p = sub.add_parser("dtilde", help="double resultant Res(R, dR/da_k, a_k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dtilde)

    p = sub.add_parser("vk", help="V_k = Res(P_k, P_k', x) (over a_n for k = n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_vk)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        BadCheckNameError,
        BadRangeError,
        BadDegreeError,
        BadIndexError,
        DegreeZeroError,
        PolyJSONError,
        ValueError,
        OSError,
    ) as e:
        print(f"disclab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
