"""Command-line front end.

Exit codes: 0 when every verdict passes, 1 on a failed verdict, 2 on a
configuration error.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from .cg import block_support, phi, project
from .classical import check_syzygy_FJ, check_syzygy_JJ
from .matrixcon import check_lemma52, commutator_t, kappa, lemma52_scalar, t, w_scale, words_span_dim
from .oracle import dim_Cd, dim_Cd_bruteforce, dim_Dqp, dim_Dqp_bruteforce
from .qpoly import parse_rational
from .sl2 import H_COORDS, MatrixConcomitant
from .suites import NEEDS_TWO_SLOTS, SUITES, ConfigError, run_suite

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

log = logging.getLogger("sl2conc")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def default_max_degree(m: int) -> int:
    return 5 if m == 2 else 4


def select_suites(requested: list[str], m: int, d: int) -> tuple[list[str], list[str]]:
    """Expand ``all`` and validate; returns ``(to_run, skipped)``."""
    explicit = [s for s in requested if s != "all"]
    for name in explicit:
        if name in NEEDS_TWO_SLOTS and m < 2:
            raise ConfigError(f"suite '{name}' requires m >= 2 (got m={m})")
        if name == "lemma52" and d < 2:
            raise ConfigError("suite 'lemma52' requires d >= 2")
    names = list(SUITES) if "all" in requested else explicit
    skipped = [n for n in names if (n in NEEDS_TWO_SLOTS and m < 2) or (n == "lemma52" and d < 2)]
    run = [n for n in SUITES if n in names and n not in skipped]
    return run, skipped


def cmd_verify(args) -> int:
    if args.m < 1 or args.d < 1:
        raise ConfigError("m and d must be at least 1")
    P = default_max_degree(args.m) if args.max_degree is None else args.max_degree
    if P < 0:
        raise ConfigError("max degree must be nonnegative")
    names, skipped = select_suites(args.suite or ["all"], args.m, args.d)
    jobs = max(1, args.jobs)
    opts = {"witness_x": args.witness_x, "witness_y": args.witness_y}
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_suite, n, args.m, args.d, P, **opts) for n in names]
            results = [f.result() for f in futures]
    else:
        results = [run_suite(n, args.m, args.d, P, **opts) for n in names]
    checks = [c for batch in results for c in batch]
    passed = all(c.passed for c in checks)
    report = {
        "schema": SCHEMA,
        "command": "verify",
        "config": {"m": args.m, "d": args.d, "max_degree": P, "suites": names},
        "skipped": skipped,
        "checks": [c.to_json() for c in checks],
        "passed": passed,
    }
    _emit(_dump(report), args.output)
    for c in checks:
        if not c.passed:
            log.warning("FAIL %s: %s %s", c.suite, c.name, c.params)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_dims(args) -> int:
    if (args.q is None) == (args.d is None):
        raise ConfigError("give exactly one of --q or --d")
    if args.m < 1 or args.p < 0:
        raise ConfigError("need m >= 1 and p >= 0")
    if args.q is not None:
        value = dim_Dqp(args.m, args.q, args.p)
        check = dim_Dqp_bruteforce(args.m, args.q, args.p) if args.bruteforce else None
    else:
        value = dim_Cd(args.m, args.d, args.p)
        check = dim_Cd_bruteforce(args.m, args.d, args.p) if args.bruteforce else None
    print(value)
    if check is not None:
        print(f"bruteforce {check}")
        return EXIT_OK if check == value else EXIT_FAIL
    return EXIT_OK


_FACTOR = re.compile(r"t(\d+)|\[t(\d+),\s*t(\d+)\]")


def parse_word(text: str, d: int, m: int) -> MatrixConcomitant:
    """Product of factors ``t<i>`` and ``[t<i>,t<j>]`` separated by ``*`` or spaces."""
    out = MatrixConcomitant.scalar(1, m, d)
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos] in " *":
            pos += 1
            continue
        match = _FACTOR.match(text, pos)
        if not match:
            raise ConfigError(f"cannot parse word at {text[pos:]!r}")
        idx = [int(g) for g in match.groups() if g is not None]
        if any(not 1 <= i <= m for i in idx):
            raise ConfigError(f"slot index out of range 1..{m} in {match.group(0)!r}")
        out = out * (t(idx[0], d, m) if len(idx) == 1 else commutator_t(idx[0], idx[1], d, m))
        pos = match.end()
    return out


def cmd_decompose(args) -> int:
    if args.m < 1 or args.d < 1:
        raise ConfigError("m and d must be at least 1")
    F = parse_word(args.word, args.d, args.m)
    blocks = []
    for s in block_support(F):
        blocks.append({"block": s, "dimension": 2 * s + 1, "covariant": phi(project(F, s), s).to_text()})
    print(_dump({"schema": SCHEMA, "command": "decompose", "word": args.word, "m": args.m, "d": args.d, "blocks": blocks}))
    return EXIT_OK


IDENTITIES = {
    "jj": lambda args: check_syzygy_JJ(literal=args.literal),
    "fj": lambda args: check_syzygy_FJ(),
    "lemma52": lambda args: check_lemma52(args.d),
}


def cmd_identity(args) -> int:
    if args.name == "lemma52" and args.d < 2:
        raise ConfigError("lemma52 needs d >= 2")
    residual = IDENTITIES[args.name](args)
    ok = residual.is_zero()
    text = residual.to_text() if hasattr(residual, "to_text") else json.dumps(residual.to_json())
    print(f"residual: {text if not ok else '0'}")
    print(f"verdict: {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lemma52(args) -> int:
    if args.d < 2:
        raise ConfigError("lemma52 needs d >= 2")
    ok = check_lemma52(args.d).is_zero()
    print(f"c_{args.d} = {lemma52_scalar(args.d)}")
    print(f"verdict: {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args) -> int:
    if args.d_max < 2:
        raise ConfigError("--d-max must be at least 2")
    rows = []
    for d in range(2, args.d_max + 1):
        rows.append(
            {
                "d": d,
                "kappa": str(kappa(d)),
                "c_d": lemma52_scalar(d),
                "w_scale": str(w_scale(d)),
                "words_span_dim": words_span_dim(d, H_COORDS, (-1, 0, 1), 2 * d),
            }
        )
    _emit(_dump({"schema": SCHEMA, "command": "report", "constants": rows}), args.output)
    return EXIT_OK


def parse_coords(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated rationals a,b,c")
    try:
        return tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl2conc", description="Exact checks for SL2 matrix concomitants.")
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--suite", action="append", choices=list(SUITES) + ["all"])
    p.add_argument("--output", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--witness-x", type=parse_coords, default=None, help="Burnside witness as a,b,c (default h)")
    p.add_argument("--witness-y", type=parse_coords, default=None, help="Burnside witness as a,b,c (default e+f)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dims", help="graded dimensions from the oracle")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--bruteforce", action="store_true")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("decompose", help="isotypic blocks of a word in the t_i")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("identity", help="check one identity")
    p.add_argument("--name", choices=sorted(IDENTITIES), required=True)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--literal", action="store_true")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("lemma52", help="the St3 centrality identity for one d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_lemma52)

    p = sub.add_parser("report", help="table of computed normalization constants")
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
