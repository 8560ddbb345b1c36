"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import cmp_to_key

from . import isobaric, primitives, qsymm, verify, words
from .ncalgebra import pretty, poly_from_json, poly_to_json

KIND_ALIASES = {"L": "L_wl", "N": "N_wl", "L_wl": "L_wl", "N_wl": "N_wl", "L_swl": "L_swl", "N_swl": "N_swl"}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    max_weight: int = 6
    truncation: int = 3
    output: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.max_weight < 1:
            raise UsageError("--max-weight must be >= 1")
        if self.truncation < 1:
            raise UsageError("--truncation must be >= 1")
        if self.output not in ("text", "json"):
            raise UsageError("--output must be text or json")


def _emit(cfg: RunConfig, text: str, data) -> None:
    if cfg.output == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _composition(text: str) -> tuple[int, ...]:
    try:
        return words.parse_composition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _lyndon_arg(text: str) -> tuple[int, ...]:
    alpha = _composition(text)
    if not alpha or not words.is_lyndon(alpha):
        raise UsageError(f"{text} is not a Lyndon word")
    return alpha


def cmd_lyndon(cfg: RunConfig, n: int) -> int:
    if n < 1:
        raise UsageError("weight must be >= 1")
    # listed lexicographically, the usual way to print Lyndon words
    lyn = sorted(words.enumerate_lyndon(n), key=cmp_to_key(words.lex_cmp))
    _emit(cfg, " ".join(words.format_composition(a) for a in lyn), {"n": n, "lyndon": [list(a) for a in lyn]})
    return 0


def cmd_primitive(cfg: RunConfig, alpha: tuple[int, ...]) -> int:
    p = primitives.build_P(alpha)
    data = {"alpha": list(alpha), "g": words.g_stat(alpha), "poly": poly_to_json(p)}
    _emit(cfg, pretty(p), data)
    return 0


def cmd_curve(cfg: RunConfig, alpha: tuple[int, ...], over: bool) -> int:
    c = primitives.over_curve(alpha, cfg.truncation) if over else primitives.build_d(alpha, cfg.truncation)
    name = "c" if over else "d"
    lines = [f"{name}({i}) = {pretty(c(i))}" for i in range(1, c.bound + 1)]
    data = {"alpha": list(alpha), "kind": "over" if over else "d", **c.to_json()}
    _emit(cfg, "\n".join(lines), data)
    return 0


def cmd_isobaric(cfg: RunConfig, kind: str, u: int, v: int) -> int:
    if kind not in KIND_ALIASES:
        raise UsageError(f"unknown table kind {kind!r}; expected one of {', '.join(sorted(KIND_ALIASES))}")
    if u < 1 or v < 1:
        raise UsageError("u and v must be >= 1")
    p = isobaric.symbolic_recursion(KIND_ALIASES[kind]).entry(u, v)
    _emit(cfg, pretty(p), {"kind": KIND_ALIASES[kind], "u": u, "v": v, "host": p.host, "poly": poly_to_json(p)})
    return 0


def cmd_newton(cfg: RunConfig, kind: str, n: int) -> int:
    if n < 1:
        raise UsageError("n must be >= 1")
    p = isobaric.newton_P(n) if kind == "P" else isobaric.newton_Q(n)
    _emit(cfg, pretty(p), {"kind": kind, "n": n, "poly": poly_to_json(p)})
    return 0


def cmd_shuffle(cfg: RunConfig, alphas: list[tuple[int, ...]]) -> int:
    q = qsymm.osh_mul(*alphas) if len(alphas) == 2 else qsymm.osh_mul_multi(alphas)
    _emit(cfg, qsymm.pretty_q(q), q.to_json())
    return 0


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_pair(cfg: RunConfig, p_file: str, q_file: str) -> int:
    try:
        p = poly_from_json(_load_json(p_file))
        q = qsymm.QElem.from_json(_load_json(q_file))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed input: {exc}") from None
    value = qsymm.pairing(p, q)
    _emit(cfg, str(value), {"pairing": str(value)})
    return 0


def cmd_index_table(cfg: RunConfig, n_max: int) -> int:
    if n_max < 1:
        raise UsageError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        r = primitives.index_row(n)
        r["status"] = "OK" if r["snf_index"] == r["product_formula"] else "MISMATCH"
        rows.append(r)
    header = f"{'n':>3} {'|LYN_n|':>8} {'snf_index':>14} {'product':>14}  status"
    lines = [header] + [
        f"{r['n']:>3} {r['lyndon_count']:>8} {r['snf_index']:>14} {r['product_formula']:>14}  {r['status']}" for r in rows
    ]
    _emit(cfg, "\n".join(lines), {"rows": rows})
    return 0 if all(r["status"] == "OK" for r in rows) else 1


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    if suite != "all" and suite not in verify.SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    report = verify.run_suite(suite, verify.Params(cfg.max_weight, cfg.truncation, cfg.seed))
    lines = []
    for c in report["checks"]:
        line = f"{c['status'].upper():4}  {c['name']}: {c['detail']}"
        if c["status"] != "pass":
            line += f"\n      expected: {c['paper_anchor']}"
        lines.append(line)
    ok = verify.report_passed(report)
    npass = sum(c["status"] == "pass" for c in report["checks"])
    lines.append(f"{npass}/{len(report['checks'])} checks passed")
    _emit(cfg, "\n".join(lines), report)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-weight", type=int, default=argparse.SUPPRESS)
    common.add_argument("--truncation", type=int, default=argparse.SUPPRESS)
    common.add_argument("--output", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="nsymm", description="Primitives of NSymm and related computations.")
    parser.add_argument("--max-weight", type=int, default=6)
    parser.add_argument("--truncation", type=int, default=3)
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lyndon", parents=[common], help="Lyndon compositions of weight n")
    p.add_argument("n", type=int)
    p = sub.add_parser("primitive", parents=[common], help="the primitive P_alpha")
    p.add_argument("alpha")
    p = sub.add_parser("curve", parents=[common], help="the curve d_alpha (or the curve over P_alpha)")
    p.add_argument("alpha")
    p.add_argument("--over", action="store_true", help="print the curve whose first term is P_alpha")
    p = sub.add_parser("isobaric", parents=[common], help="a decomposition polynomial")
    p.add_argument("kind", help="L, N, L_swl or N_swl")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p = sub.add_parser("newton", parents=[common], help="Newton primitive P_n or Q_n")
    p.add_argument("kind", choices=("P", "Q"))
    p.add_argument("n", type=int)
    p = sub.add_parser("shuffle", parents=[common], help="overlapping shuffle of compositions")
    p.add_argument("alphas", nargs="+")
    p = sub.add_parser("pair", parents=[common], help="pair an NSymm element with a QSymm element")
    p.add_argument("p_file")
    p.add_argument("q_file")
    p = sub.add_parser("index-table", parents=[common], help="index of the Lie span of the P_n per weight")
    p.add_argument("n_max", type=int, nargs="?")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(verify.SUITES + ("all",)))
    return parser


def dispatch(args: argparse.Namespace) -> int:
    cfg = RunConfig(args.max_weight, args.truncation, args.output, args.seed)
    cmd = args.command
    if cmd == "lyndon":
        return cmd_lyndon(cfg, args.n)
    if cmd == "primitive":
        return cmd_primitive(cfg, _lyndon_arg(args.alpha))
    if cmd == "curve":
        return cmd_curve(cfg, _lyndon_arg(args.alpha), args.over)
    if cmd == "isobaric":
        return cmd_isobaric(cfg, args.kind, args.u, args.v)
    if cmd == "newton":
        return cmd_newton(cfg, args.kind, args.n)
    if cmd == "shuffle":
        return cmd_shuffle(cfg, [_composition(a) for a in args.alphas])
    if cmd == "pair":
        return cmd_pair(cfg, args.p_file, args.q_file)
    if cmd == "index-table":
        return cmd_index_table(cfg, args.n_max if args.n_max is not None else cfg.max_weight)
    if cmd == "verify":
        return cmd_verify(cfg, args.suite)
    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
