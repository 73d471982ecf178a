"""Command-line interface: ``repgl <subcommand> ...`` (or ``python -m repgl``).

Exit status is 0 on success, 1 on a domain error and 2 on a usage error
(including a malformed bipartition).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .bipartition import BipartitionMultiset
from .cross import CrossStatus, bump_path, classify, enumerate_almost
from .diagrams import GENERIC, cap_diagram, is_generic, m_delta, weight_diagram
from .errors import ParseError, RepGLError
from .ideals import ReachesAlmost, ideal_of_set, m_star, reduce_to_almost_or_unit
from .tensor import DEFAULT_WORD_BOUND, format_word, lift, parse_word, peel, tensor_word
from .textio import RenderSpec, format_multiset, multiset_to_json, parse_bipartition, render


class UsageError(Exception):
    pass


def parse_delta(text: str):
    if text.strip().lower() in ("generic", "t"):
        return GENERIC
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"delta must be an integer or 'generic', got {text!r}") from None


def _bp(text: str):
    return parse_bipartition(text)


def _need_integral(args, command):
    if args.delta is None:
        raise UsageError(f"{command} needs --delta")
    if is_generic(args.delta):
        raise UsageError(f"{command} needs an integral --delta")
    return args.delta


def cmd_diagram(args, out):
    delta = _need_integral(args, "diagram")
    lam = _bp(args.bipartition)
    wd = weight_diagram(lam, delta)
    diagram = wd if args.no_caps else cap_diagram(wd)
    text = render(diagram, RenderSpec(args.format, tuple(args.window) if args.window else None))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_tensor(args, out):
    delta = GENERIC if args.delta is None else args.delta
    lam = _bp(args.bipartition)
    word = parse_word(args.word)
    ms = tensor_word(word, lam, delta, bound=args.max_word)
    if args.oracle and not is_generic(delta):
        generic = tensor_word(word, m_delta(lam, delta), GENERIC, bound=args.max_word)
        if not oracle.decomposition_check(lift(ms, delta), generic):
            raise RepGLError("oracle check failed: lifted result differs from the generic product")
        if BipartitionMultiset(peel(generic, delta)) != ms:
            raise RepGLError("oracle check failed: peeling the generic product disagrees")
    if args.json:
        out.write(json.dumps(multiset_to_json(ms), ensure_ascii=False) + "\n")
    else:
        out.write(format_multiset(ms) + "\n")


def cmd_cross(args, out):
    lam = _bp(args.bipartition)
    status = classify(lam, args.m, args.n)
    if args.oracle:
        brute = oracle.almost_cross_brute(lam, args.m, args.n, bound=max(lam.size, oracle.oracle_bound()))
        if brute != (status is CrossStatus.ALMOST_CROSS):
            raise RepGLError("oracle check failed: containment test disagrees")
    out.write(f"{status}\n")


def cmd_enumerate_almost(args, out):
    family = enumerate_almost(args.m, args.n)
    if args.json:
        out.write(json.dumps([str(lam) for lam in family]) + "\n")
    else:
        for lam in family:
            out.write(f"{lam}\n")


def cmd_bump_path(args, out):
    lam, mu = _bp(args.start), _bp(args.end)
    for move in bump_path(lam, mu, args.m, args.n):
        out.write(f"{move}\n")


def cmd_ideal(args, out):
    delta = _need_integral(args, "ideal")
    out.write(f"{ideal_of_set([_bp(t) for t in args.bipartitions], delta)}\n")


def cmd_reduce(args, out):
    delta = _need_integral(args, "reduce")
    lam = _bp(args.bipartition)
    outcome = reduce_to_almost_or_unit(lam, delta)
    if isinstance(outcome, ReachesAlmost):
        out.write(f"almost I({outcome.m}|{outcome.n}) target {outcome.target}\n")
    else:
        out.write("unit\n")
    out.write(f"witness {format_word(outcome.witness)}".rstrip() + "\n")
    best = m_star(lam, delta)
    out.write(f"m* {'none' if best is None else best}\n")


def cmd_verify(args, out):
    lo, hi = args.deltas
    violations = oracle.sweep(args.max_size, range(lo, hi + 1), pairs=not args.no_pairs)
    violations += oracle.almost_cross_sweep(args.almost_size, args.almost_mn)
    if violations:
        for v in violations:
            out.write(f"FAIL {v}\n")
        return 1
    out.write(f"ok: all invariants hold for |lambda| <= {args.max_size}, delta in [{lo}, {hi}]\n")
    return 0


def _delta_range(text: str):
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("expected LO:HI") from None
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="repgl", description="Weight diagrams, tensor products and ideals for Rep(GL_delta).")
    parser.add_argument("--delta", type=parse_delta, default=None, help="integer parameter, or 'generic'")
    sub = parser.add_subparsers(dest="command", required=True)
    delta = argparse.ArgumentParser(add_help=False)
    delta.add_argument("--delta", type=parse_delta, default=argparse.SUPPRESS)
    mn = argparse.ArgumentParser(add_help=False)
    mn.add_argument("-m", type=int, required=True)
    mn.add_argument("-n", type=int, required=True)

    p = sub.add_parser("diagram", parents=[delta], help="weight or cap diagram of a bipartition")
    p.add_argument("bipartition")
    p.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--no-caps", action="store_true")
    p.add_argument("-o", "--output", metavar="FILE", help="write the rendering to FILE (UTF-8)")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("tensor", parents=[delta], help="decompose a generator word times L(lambda)")
    p.add_argument("bipartition")
    p.add_argument("--word", required=True, help="letters B (natural object) and W (its dual)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check by lifting back to generic parameter")
    p.add_argument("--max-word", type=int, default=DEFAULT_WORD_BOUND)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("cross", parents=[mn], help="cross / almost / neither")
    p.add_argument("bipartition")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_cross)

    p = sub.add_parser("enumerate-almost", parents=[mn], help="list almost (m|n)-cross bipartitions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate_almost)

    p = sub.add_parser("bump-path", parents=[mn], help="one-box-bumps between two almost-cross bipartitions")
    p.add_argument("start")
    p.add_argument("end")
    p.set_defaults(func=cmd_bump_path)

    p = sub.add_parser("ideal", parents=[delta], help="ideal generated by the given bipartitions")
    p.add_argument("bipartitions", nargs="*")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("reduce", parents=[delta], help="reduce to the unit or an almost-cross bipartition")
    p.add_argument("bipartition")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="exhaustive invariant sweep against brute-force oracles")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--deltas", type=_delta_range, default=(-3, 3), metavar="LO:HI")
    p.add_argument("--almost-size", type=int, default=None, help="size bound for the almost-cross sweep")
    p.add_argument("--almost-mn", type=int, default=2)
    p.add_argument("--no-pairs", action="store_true", help="skip the pairwise linkage comparison")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    if out is None:
        out = sys.stdout
        if hasattr(out, "reconfigure"):
            out.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.almost_size is None:
        args.almost_size = min(oracle.oracle_bound(), 9)
    try:
        status = args.func(args, out)
    except (UsageError, ParseError) as exc:
        parser.print_usage(sys.stderr)
        print(f"repgl: error: {exc}", file=sys.stderr)
        return 2
    except (RepGLError, ValueError) as exc:
        print(f"repgl: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
