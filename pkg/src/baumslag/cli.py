"""Command-line front end.

Exit codes: 0 trivial or success, 1 non-trivial (or an irreducible /
non-divisible answer), 2 usage or format error, 3 resource exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import ENGINES, FAMILIES, BenchConfig, bench_family, write_csv
from .bs import bs_normalize
from .circuit import (
    DEFAULT_BIT_BUDGET,
    add,
    eval_circuit,
    format_circuit,
    mul_pow2,
    parse_circuit,
    subtract,
    to_dot,
)
from .errors import BudgetExceeded, CircuitFormatError, NonInteger, NotDivisible, WordSyntaxError
from .naive import DEFAULT_STEP_CAP, naive_solve
from .reduction import div_pow2, reduce, sign
from .sequence import PowerSequence, parse_word, print_word
from .word_problem import Verdict, commutator, hard_word, solve

EXIT_OK, EXIT_NONTRIVIAL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _read_word(arg: str) -> PowerSequence:
    text = Path(arg[1:]).read_text() if arg.startswith("@") else arg
    return parse_word(text)


def _read_circuit(path: str):
    return parse_circuit(Path(path).read_text())


def _cmd_solve(args) -> int:
    w = _read_word(args.word)
    if args.engine == "naive":
        outcome = naive_solve(w, args.step_cap, args.max_bits)
        if outcome.verdict is Verdict.RESOURCE_EXCEEDED:
            print(f"resource exceeded ({outcome.reason}) after {outcome.steps} steps")
            return EXIT_RESOURCE
        verdict = outcome.verdict
    else:
        verdict = solve(w)
    print("trivial" if verdict is Verdict.YES else "non-trivial")
    return EXIT_OK if verdict is Verdict.YES else EXIT_NONTRIVIAL


def _cmd_hard_word(args) -> int:
    w = hard_word(args.k)
    if args.commutator_with:
        w = commutator(w, parse_word(args.commutator_with))
    print(print_word(w))
    return EXIT_OK


def _show_exponent(name: str, P, max_bits: int, out_prefix: str | None) -> None:
    try:
        print(f"{name} = {eval_circuit(P, max_bits)}")
        return
    except BudgetExceeded:
        pass
    if out_prefix:
        path = Path(f"{out_prefix}.{name}.pc")
        path.write_text(format_circuit(P))
        print(f"{name} = <circuit written to {path}>")
    else:
        print(f"{name} = <circuit>")
        print(format_circuit(P), end="")


def _cmd_bs_normalize(args) -> int:
    nf = bs_normalize(_read_word(args.word))
    if nf is None:
        print("irreducible")
        return EXIT_NONTRIVIAL
    _show_exponent("M", reduce(nf.M).circuit, args.max_bits, args.output)
    _show_exponent("sigma", reduce(nf.sigma).circuit, args.max_bits, args.output)
    return EXIT_OK


def _cmd_circuit(args) -> int:
    if args.action == "op":
        P1, P2 = _read_circuit(args.file1), _read_circuit(args.file2)
        if args.op == "add":
            R = add(P1, P2)
        elif args.op == "sub":
            R = subtract(P1, P2)
        elif args.op == "mul2":
            if sign(P2) < 0:
                raise _UsageError("mul2 needs a non-negative exponent; use div2")
            R = mul_pow2(P1, P2)
        else:
            try:
                R = div_pow2(P1, P2)
            except NotDivisible as exc:
                print(f"not divisible: {exc}")
                return EXIT_NONTRIVIAL
        Path(args.output).write_text(format_circuit(R))
        return EXIT_OK
    P = _read_circuit(args.file)
    if args.action == "eval":
        print(eval_circuit(P, args.max_bits))
    elif args.action == "reduce":
        print(format_circuit(reduce(P).circuit), end="")
    elif args.action == "sign":
        print(sign(P))
    else:
        print(to_dot(P), end="")
    return EXIT_OK


def _cmd_bench(args) -> int:
    engines = tuple(e.strip() for e in args.engines.split(",") if e.strip())
    try:
        cfg = BenchConfig(
            family=args.family,
            k_max=args.k_max,
            engines=engines,
            step_cap=args.step_cap,
            max_bits=args.max_bits,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    result = bench_family(cfg)
    for r in result.records:
        peak = "-" if r.peak_vertices is None else r.peak_vertices
        print(f"k={r.k:<2} len={r.length:<6} {r.engine:<8} {r.seconds:10.4f}s  peak={peak}  {r.verdict}")
    if args.csv:
        write_csv(result.records, args.csv)
    print(f"circuit log-log slope: {result.slope:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="baumslag", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide whether a word is trivial in G")
    s.add_argument("word", help="word text, or @path to read it from a file")
    s.add_argument("--engine", choices=ENGINES, default="circuit")
    s.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP)
    s.add_argument("--max-bits", type=int, default=DEFAULT_BIT_BUDGET)
    s.set_defaults(func=_cmd_solve)

    s = sub.add_parser("hard-word", help="print the word w_k")
    s.add_argument("k", type=int)
    s.add_argument("--commutator-with", choices=("a", "b"))
    s.set_defaults(func=_cmd_hard_word)

    s = sub.add_parser("bs-normalize", help="write an {a,t}-word as a^M t^sigma")
    s.add_argument("word")
    s.add_argument("--max-bits", type=int, default=4096)
    s.add_argument("-o", "--output", help="prefix for circuit files of large exponents")
    s.set_defaults(func=_cmd_bs_normalize)

    c = sub.add_parser("circuit", help="power circuit files").add_subparsers(
        dest="action", required=True
    )
    for action in ("eval", "reduce", "sign", "dot"):
        s = c.add_parser(action)
        s.add_argument("file")
        s.add_argument("--max-bits", type=int, default=DEFAULT_BIT_BUDGET)
        s.set_defaults(func=_cmd_circuit)
    s = c.add_parser("op")
    s.add_argument("op", choices=("add", "sub", "mul2", "div2"))
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=_cmd_circuit)

    s = sub.add_parser("bench", help="time both engines on a word family")
    s.add_argument("--family", choices=FAMILIES, default="wk-commutator")
    s.add_argument("--k-max", type=int, default=8)
    s.add_argument("--engines", default="circuit,naive")
    s.add_argument("--csv")
    s.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP)
    s.add_argument("--max-bits", type=int, default=DEFAULT_BIT_BUDGET)
    s.set_defaults(func=_cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (WordSyntaxError, CircuitFormatError, NonInteger, _UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"resource exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
