"""Command-line interface: ``taftknot {invariant,verify,batch}``.

Exit codes: 0 success, 1 a verification check failed, 2 parse error,
3 evaluation error, 4 some batch item failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .braid import DEFAULT_CAP, BraidParseError, DimensionCapError, parse
from .invariant import EvaluationError, InvariantResult, NormalizationMode, batch_evaluate, evaluate_closure
from .report import Report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_EVAL = 3
EXIT_BATCH = 4

SUITES = ("hopf", "yd", "braid-eq", "ribbon", "markov", "jones")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_nonneg, default=1, help="module index (V_n); default 1")
    common.add_argument("--mode", choices=[m.value for m in NormalizationMode], default="balanced")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest allowed dim V^(x)strands")

    parser = argparse.ArgumentParser(prog="taftknot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariant", parents=[common], help="invariant of one braid closure")
    inv.add_argument("--braid", required=True, help='e.g. "B2: s1^-1 s1^-1 s1^-1" or "[-1,-1,-1]"')
    inv.add_argument("--strands", type=int, default=None, help="override the strand count")

    ver = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ver.add_argument("suite", choices=SUITES)
    ver.add_argument("--m", type=int, default=3, help="root-of-unity order for hopf/yd (odd)")
    ver.add_argument("--seed", type=int, default=0)

    bat = sub.add_parser("batch", parents=[common], help="one braid per line from a file")
    bat.add_argument("--in", dest="input", required=True, help="input path, '-' for stdin")
    bat.add_argument("--strands", type=int, default=None)
    return parser


def _check_cap(args, out_err: TextIO) -> bool:
    if args.cap < (args.n + 1) ** 2:
        print(f"error: --cap must be at least dim(V_n)^2 = {(args.n + 1) ** 2}", file=out_err)
        return False
    return True


def _emit(result: InvariantResult, fmt: str, out: TextIO) -> None:
    if fmt == "machine":
        out.write(json.dumps(result.to_record()) + "\n")
    else:
        out.write(result.value.render() + "\n")


def cmd_invariant(args, out: TextIO, err: TextIO) -> int:
    try:
        w = parse(args.braid, args.strands)
    except BraidParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    try:
        result = evaluate_closure(w, args.n, args.mode, cap=args.cap)
    except (EvaluationError, DimensionCapError, ArithmeticError) as exc:
        print(f"evaluation error: {exc}", file=err)
        return EXIT_EVAL
    _emit(result, args.format, out)
    return EXIT_OK


def _run_suite(args) -> Report:
    from .ribbon import ribbon_data, verify_braid_equation, verify_mixed_braid_equation, verify_ribbon
    from .suites import jones_suite, markov_suite
    from .taft import verify_hopf
    from .ydmod import dual_module, make_vn, tensor_product, verify_yd

    if args.suite == "hopf":
        return verify_hopf(args.m)
    if args.suite == "yd":
        V = make_vn(args.n, args.m)
        report = Report(f"yd V_{args.n} m={args.m}")
        report.extend(verify_yd(V), V.name)
        Vd = dual_module(V)
        report.extend(verify_yd(Vd), Vd.name)
        VV = tensor_product(V, V)
        report.extend(verify_yd(VV), VV.name)
        return report
    if args.suite == "braid-eq":
        report = Report(f"braid equation V_{args.n}")
        report.extend(verify_braid_equation(ribbon_data(args.n).c), f"V_{args.n}")
        a, b = make_vn(args.n), make_vn(args.n + 1)
        report.extend(verify_mixed_braid_equation(a, a, b), f"(V_{args.n}, V_{args.n}, V_{args.n + 1})")
        return report
    if args.suite == "ribbon":
        return verify_ribbon(ribbon_data(args.n))
    if args.suite == "markov":
        return markov_suite(seed=args.seed, n=args.n)
    return jones_suite()


def cmd_verify(args, out: TextIO, err: TextIO) -> int:
    try:
        report = _run_suite(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"evaluation error: {exc}", file=err)
        return EXIT_EVAL
    if args.format == "machine":
        record = report.to_dict()
        record["suite"] = args.suite
        record["seed"] = args.seed
        out.write(json.dumps(record) + "\n")
    else:
        out.write(report.to_text() + "\n")
        if args.suite == "markov":
            out.write(f"  seed: {args.seed}\n")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _read_lines(path: str) -> list[tuple[int, str]]:
    stream = sys.stdin if path == "-" else open(path, encoding="utf-8")
    try:
        lines = stream.read().splitlines()
    finally:
        if stream is not sys.stdin:
            stream.close()
    items = []
    for number, line in enumerate(lines, 1):
        text = line.split("#", 1)[0].strip()
        if text:
            items.append((number, text))
    return items


def cmd_batch(args, out: TextIO, err: TextIO) -> int:
    try:
        items = _read_lines(args.input)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    parsed = []
    for _, text in items:
        try:
            parsed.append(parse(text, args.strands))
        except BraidParseError as exc:
            parsed.append(exc)
    jobs = [(w, args.n, args.mode) for w in parsed if not isinstance(w, Exception)]
    results = iter(batch_evaluate(jobs, cap=args.cap))
    failed = False
    buffer = []
    for (number, text), w in zip(items, parsed):
        outcome = w if isinstance(w, Exception) else next(results)
        if isinstance(outcome, Exception):
            failed = True
            kind = "parse" if isinstance(outcome, BraidParseError) else "evaluation"
            if args.format == "machine":
                buffer.append(json.dumps({"line": number, "input": text, "error": f"{kind}: {outcome}"}))
            else:
                buffer.append(f"{text}\t{kind} error: {outcome}")
        elif args.format == "machine":
            buffer.append(json.dumps(outcome.to_record()))
        else:
            buffer.append(f"{outcome.braid}\t{outcome.value.render()}")
    if buffer:
        out.write("\n".join(buffer) + "\n")
    return EXIT_BATCH if failed else EXIT_OK


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    if not _check_cap(args, err):
        return EXIT_PARSE
    handler = {"invariant": cmd_invariant, "verify": cmd_verify, "batch": cmd_batch}[args.command]
    return handler(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
