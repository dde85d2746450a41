"""Command-line interface: construct, analyze, table, dual, gray, verify.

Exit codes: 0 success, 1 failed cross-check, 2 invalid parameters, 3 cap exceeded, 4 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .analysis import (
    UnsupportedPrime,
    brute_force_kernel_basis,
    coset_decomposition_check,
    is_gray_linear,
    kernel,
    min_hamming_distance,
    rank,
)
from .constructions import (
    InadmissibleTarget,
    achievability_table,
    construct_kernel_code,
    construct_pair_code,
    construct_rank_code,
)
from .gray import NotGrayImage, big_phi
from .mixed_code import (
    DEFAULT_CAP,
    AdditiveCode,
    CapExceeded,
    CodeType,
    DependentRows,
    InvalidType,
    MalformedCodeFile,
    brute_force_dual_words,
    compute_type,
    dual,
    inner_product_batch,
    load_code,
    save_code,
)
from .ring_arith import RingError
from .words import MixedWord, ShapeError

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_MALFORMED = 0, 2, 3, 4


class CheckFailed(RuntimeError):
    pass


def _type_from_args(args) -> CodeType:
    return CodeType(args.alpha, args.beta, args.gamma, args.delta, args.kappa)


def _add_type_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, required=True)
    for name in ("alpha", "beta", "gamma", "delta", "kappa"):
        p.add_argument(f"--{name}", type=int, required=True)


def _pair(text: str) -> tuple[int, int]:
    try:
        r, k = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R,K, got {text!r}") from None
    return r, k


def _write_code(gm, path: str | None) -> None:
    if path is None:
        sys.stdout.write(json.dumps(gm.to_dict()) + "\n")
    else:
        save_code(gm, path)


def cmd_construct(args) -> int:
    t = _type_from_args(args)
    if args.rank is not None or args.pair is not None:
        if args.p != 3:
            raise UnsupportedPrime("rank and pair constructions are only available for p = 3")
    if args.rank is not None:
        gm = construct_rank_code(t, args.rank)
    elif args.kernel is not None:
        gm = construct_kernel_code(args.p, t, args.kernel, single_column=args.single_column)
    else:
        gm = construct_pair_code(t, *args.pair)
    _write_code(gm, args.output)
    return EXIT_OK


def analysis_report(code: AdditiveCode, rank_method: str = "auto", kernel_method: str = "auto",
                    min_dist: bool = False) -> dict:
    t = code.type
    if kernel_method == "auto":
        kernel_method = "coset"
    rr = rank(code, rank_method)
    kr = kernel(code, kernel_method)
    report = {
        "type": str(t),
        "p": code.p,
        "size": f"{code.p}^{t.log_size}",
        "rank": rr.rank,
        "r_bar": rr.r_bar,
        "kernel_dim": kr.kernel_dim,
        "k_bar": kr.k_bar,
        "linear": kr.k_bar == 0,
        "rank_method": rr.method,
        "kernel_method": kr.method,
    }
    if min_dist:
        report["min_distance"] = min_hamming_distance(code)
    return report


def _render(report: dict) -> str:
    def fmt(v):
        return str(v).lower() if isinstance(v, bool) else str(v)

    return "".join(f"{k}: {fmt(v)}\n" for k, v in report.items())


def cmd_analyze(args) -> int:
    code = load_code(args.code, cap=args.cap)
    report = analysis_report(code, args.rank_method, args.kernel_method, args.min_dist)
    sys.stdout.write(_render(report))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.p != 3:
        raise UnsupportedPrime("the achievability table is only available for p = 3")
    table = achievability_table(_type_from_args(args), verify=args.verify, cap=args.cap)
    text = table.to_csv()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_dual(args) -> int:
    code = load_code(args.code, cap=args.cap)
    d = dual(code)
    if args.output:
        save_code(d.generators, args.output)
    sys.stdout.write(f"type: {code.type}\ndual_type: {d.type}\n")
    return EXIT_OK


def cmd_gray(args) -> int:
    w = MixedWord.parse(args.p, args.word)
    sys.stdout.write(",".join(map(str, big_phi(w))) + "\n")
    return EXIT_OK


def verification_checks(code: AdditiveCode) -> list[tuple[str, str]]:
    """Run every oracle cross-check that fits under the code's cap.

    Returns ``(name, status)`` pairs with status ``pass``, ``FAIL`` or
    ``skipped (...)``.
    """
    results: list[tuple[str, str]] = []
    p, t, cap = code.p, code.type, code.cap

    def record(name, ok):
        results.append((name, "pass" if ok else "FAIL"))

    record("type_recomputed", compute_type(code.generators) == t)
    enumerable = code.size <= cap
    if enumerable:
        record("size", len(code.index()) == code.size)

    d = dual(code)
    record("dual_type_formula", d.type == t.dual() if t.log_size else True)
    record("dual_size_product", t.log_size + d.type.log_size == code.alpha + 2 * code.beta)
    gens, dgens = code.generators.as_array(), d.generators.as_array()
    if len(gens) and len(dgens):
        record("dual_orthogonal", not np.any(inner_product_batch(gens, dgens, p, code.alpha)))
    if p ** (code.alpha + 2 * code.beta) <= cap:
        record("dual_bruteforce_size", len(brute_force_dual_words(code, cap)) == d.size)
    else:
        results.append(("dual_bruteforce_size", "skipped (ambient space above cap)"))

    if not enumerable:
        results.append(("rank_kernel", "skipped (code above cap)"))
        return results
    kr = kernel(code, "coset")
    kc = kernel(code, "coset", test="carry")
    record("kernel_coset_tests_agree", kr.kernel_dim == kc.kernel_dim)
    record("kernel_bruteforce", len(brute_force_kernel_basis(code)) == kr.kernel_dim)
    record("coset_decomposition", coset_decomposition_check(code, kr))
    rb = rank(code, "bruteforce")
    if p == 3:
        record("rank_span_vs_bruteforce", rank(code, "span").rank == rb.rank)
    record("linearity_coupling", is_gray_linear(code) == (kr.k_bar == 0) == (rb.r_bar == 0))
    return results


def cmd_verify(args) -> int:
    code = load_code(args.code, cap=args.cap)
    results = verification_checks(code)
    for name, status in results:
        sys.stdout.write(f"{name}: {status}\n")
    if any(status == "FAIL" for _, status in results):
        raise CheckFailed("one or more cross-checks failed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zpzp2", description="Z_p Z_{p^2}-additive codes: Gray map, rank and kernel.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a witness code with a target rank and/or kernel")
    _add_type_flags(c)
    target = c.add_mutually_exclusive_group(required=True)
    target.add_argument("--rank", type=int)
    target.add_argument("--kernel", type=int)
    target.add_argument("--pair", type=_pair, metavar="R,K")
    c.add_argument("--single-column", action="store_true", help="kernel witness with one nonzero column of S")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="report type, rank and kernel dimension of a code file")
    a.add_argument("code")
    a.add_argument("--rank-method", choices=["span", "bruteforce", "auto"], default="auto")
    a.add_argument("--kernel-method", choices=["coset", "bruteforce", "auto"], default="auto")
    a.add_argument("--min-dist", action="store_true")
    a.add_argument("--cap", type=int, default=DEFAULT_CAP)
    a.set_defaults(func=cmd_analyze)

    tb = sub.add_parser("table", help="achievable (rank, kernel) grid as CSV")
    _add_type_flags(tb)
    tb.add_argument("--verify", action="store_true")
    tb.add_argument("--cap", type=int, default=DEFAULT_CAP)
    tb.add_argument("-o", "--output")
    tb.set_defaults(func=cmd_table)

    d = sub.add_parser("dual", help="compute the dual code")
    d.add_argument("code")
    d.add_argument("-o", "--output")
    d.add_argument("--cap", type=int, default=DEFAULT_CAP)
    d.set_defaults(func=cmd_dual)

    g = sub.add_parser("gray", help="Gray image of a word literal such as '2|4,0'")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--word", required=True)
    g.set_defaults(func=cmd_gray)

    v = sub.add_parser("verify", help="run all oracle cross-checks on a code file")
    v.add_argument("code")
    v.add_argument("--cap", type=int, default=DEFAULT_CAP)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (MalformedCodeFile, DependentRows, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (InvalidType, InadmissibleTarget, UnsupportedPrime, RingError, ShapeError, NotGrayImage, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
