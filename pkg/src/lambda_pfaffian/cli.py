"""Command-line front end.

Exit codes: 0 success, 1 identity or assertion failure, 2 computational
error (vanishing pivot, inexact division), 64 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import identities
from .errors import CondensationPivotZero, InexactDivision, ParseError
from .involution import audit_cancellation
from .matchings import enumerate_with_stats
from .pfaffian import SkewMatrix, generic, pf_condensation, pf_expansion
from .ring import LAMBDA, Polynomial, parse_polynomial

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_COMPUTE = 2
EXIT_USAGE = 64

MAX_MATCHING_PAIRS = 7
MAX_AUDIT_PAIRS = 4

PATTERNS = {
    "generic": generic,
    "ones": identities.ones_matrix,
    "xiyj": identities.xiyj_matrix,
    "xdiff": identities.xdiff_matrix,
    "xydiff": identities.xydiff_matrix,
    "block-det": identities.block_matrix,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


# -- matrix documents -------------------------------------------------------------


def pattern_matrix(name: str, size: int) -> SkewMatrix:
    if name not in PATTERNS:
        raise UsageError("unknown pattern %r (choose from %s)" % (name, ", ".join(PATTERNS)))
    if size < 2 or size % 2:
        raise UsageError("size must be a positive even integer, got %d" % size)
    return PATTERNS[name](size // 2)


def parse_matrix_document(text: str) -> SkewMatrix:
    """Read a ``key = value`` matrix document.

    Keys are ``size``, ``pattern``, or ``i,j`` with ``i < j``; ``#`` starts a
    comment.  Either every upper-triangle entry is listed or a pattern is
    given, never both.
    """
    size = None
    pattern = None
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError("line %d: expected 'key = value'" % lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "size":
            try:
                size = int(value)
            except ValueError:
                raise UsageError("line %d: size must be an integer" % lineno) from None
        elif key == "pattern":
            pattern = value
        else:
            try:
                i, j = (int(s) for s in key.split(","))
            except ValueError:
                raise UsageError("line %d: bad key %r" % (lineno, key)) from None
            if not 1 <= i < j:
                raise UsageError("line %d: entry key %d,%d needs 1 <= i < j" % (lineno, i, j))
            if (i, j) in entries:
                raise UsageError("line %d: duplicate entry %d,%d" % (lineno, i, j))
            try:
                entries[(i, j)] = parse_polynomial(value)
            except ParseError as exc:
                raise UsageError("line %d: %s" % (lineno, exc)) from None
    if size is None:
        raise UsageError("document has no size")
    if size < 0 or size % 2:
        raise UsageError("size must be even, got %d" % size)
    if pattern is not None:
        if entries:
            raise UsageError("a document gives either a pattern or entries, not both")
        return pattern_matrix(pattern, size)
    try:
        return SkewMatrix(range(1, size + 1), entries)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- lambda specialization -----------------------------------------------------------


def specialize_lambda(poly: Polynomial, value: Fraction) -> str:
    """Render ``poly`` at ``l = value`` as ``numerator`` or ``(numerator)/denominator``."""
    parts = poly.coefficients_in(LAMBDA)
    if not parts:
        return "0"
    top = max(parts)
    num = Polynomial()
    for k, c in parts.items():
        num = num + c * (value.numerator**k * value.denominator ** (top - k))
    den = value.denominator**top
    g = math.gcd(den, *(c for _, c in num.items())) if not num.is_zero() else den
    if g > 1:
        num = Polynomial({m: c // g for m, c in num.items()})
        den //= g
    if den == 1:
        return str(num)
    return "(%s)/%d" % (num, den)


# -- subcommands ---------------------------------------------------------------------


def cmd_pf(args, out: TextIO) -> int:
    if args.pattern is not None:
        if args.input is not None:
            raise UsageError("give either --input or --pattern")
        if args.size is None:
            raise UsageError("--pattern needs --size")
        A = pattern_matrix(args.pattern, args.size)
    else:
        if args.input in (None, "-"):
            text = sys.stdin.read()
        else:
            try:
                with open(args.input) as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(str(exc)) from None
        A = parse_matrix_document(text)

    value = None
    if args.lambda_value is not None:
        try:
            value = Fraction(args.lambda_value)
        except (ValueError, ZeroDivisionError):
            raise UsageError("--lambda expects an integer or rational, got %r" % args.lambda_value) from None

    results = {}
    if args.algorithm in ("expansion", "both"):
        results["expansion"] = pf_expansion(A)
    if args.algorithm in ("condensation", "both"):
        results["condensation"] = pf_condensation(A)
    poly = next(iter(results.values()))
    if len(results) == 2 and results["expansion"] != results["condensation"]:
        print("expansion:    %s" % results["expansion"], file=out)
        print("condensation: %s" % results["condensation"], file=out)
        print("algorithms disagree", file=out)
        return EXIT_FAILURE
    print(str(poly) if value is None else specialize_lambda(poly, value), file=out)
    if len(results) == 2:
        print("algorithms agree", file=out)
    return EXIT_OK


def cmd_matchings(args, out: TextIO) -> int:
    n = args.n
    if not 1 <= n <= MAX_MATCHING_PAIRS:
        raise UsageError("n must be between 1 and %d" % MAX_MATCHING_PAIRS)
    if not args.stats:
        for m, _ in enumerate_with_stats(range(1, 2 * n + 1)):
            print(str(m), file=out)
        return EXIT_OK
    total: dict[int, int] = {}
    for m, st in enumerate_with_stats(range(1, 2 * n + 1)):
        sign = -1 if st.cross % 2 else 1
        lpow = st.cross + st.nest
        total[lpow] = total.get(lpow, 0) + sign
        print(
            "%s cross=%d nest=%d sign=%s lpow=%d" % (m, st.cross, st.nest, "+" if sign > 0 else "-", lpow),
            file=out,
        )
    poly = Polynomial({((LAMBDA, e),) if e else (): c for e, c in total.items()})
    print("total = %s" % poly, file=out)
    return EXIT_OK


def cmd_audit(args, out: TextIO) -> int:
    n = args.n
    if not 2 <= n <= MAX_AUDIT_PAIRS:
        raise UsageError("audit supports 2 <= n <= %d" % MAX_AUDIT_PAIRS)
    report = audit_cancellation(n)
    for line in report.lines():
        print(line, file=out)
    if args.orbits:
        for orbit in report.orbits:
            print(orbit.render(), file=out)
    return EXIT_OK if report.all_cancelled else EXIT_FAILURE


def cmd_check(args, out: TextIO) -> int:
    name = args.identity_flag or args.identity or "all"
    if name != "all" and name not in identities.IDENTITIES:
        raise UsageError(
            "unknown identity %r (choose from all, %s)" % (name, ", ".join(identities.IDENTITIES))
        )
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    ok = True
    for report in identities.run_suite(name, args.max_n):
        print(report.line(), file=out)
        ok = ok and report.passed
    return EXIT_OK if ok else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lambda-pfaffian", description="Exact lambda-Pfaffians and the identities they satisfy.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pf", help="compute a lambda-Pfaffian")
    p.add_argument("--input", help="matrix document path, '-' for stdin")
    p.add_argument("--pattern", help="one of: %s" % ", ".join(PATTERNS))
    p.add_argument("--size", type=int, help="matrix size 2N for --pattern")
    p.add_argument("--algorithm", choices=("expansion", "condensation", "both"), default="expansion")
    p.add_argument("--lambda", dest="lambda_value", help="specialize l to an integer or rational")
    p.set_defaults(func=cmd_pf)

    p = sub.add_parser("matchings", help="list perfect matchings of [2n]")
    p.add_argument("n", type=int, help="number of pairs")
    p.add_argument("--stats", action="store_true", help="show crossings, nestings, sign and l-power")
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("audit", help="audit the cancelling involution on all term pairs")
    p.add_argument("n", type=int, help="number of pairs (2..%d)" % MAX_AUDIT_PAIRS)
    p.add_argument("--orbits", action="store_true", help="list every orbit")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("check", help="verify the closed-form identities")
    p.add_argument("identity", nargs="?", help="all or one of: %s" % ", ".join(identities.IDENTITIES))
    p.add_argument("--identity", dest="identity_flag")
    p.add_argument("--max-n", type=int, default=4)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except CondensationPivotZero as exc:
        print("error: %s; use --algorithm expansion" % exc, file=sys.stderr)
        return EXIT_COMPUTE
    except InexactDivision as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
