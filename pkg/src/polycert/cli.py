"""Command-line interface.

Every subcommand prints one JSON certificate document on stdout. Exit codes:
0 for a certified positive result, 2 for a certified negative result or an
exhausted search, 1 for usage and parse errors. File arguments accept ``-``
for stdin; logs go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import documents, membership, polya, powers, simplexcert
from .polyring import PolynomialSyntaxError, parse, parse_many

log = logging.getLogger("polycert")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _read_poly(path: str, nvars: int | None):
    return parse(_read(path), nvars)


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def read_identity(text: str) -> list[tuple[str, str]]:
    """Identity file: one ``(g ; h)`` pair per line."""
    pairs = []
    for ln in _lines(text):
        if ln.startswith("(") and ln.endswith(")"):
            ln = ln[1:-1]
        if ln.count(";") != 1:
            raise PolynomialSyntaxError(f"identity line needs exactly one ';': {ln!r}")
        g, h = ln.split(";")
        pairs.append((g.strip(), h.strip()))
    if not pairs:
        raise PolynomialSyntaxError("identity file is empty")
    return pairs


def _emit(doc: dict) -> None:
    sys.stdout.write(documents.dumps(doc))


def cmd_polya(args) -> int:
    f = _read_poly(args.input, args.nvars)
    res = polya.polya_exponent(f, args.max_k)
    _emit(documents.polya_document(f, res))
    return EXIT_OK if res.found else EXIT_NEGATIVE


def cmd_certify(args) -> int:
    ftext = _read(args.input)
    if args.positive:
        (f,) = parse_many([ftext], args.nvars)
        identity = None
        res = simplexcert.certify_positive_simplex(f, args.max_shift, args.max_k)
    else:
        if not args.identity:
            raise argparse.ArgumentTypeError("certify needs --identity FILE or --positive")
        pairs = read_identity(_read(args.identity))
        polys = parse_many([ftext] + [t for pair in pairs for t in pair], args.nvars)
        f, rest = polys[0], polys[1:]
        identity = simplexcert.IdentityData(list(zip(rest[0::2], rest[1::2])))
        if not simplexcert.verify_identity(f, identity):
            log.error("identity does not reproduce f")
            return EXIT_USAGE
        res = simplexcert.certify_simplex(f, identity, args.max_shift, args.max_k)
    _emit(documents.certify_document(f, identity, res, args.max_shift, args.max_k))
    return EXIT_OK if isinstance(res, simplexcert.SimplexCertificate) else EXIT_NEGATIVE


def cmd_powers(args) -> int:
    f = _read_poly(args.input, args.nvars)
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if args.odd_power is not None:
        report = powers.odd_power_corollary(f, args.odd_power, args.max_power)
    else:
        report = powers.stabilize(f, args.max_power)
    hyp = powers.check_hypotheses(f, args.probe_powers) if args.hypotheses else None
    _emit(documents.powers_document(f, report, args.max_power, hyp))
    return EXIT_OK if report.stabilized else EXIT_NEGATIVE


def cmd_member(args) -> int:
    gens_text = _lines(_read(args.generators))
    if not gens_text:
        raise PolynomialSyntaxError("generators file is empty")
    polys = parse_many([args.target] + gens_text, args.nvars)
    target, gens = polys[0], polys[1:]
    T = membership.SemiringPresentation(gens)
    res = membership.member_at_degree(target, T, args.degree)
    _emit(documents.member_document(target, T, args.degree, res))
    return EXIT_OK if isinstance(res, membership.MembershipWitness) else EXIT_NEGATIVE


def cmd_newton(args) -> int:
    f = _read_poly(args.input, args.nvars)
    if f.is_zero():
        raise ValueError("the zero polynomial has no Newton polytope")
    _emit(documents.newton_document(f))
    return EXIT_OK


def _weights(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weight vector {text!r}") from exc


def cmd_initial(args) -> int:
    f = _read_poly(args.input, args.nvars)
    if args.w is not None and len(args.w) != f.nvars:
        raise ValueError(f"weight has {len(args.w)} entries, polynomial has {f.nvars} variables")
    if args.w is None and f.is_zero():
        raise ValueError("the zero polynomial has no proper initial parts")
    doc = documents.initial_document(f, args.w)
    _emit(doc)
    if args.w is None and not doc["outcome"]["initial_parts_nonneg"]:
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_frobenius(args) -> int:
    p = powers.SemigroupParams(args.l1, args.l2, args.k)
    _emit(documents.frobenius_document(p))
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = documents.loads(_read(args.input))
    ok, msg = documents.verify_document(doc)
    (log.info if ok else log.error)(msg)
    sys.stdout.write(documents.dumps({"verified": ok, "message": msg, "command": doc.get("command")}))
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polycert", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def poly_input(p):
        p.add_argument("--input", required=True, help="polynomial file, or - for stdin")
        p.add_argument("--nvars", type=int, default=None, help="ambient variable count (default: largest index used)")

    p = sub.add_parser("polya", help="least k with (x1+...+xn)^k f coefficient-nonnegative")
    poly_input(p)
    p.add_argument("--max-k", type=int, default=200)
    p.set_defaults(func=cmd_polya)

    p = sub.add_parser("certify", help="nonnegative representative of f modulo x1+...+xn-1")
    poly_input(p)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--identity", help="file of '(g ; h)' lines with f = sum g*h")
    grp.add_argument("--positive", action="store_true", help="use the trivial identity f = f*1")
    p.add_argument("--max-shift", type=int, default=64)
    p.add_argument("--max-k", type=int, default=200)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("powers", help="least k0 with f^k nonnegative for all k >= k0")
    poly_input(p)
    p.add_argument("--max-power", type=int, default=200)
    p.add_argument("--odd-power", type=int, default=None, help="odd l with f^l known nonnegative")
    p.add_argument("--hypotheses", action="store_true", help="include hypothesis diagnostics")
    p.add_argument("--probe-powers", type=int, default=20)
    p.set_defaults(func=cmd_powers)

    p = sub.add_parser("member", help="degree-bounded semiring membership")
    p.add_argument("--target", required=True, help="target polynomial text")
    p.add_argument("--generators", required=True, help="file with one generator per line, or -")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--nvars", type=int, default=None)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("newton", help="Newton polytope vertices and faces")
    poly_input(p)
    p.set_defaults(func=cmd_newton)

    p = sub.add_parser("initial", help="valuation and initial part for --w, or all proper initial parts")
    poly_input(p)
    p.add_argument("--w", type=_weights, default=None, help="comma-separated rational weights")
    p.set_defaults(func=cmd_initial)

    p = sub.add_parser("frobenius", help="conductor of {a*l1 + b*l2 : a, b >= k}")
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("verify", help="re-check any certificate document")
    p.add_argument("--input", required=True, help="document file, or - for stdin")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (OSError, ValueError, argparse.ArgumentTypeError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
