"""Command-line front end: ``quasishuffle <command> ...``.

Exit codes: 0 success, 2 parse/usage error, 3 domain error,
4 singular matrix or non-generic q.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import exp_map, log_map, lyndon_express, quasi_shuffle, shuffle
from .alphabets import make_alphabet, parse_alphabet_config
from .dual import antipode_star, dual_coproduct, exp_star, log_star
from .errors import DomainError, LyndonBasisError, ParseError, QuasiShuffleError, \
    SingularMatrixError
from .expr import parse_element, parse_word, to_json
from .hopf import ANTIPODE_STRATEGIES, antipode, coproduct
from .qdeform import delta_q, phi_matrix, q_product, varchenko_det
from .qsym import QSymElement
from .scalars import mat_det
from .series import euler_sum_numeric, phi_n
from .words import lyndon_count, lyndon_factorization, lyndon_words, validate_alphabet, word_str

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_SINGULAR = 0, 2, 3, 4


class UsageError(ParseError):
    pass


def load_alphabet(source: str):
    """A built-in alphabet name, or the path of an alphabet config file."""
    if os.path.sep in source or os.path.isfile(source):
        if not os.path.isfile(source):
            raise UsageError(f"alphabet config file not found: {source}")
        with open(source, encoding="utf-8") as fh:
            name = os.path.splitext(os.path.basename(source))[0]
            return parse_alphabet_config(fh.read(), name=name)
    return make_alphabet(source)


def _count(text):
    """argparse type for nonnegative integers."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _product(name):
    if name == "quasishuffle":
        return quasi_shuffle
    if name == "shuffle":
        return shuffle
    if name.startswith("q:"):
        return q_product(_rational(name[2:]))
    raise UsageError(f"unknown product {name!r}")


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _emit_obj(args, obj):
    _emit(args, str(obj), to_json(obj))


# -- commands -----------------------------------------------------------------

def cmd_prod(args, alphabet):
    product = _product(args.product)
    factors = [parse_element(e, alphabet) for e in args.exprs]
    result = factors[0]
    for f in factors[1:]:
        result = product(result, f)
    _emit_obj(args, result)


def cmd_coprod(args, alphabet):
    kind = args.kind
    if kind == "delta":
        result = coproduct(parse_element(args.expr, alphabet))
    elif kind.startswith("deltaq:"):
        result = delta_q(parse_element(args.expr, alphabet), _rational(kind[7:]))
    elif kind in ("dual-sh", "dual-qsh"):
        x = parse_element(args.expr, alphabet, dual=True)
        result = dual_coproduct(x, "shuffle" if kind == "dual-sh" else "quasishuffle")
    else:
        raise UsageError(f"unknown coproduct kind {kind!r}")
    _emit_obj(args, result)


def cmd_antipode(args, alphabet):
    x = parse_element(args.expr, alphabet, dual=args.dual)
    if args.dual:
        _emit_obj(args, antipode_star(x))
        return EXIT_OK
    if args.strategy != "all":
        _emit_obj(args, antipode(x, args.strategy))
        return EXIT_OK
    results = {s: antipode(x, s) for s in ANTIPODE_STRATEGIES}
    agree = len(set(results.values())) == 1
    text = "\n".join(f"{s.replace('_', '-')}: {r}" for s, r in results.items())
    text += "\nagree" if agree else "\nDISAGREE"
    _emit(args, text, {"kind": "antipode-all", "agree": agree,
                       "results": {s.replace("_", "-"): to_json(r) for s, r in results.items()}})
    if not agree:
        print("antipode strategies disagree", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_exp(args, alphabet):
    x = parse_element(args.expr, alphabet, dual=args.dual)
    _emit_obj(args, exp_star(x) if args.dual else exp_map(x))


def cmd_log(args, alphabet):
    x = parse_element(args.expr, alphabet, dual=args.dual)
    _emit_obj(args, log_star(x) if args.dual else log_map(x))


def _names(w):
    return [a.name for a in w]


def cmd_lyndon(args, alphabet):
    action = args.action
    if action in ("list", "count") and args.degree is None:
        raise UsageError(f"lyndon {action} needs --degree")
    if action == "list":
        words = lyndon_words(alphabet, args.degree)
        _emit(args, "\n".join(word_str(w) for w in words),
              {"kind": "words", "words": [_names(w) for w in words]})
    elif action == "count":
        n = lyndon_count(alphabet, args.degree)
        _emit(args, str(n), {"kind": "scalar", "value": str(n)})
    elif action == "factor":
        factors = lyndon_factorization(parse_word(_need_arg(args), alphabet))
        _emit(args, " ".join(f"({word_str(f)})" for f in factors),
              {"kind": "words", "words": [_names(f) for f in factors]})
    elif action == "express":
        expr = lyndon_express(parse_element(_need_arg(args), alphabet))
        _emit(args, str(expr), {"kind": "lyndon-expression", "terms": [
            {"coefficient": str(c), "factors": [_names(g) for g in mono]}
            for c, mono in expr.terms]})


def _need_arg(args):
    if not args.arg:
        raise UsageError(f"lyndon {args.action} needs an argument")
    return args.arg


def cmd_basis(args, alphabet):
    if alphabet.name != "qsym":
        raise DomainError("basis conversion is only defined over qsym")
    x = parse_element(args.expr, alphabet)
    _emit_obj(args, QSymElement.from_words(x, args.target))


def cmd_det_check(args, alphabet):
    w = parse_word(args.word, alphabet)
    if not w:
        raise DomainError("det-check needs a nonempty word")
    q = _rational(args.q)
    m = phi_matrix(w, q)
    lhs, rhs = mat_det(m), varchenko_det(w, q)
    size = m.shape[0]
    text = f"size: {size}x{size}\nmatrix determinant: {lhs}\nproduct formula: {rhs}\n"
    text += "agree" if lhs == rhs else "DISAGREE"
    _emit(args, text, {"kind": "det-check", "size": size, "matrix_det": str(lhs),
                       "formula_det": str(rhs), "agree": lhs == rhs})
    return EXIT_OK if lhs == rhs else EXIT_DOMAIN


def cmd_phi(args, alphabet):
    if args.r is not None:
        alphabet = make_alphabet(f"euler:{args.r}")
    p = phi_n(parse_element(args.expr, alphabet), args.n)
    _emit(args, str(p), {"kind": "poly", "num_vars": p.num_vars, "order": p.order, "terms": [
        {"exponents": list(e), "coefficient": [str(c) for c in v.coeffs]}
        for e, v in p.sorted_terms()]})


def cmd_zeta(args, alphabet):
    w = parse_word(args.word, alphabet)
    value = euler_sum_numeric(w, args.terms, alphabet)
    if isinstance(value, complex):
        _emit(args, f"{value.real:.12g} + {value.imag:.12g}i",
              {"kind": "float", "value": [value.real, value.imag]})
    else:
        _emit(args, f"{value:.12g}", {"kind": "float", "value": value})


def cmd_validate(args, alphabet):
    report = validate_alphabet(alphabet, args.bound)
    if report.valid:
        text = f"valid through degree {args.bound}"
    else:
        text = "\n".join(str(v) for v in report.violations)
    _emit(args, text, {"kind": "validation", "valid": report.valid,
                       "violations": [str(v) for v in report.violations]})
    return EXIT_OK if report.valid else EXIT_DOMAIN


# -- parser -------------------------------------------------------------------

def build_parser():
    def global_options(defaults):
        p = argparse.ArgumentParser(add_help=False)
        kw = {} if defaults else {"default": argparse.SUPPRESS}
        p.add_argument("--alphabet", help="qsym, euler:<r>, trunc:<m>, partition, or a config file",
                       **({"default": "qsym"} if defaults else kw))
        p.add_argument("--json", action="store_true", help="machine-readable output",
                       **({"default": False} if defaults else kw))
        return p

    parser = argparse.ArgumentParser(prog="quasishuffle", parents=[global_options(True)],
                                     description="Quasi-shuffle algebra calculator.")
    common = global_options(False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prod", parents=[common], help="multiply expressions")
    p.add_argument("exprs", nargs="+")
    p.add_argument("--product", default="quasishuffle",
                   help="quasishuffle, shuffle or q:<rational>")
    p.set_defaults(func=cmd_prod)

    p = sub.add_parser("coprod", parents=[common], help="apply a coproduct")
    p.add_argument("expr")
    p.add_argument("--kind", default="delta", help="delta, deltaq:<q>, dual-sh or dual-qsh")
    p.set_defaults(func=cmd_coprod)

    p = sub.add_parser("antipode", parents=[common], help="apply the antipode")
    p.add_argument("expr")
    p.add_argument("--strategy", default="bracket-reversal",
                   choices=["recursive", "coarsening", "bracket-reversal", "all"])
    p.add_argument("--dual", action="store_true", help="antipode of the dual algebra")
    p.set_defaults(func=cmd_antipode)

    for name, func in (("exp", cmd_exp), ("log", cmd_log)):
        p = sub.add_parser(name, parents=[common], help=f"apply {name} (or its transpose)")
        p.add_argument("expr")
        p.add_argument("--dual", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("lyndon", parents=[common], help="Lyndon words")
    p.add_argument("action", choices=["list", "count", "factor", "express"])
    p.add_argument("arg", nargs="?")
    p.add_argument("--degree", type=_count)
    p.set_defaults(func=cmd_lyndon)

    p = sub.add_parser("basis", parents=[common], help="quasi-symmetric basis conversion")
    p.add_argument("action", choices=["convert"])
    p.add_argument("target", choices=["M", "P", "F"])
    p.add_argument("expr")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("det-check", parents=[common], help="determinant identity for a word")
    p.add_argument("word")
    p.add_argument("--q", required=True)
    p.set_defaults(func=cmd_det_check)

    p = sub.add_parser("phi", parents=[common], help="polynomial realization phi_n")
    p.add_argument("expr")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("zeta", parents=[common], help="numeric partial Euler sum")
    p.add_argument("word")
    p.add_argument("--terms", type=_count, default=100000)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("validate-alphabet", parents=[common], help="check the bracket axioms")
    p.add_argument("--bound", type=_count, default=10)
    p.set_defaults(func=cmd_validate)
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        alphabet = load_alphabet(args.alphabet)
        code = args.func(args, alphabet)
        return EXIT_OK if code is None else code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SingularMatrixError as exc:
        print(f"singular: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (DomainError, LyndonBasisError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except QuasiShuffleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()
