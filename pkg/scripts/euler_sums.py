"""Numerically check quasi-shuffle relations between truncated Euler sums.

For each pair of words u, v the partial sums satisfy S_N(u) S_N(v) = S_N(u * v)
exactly, so the printed residual measures floating point error only.
"""
import argparse

from quasishuffle.algebra import Element, quasi_shuffle
from quasishuffle.alphabets import make_alphabet
from quasishuffle.errors import DivergentSeriesError
from quasishuffle.expr import parse_word
from quasishuffle.series import euler_sum_numeric


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphabet", default="qsym")
    ap.add_argument("--terms", type=int, default=100000)
    ap.add_argument("pairs", nargs="*", default=["z2,z2", "z2,z3", "z3,z2.z1"],
                    help="comma-separated word pairs such as z2,z3")
    args = ap.parse_args()
    alphabet = make_alphabet(args.alphabet)
    for pair in args.pairs:
        u, v = (parse_word(s, alphabet) for s in pair.split(","))
        try:
            lhs = euler_sum_numeric(u, args.terms, alphabet) * euler_sum_numeric(v, args.terms, alphabet)
            rhs = euler_sum_numeric(quasi_shuffle(Element.word(alphabet, u),
                                                  Element.word(alphabet, v)), args.terms)
        except DivergentSeriesError as exc:
            print(f"{pair}: {exc}")
            continue
        print(f"{pair}: product {lhs:.12g}, stuffle {rhs:.12g}, residual {abs(lhs - rhs):.2e}")


if __name__ == "__main__":
    main()
