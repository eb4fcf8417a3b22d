"""Compare the exact determinant of the Phi_q matrix with its product formula.

Runs over every word of the given length built from letters of degree <= 2.
"""
import argparse
import time
from fractions import Fraction

from quasishuffle.alphabets import make_alphabet
from quasishuffle.qdeform import phi_matrix, varchenko_det
from quasishuffle.scalars import mat_det
from quasishuffle.words import word_str


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphabet", default="qsym")
    ap.add_argument("--length", type=int, default=4)
    ap.add_argument("--q", type=Fraction, default=Fraction(2))
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    alphabet = make_alphabet(args.alphabet)
    letters = [a for n in (1, 2) for a in alphabet.letters_of_degree(n)]
    words = [()]
    for _ in range(args.length):
        words = [w + (a,) for w in words for a in letters]
    start = time.perf_counter()
    bad = 0
    for w in words:
        d1, d2 = mat_det(phi_matrix(w, args.q)), varchenko_det(w, args.q)
        bad += d1 != d2
        if args.verbose or d1 != d2:
            print(f"{word_str(w)}: {d1} {'==' if d1 == d2 else '!='} {d2}")
    print(f"{len(words)} words, {bad} mismatches, {time.perf_counter() - start:.2f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
