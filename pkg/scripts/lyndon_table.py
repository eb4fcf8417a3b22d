"""Print Lyndon word counts by degree, from enumeration and from the Moebius formula."""
import argparse

from quasishuffle.alphabets import make_alphabet
from quasishuffle.words import lyndon_count, lyndon_words


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alphabet", default="qsym")
    ap.add_argument("--max-degree", type=int, default=8)
    args = ap.parse_args()
    alphabet = make_alphabet(args.alphabet)
    print(f"{'degree':>6} {'enumerated':>10} {'formula':>8}")
    for n in range(1, args.max_degree + 1):
        print(f"{n:>6} {len(lyndon_words(alphabet, n)):>10} {lyndon_count(alphabet, n):>8}")


if __name__ == "__main__":
    main()
