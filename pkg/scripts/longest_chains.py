"""Longest chains in D_n against the quarter-squares-plus-one sequence.

The sequence matches when chains are measured by their number of elements
(edges + 1).  Only reported; nothing is asserted.
"""

import argparse

from dexter import order
from dexter.invariants import longest_chain, quarter_squares_plus_one


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    print(f"{'n':>2} {'|D_n|':>6} {'edges':>5} {'elements':>8} {'n^2/4+1':>7} {'maximal':>7}")
    for n in range(1, args.max_n + 1):
        P = order.hasse(n)
        lc = longest_chain(P)
        q = quarter_squares_plus_one(n)
        flag = "" if lc + 1 == q else "  differs"
        print(f"{n:>2} {len(P):>6} {lc:>5} {lc + 1:>8} {q:>7} {len(P.maximal()):>7}{flag}")


if __name__ == "__main__":
    main()
