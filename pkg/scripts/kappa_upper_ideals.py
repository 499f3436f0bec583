"""Upper-ideal sizes indexed by binary trees.

Emits, for every path w of size n, the tree kappa(w) and |Up(w)|, so the
dexter side can be compared with counts of modern intervals computed
elsewhere.  Output is CSV on stdout.
"""

import argparse
import csv
import sys

from dexter import dyck, order


def tree_str(t) -> str:
    if t is None:
        return "."
    return f"({tree_str(t.left)},{tree_str(t.right)})"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["n", "path", "tree", "right_branch", "upper_ideal_size"])
    for n in range(args.max_n + 1):
        P = order.hasse(n)
        for i, w in enumerate(P.elements):
            t = dyck.kappa(w)
            out.writerow([n, dyck.to_string(w), tree_str(t), dyck.rightmost_branch_length(t),
                          bin(P.up[i]).count("1")])


if __name__ == "__main__":
    main()
