"""Zeta polynomial values of D_n at -1 and -2, beyond the gated range."""

import argparse
import time

from dexter import dyck, order
from dexter.invariants import zeta_polynomial


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    print(f"{'n':>2} {'Z(-1)':>8} {'C(n-1)':>8} {'Z(-2)':>8} {'s':>6}")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        Z = zeta_polynomial(order.hasse(n))
        print(f"{n:>2} {Z(-1):>8} {dyck.catalan(n - 1):>8} {Z(-2):>8} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    main()
