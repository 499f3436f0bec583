"""Coxeter polynomials of F_n and of the interval pairs with matching polynomials.

For each poset: size, cyclotomic factorization, and whether all roots lie on
the unit circle.  The remainder after removing cyclotomic factors is printed
when nonzero degree, with the modulus range of its roots.
"""

import argparse
import time

import numpy as np

from dexter import dyck, hochschild, intervals, known
from dexter.invariants import coxeter_polynomial, cyclotomic_factor, numeric_roots, roots_on_unit_circle


def describe(label: str, P) -> None:
    t0 = time.perf_counter()
    p = coxeter_polynomial(P)
    f = cyclotomic_factor(p)
    on = roots_on_unit_circle(p)
    line = f"{label:<24} {len(P):>5}  circle={str(on):<5}  {f}"
    if not f.is_complete():
        r = np.abs(numeric_roots(f.remainder))
        line += f"   |roots| in [{r.min():.4f}, {r.max():.4f}]"
    print(line + f"   ({time.perf_counter() - t0:.1f}s)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6, help="largest F_n")
    args = ap.parse_args()
    for w, _, _ in known.COXETER_UPPER_EXAMPLES:
        describe(f"J({w})", intervals.interval_poset(intervals.J_of(dyck.parse(w))))
    w = known.OFF_CIRCLE_EXAMPLE
    describe(f"I({w})", intervals.interval_poset(intervals.I_of(dyck.parse(w))))
    for n in range(1, args.max_n + 1):
        describe(f"F_{n}", hochschild.f_poset(n))


if __name__ == "__main__":
    main()
