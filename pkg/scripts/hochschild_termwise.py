"""Compare the order on F_n with the termwise order on rho(F_n)."""

import argparse
import json
import time

from dexter import hochschild


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        r = hochschild.termwise_experiment(n)
        r["seconds"] = round(time.perf_counter() - t0, 2)
        print(json.dumps(r))


if __name__ == "__main__":
    main()
