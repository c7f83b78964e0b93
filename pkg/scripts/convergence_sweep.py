"""Final absolute error of the order-K partial sum over a grid of exponents and x.

    python scripts/convergence_sweep.py --order 64
"""

import argparse

from binomia.exact_arith import Exponent
from binomia.numeric_eval import convergence_report

EXPONENTS = ["1/2", "-1/2", "1/3", "-1", "-2", "7/3", "i", "1+i", "-3/2+1/2i"]
XS = [-0.9, -0.5, -0.25, 0.25, 0.5, 0.9, 0.99]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=64)
    args = ap.parse_args()

    print(f"{'n':>12} " + " ".join(f"{x:>10}" for x in XS))
    for text in EXPONENTS:
        n = Exponent.parse(text)
        errs = [convergence_report(n, x, args.order).final_error for x in XS]
        print(f"{text:>12} " + " ".join(f"{e:10.2e}" for e in errs))


if __name__ == "__main__":
    main()
