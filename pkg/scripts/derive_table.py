"""Print the derived coefficient polynomials c_0..c_K next to their product-formula form.

    python scripts/derive_table.py 8
"""

import argparse

from binomia.binomial_derivation import closed_form_entry, derive_coefficient_polynomials, verify_recurrence
from binomia.difference_calculus import ff_to_monomial
from binomia.exact_arith import render_scalar


def monomial_text(coeffs):
    terms = [f"{render_scalar(c)}*n^{j}" for j, c in enumerate(coeffs) if c]
    return " + ".join(reversed(terms)) or "0"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("K", type=int, nargs="?", default=6)
    args = ap.parse_args()

    table = derive_coefficient_polynomials(args.K)
    for k, entry in enumerate(table):
        mark = "ok" if entry == closed_form_entry(k) else "MISMATCH"
        print(f"c_{k:<3} = {entry!s:<18} = {monomial_text(ff_to_monomial(entry))}   [{mark}]")
    rep = verify_recurrence(table)
    print(f"recurrence: {len(rep.checks) - len(rep.failures)}/{len(rep.checks)} checks pass")


if __name__ == "__main__":
    main()
