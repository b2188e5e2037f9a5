#!/usr/bin/env python3
"""Independent invariant values for the table knots, taken from KnotInfo.

usage: make_oracles.py <knotinfo_data_complete.csv> > ../tests/data/knotinfo_invariants.jsonl
Polynomials are written as {"offset": k, "coeffs": [...]} (lowest degree first).
"""
import csv
import json
import sys

import sympy

t = sympy.Symbol("t")


def laurent(text):
    expr = sympy.sympify(text.replace("^", "**"), locals={"t": t})
    expr = sympy.expand(expr)
    terms = sympy.Poly(sympy.expand(expr * t**64), t).terms()
    degs = {m[0] - 64: int(c) for m, c in terms}
    lo, hi = min(degs), max(degs)
    return {"offset": lo, "coeffs": [degs.get(k, 0) for k in range(lo, hi + 1)]}


def main():
    csv.field_size_limit(1 << 30)
    with open(sys.argv[1], newline="") as f:
        for row in csv.DictReader(f, delimiter="|"):
            c = row["crossing_number"]
            if not c.isdigit() or not 3 <= int(c) <= 11:
                continue
            name = row["name"] if int(c) <= 10 else row["classical_conway_name"]
            rec = {
                "name": name,
                "determinant": int(row["determinant"]),
                "signature": int(row["signature"]),
                "alexander": laurent(row["alexander_polynomial"]),
                "jones": laurent(row["jones_polynomial"]),
            }
            sys.stdout.write(json.dumps(rec, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
