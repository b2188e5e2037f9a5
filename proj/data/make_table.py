#!/usr/bin/env python3
"""Build knots.jsonl from the KnotInfo database (pip package database_knotinfo).

usage: make_table.py <knotinfo_data_complete.csv> [max_crossings] > knots.jsonl
"""
import csv
import json
import sys


def main():
    src = sys.argv[1]
    cmax = int(sys.argv[2]) if len(sys.argv) > 2 else 11
    csv.field_size_limit(1 << 30)
    out = []
    seen = set()
    with open(src, newline="") as f:
        for row in csv.DictReader(f, delimiter="|"):
            c = row["crossing_number"]
            if not c.isdigit():
                continue
            c = int(c)
            if c < 3 or c > cmax:
                continue
            name = row["name"] if c <= 10 else row["classical_conway_name"]
            if name in seen:
                raise SystemExit("duplicate name " + name)
            seen.add(name)
            pd = json.loads(row["pd_notation"])
            if len(pd) != c:
                raise SystemExit("pd length mismatch for " + name)
            out.append((c, row["name"], name, pd))
    for c, _, name, pd in out:
        sys.stdout.write(json.dumps({"name": name, "pd": pd}, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
