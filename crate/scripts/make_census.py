#!/usr/bin/env python3
"""Regenerates the bundled census files from the KnotInfo/LinkInfo tables.

Requires the `database_knotinfo` package. Outputs go to crates/core/data/.
"""

import ast
import csv
import pathlib
import re

from database_knotinfo import link_list

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "data"


def pd_text(pd):
    return " ".join("X({},{},{},{})".format(*q) for q in pd)


def parse_vector(s):
    return ast.literal_eval(s.replace("{", "[").replace("}", "]"))


def arc_is_over_to_under(pd, label, n):
    """True when the arc ends at an under-crossing (slot 0 or 2)."""
    nxt = 1 if label == n else label + 1
    for q in pd:
        for s in range(4):
            if q[s] == label and q[(s + 2) % 4] == nxt:
                return s % 2 == 0
    raise ValueError("arc head not found")


def shift(pd, n):
    return [[1 if a == n else a + 1 for a in q] for q in pd]


def mirror(pd):
    return [[a, d, c, b] for a, b, c, d in pd]


def connected_sum(p1, p2):
    """Cuts the last arc of each knot and reconnects them in series."""
    n1, n2 = 2 * len(p1), 2 * len(p2)
    # Make the two cut arcs of the same kind so the sum stays alternating.
    while arc_is_over_to_under(p2, n2, n2) != arc_is_over_to_under(p1, n1, n1):
        p2 = shift(p2, n2)
    last = n1 + n2
    out = []
    for q in p1:
        q = list(q)
        for s in range(4):
            if q[s] == n1 and q[(s + 2) % 4] == 1:
                q[s] = last
        out.append(q)
    for q in p2:
        q = [a + n1 for a in q]
        for s in range(4):
            if q[s] == last and q[(s + 2) % 4] == n1 + 1:
                q[s] = n1
        out.append(q)
    # Labels: arc n1 now runs into the second knot, arc `last` returns to 1.
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    knots = [
        k
        for k in link_list()
        if k["alternating"] == "Y" and k["pd_notation"] and 3 <= int(k["crossing_number"]) <= 10
    ]
    by_name = {k["name"]: ast.literal_eval(k["pd_notation"]) for k in knots}

    composites = [
        ("3_1#3_1", by_name["3_1"], by_name["3_1"]),
        ("3_1#m3_1", by_name["3_1"], mirror(by_name["3_1"])),
        ("3_1#4_1", by_name["3_1"], by_name["4_1"]),
        ("4_1#4_1", by_name["4_1"], by_name["4_1"]),
        ("3_1#5_1", by_name["3_1"], by_name["5_1"]),
        ("3_1#m5_2", by_name["3_1"], mirror(by_name["5_2"])),
        ("4_1#5_2", by_name["4_1"], by_name["5_2"]),
        ("3_1#6_1", by_name["3_1"], by_name["6_1"]),
        ("3_1#m6_2", by_name["3_1"], mirror(by_name["6_2"])),
        ("4_1#6_3", by_name["4_1"], by_name["6_3"]),
        ("5_1#m5_1", by_name["5_1"], mirror(by_name["5_1"])),
    ]
    triple = connected_sum(connected_sum(by_name["3_1"], by_name["3_1"]), mirror(by_name["3_1"]))

    with open(OUT / "alternating_knots.census", "w") as f:
        f.write("# Prime alternating knots with 3 to 10 crossings (KnotInfo PD codes),\n")
        f.write("# followed by composite alternating knots built by PD-level connected sum.\n")
        for k in knots:
            f.write(f"{k['name']} ; pd ; {pd_text(by_name[k['name']])}\n")
        for name, a, b in composites:
            f.write(f"{name} ; pd ; {pd_text(connected_sum(a, b))}\n")
        f.write(f"3_1#3_1#m3_1 ; pd ; {pd_text(triple)}\n")

    with open(OUT / "knotinfo_reference.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["name", "alexander", "signature", "genus", "conway"])
        for k in knots:
            w.writerow([k["name"], k["alexander_polynomial"], k["signature"], k["three_genus"], k["conway_polynomial"]])

    links = [
        l
        for l in link_list(proper_links=True)
        if l["alternating"] == "Y" and l["pd_notation_vector"] and int(l["crossing_number"]) <= 8
    ]
    with open(OUT / "alternating_links.census", "w") as f:
        f.write("# Alternating links with at most 8 crossings (LinkInfo PD codes, all listed orientations).\n")
        for l in links:
            name = re.sub(r"\s+", "", l["name"])
            f.write(f"{name} ; pd ; {pd_text(parse_vector(l['pd_notation_vector']))}\n")

    with open(OUT / "links_reference.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["name", "signature", "conway"])
        for l in links:
            w.writerow([re.sub(r"\s+", "", l["name"]), l["signature"], l["conway_polynomial"]])

    print(len(knots), "knots,", len(composites) + 1, "composites,", len(links), "links")


if __name__ == "__main__":
    main()
