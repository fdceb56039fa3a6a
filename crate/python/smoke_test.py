"""Smoke test for the mono2t extension module.

Build and install it first, e.g. `maturin develop -m crates/py/Cargo.toml`.
"""

import json
import sys

import mono2t


def check(cond, msg):
    if not cond:
        print(f"FAIL {msg}")
        sys.exit(1)
    print(f"ok   {msg}")


def main():
    gap = mono2t.Polygon.fixture("GAP7")
    check(len(gap) == 16 and gap.m == 8, "GAP7 has 16 vertices and m = 8")
    check(len(gap.reflex_vertices()) == 6, "GAP7 has 6 reflex vertices")

    approx = gap.approximate()
    check(approx.count == 1 and approx.coverage_complete, "approx guards GAP7 with one transmitter")
    check(gap.exact(k=2).count == 1, "exact 2-transmitter optimum is 1")
    check(gap.exact(k=0, budget=5).count == 3, "exact 0-transmitter optimum is 3")
    try:
        gap.exact(k=0, budget=2)
        check(False, "budget 2 is exhausted")
    except mono2t.BudgetExhausted:
        check(True, "budget 2 is exhausted")

    stair = mono2t.Polygon.fixture("stair6")
    s = stair.approximate()
    check((s.count, s.iterations) == (3, 2), "STAIR6 approx uses 3 transmitters in 2 rounds")
    check(stair.exact().count == 2, "STAIR6 optimum is 2")

    doc = json.loads(s.to_json())
    check(doc["count"] == 3 and doc["coverage"] == "complete", "solution JSON follows the schema")
    again = stair.solution_from_json(s.to_json())
    check(again.transmitters == s.transmitters, "solution JSON round-trips")

    valley = mono2t.Polygon.from_vertices([(0, 0), (6, 0), (6, 3), (4, 3), (4, 1), (2, 1), (2, 3), (0, 3)])
    check(valley == mono2t.Polygon.fixture("VALLEY"), "VALLEY from vertices equals the fixture")
    h = mono2t.Transmitter("h", 1, (0, 6))
    check(valley.covers([h]), "horizontal y=1 guards VALLEY")
    check(not valley.covers([mono2t.Transmitter("v", 0, (0, 3))], k=0), "left edge alone does not guard VALLEY")

    try:
        mono2t.Polygon.from_vertices([(0, 0), (4, 0), (4, 4), (0, 0)])
        check(False, "diagonal edge rejected")
    except ValueError:
        check(True, "diagonal edge rejected")

    for seed in range(50):
        p = mono2t.Polygon.random(5, seed)
        a, e = p.approximate(), p.exact()
        if not (a.coverage_complete and a.count <= 2 * e.count):
            check(False, f"ratio bound on seed {seed}")
    check(True, "ratio bound on 50 random polygons")

    p = mono2t.Polygon.random(4, 7)
    check(mono2t.Polygon.from_json(p.to_json()) == p, "polygon JSON round-trips")
    check(len(p.candidates(pruned=True)) <= len(p.candidates()), "pruning never grows the family")


if __name__ == "__main__":
    main()
