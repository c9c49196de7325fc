#!/usr/bin/env python3
"""Survey: which small multi-summand instances escape the good-cycle test?

The certification theorem applies to strong instances with no good cycle.
For two summands such instances are plentiful (orbit-balanced cross
orientations). This script measures how the landscape looks for three and
four summands with summand sizes in [2, 3]:

  1. exhaustively for (2, 2, 2) over all 2^12 cross orientations
     (interiors are forced: a 2-vertex summand is a digon);
  2. exhaustively for orbit-balanced, chord-free (3, 3, 3) instances
     (orientation constant on each diagonal orbit of each pair);
  3. by seeded random sampling over every size vector with k in {3, 4}
     and sizes in [2, 3] — the same distribution the acceptance suite
     draws from;
  4. by seeded random sampling at a few larger size vectors, for scale.

For every survivor (strong + no good cycle, default reading) the script
runs the full certification pipeline and the brute-force oracle, so a
survivor is also an end-to-end fixture. Findings are printed as a table.

Run:  python3 scripts/survey_good_cycle_free.py [--seeds 400]
"""

from __future__ import annotations

import argparse
import itertools
import sys
from collections import Counter

from gensum.analysis import find_good_cycle
from gensum.core import CycleWitness, Digraph, is_strong
from gensum.decomposition import generate_random_gs, validate_decomposition
from gensum.oracle import is_vertex_pancyclic, verify_certificate
from gensum.synthesis import main_certificate


def all_222_instances():
    pairs = [(u, v) for u in range(2) for v in range(2, 4)]
    pairs += [(u, v) for u in range(2) for v in range(4, 6)]
    pairs += [(u, v) for u in range(2, 4) for v in range(4, 6)]
    base = {(0, 1), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4)}
    summands = (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5}))
    cycles = (CycleWitness((0, 1)), CycleWitness((2, 3)), CycleWitness((4, 5)))
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        arcs = set(base)
        for (u, v), b in zip(pairs, bits):
            arcs.add((u, v) if b else (v, u))
        yield validate_decomposition(Digraph(6, frozenset(arcs)), summands, cycles)


def orbit_333_instances():
    """Chord-free (3, 3, 3) with per-pair orbit-constant orientations.

    Orientation constant on each diagonal orbit rules out good pairs
    within every summand pair, which is the least-obstructed cross
    structure available; only mixed orbit patterns are kept (a constant
    pattern is a dominating pair and those never survive).
    """
    offsets = (0, 3, 6)
    summands = tuple(frozenset(range(o, o + 3)) for o in offsets)
    cycles = tuple(CycleWitness(tuple(range(o, o + 3))) for o in offsets)
    base = {(o + i, o + (i + 1) % 3) for o in offsets for i in range(3)}
    mixed = [d for d in itertools.product((0, 1), repeat=3) if 0 < sum(d) < 3]
    for d01, d02, d12 in itertools.product(mixed, repeat=3):
        arcs = set(base)
        for (a, b), dirs in (((0, 1), d01), ((0, 2), d02), ((1, 2), d12)):
            for s in range(3):
                for t in range(3):
                    u, v = offsets[a] + s, offsets[b] + t
                    arcs.add((u, v) if dirs[(s + t) % 3] else (v, u))
        yield validate_decomposition(Digraph(9, frozenset(arcs)), summands, cycles)


def classify(sd):
    if not is_strong(sd.digraph):
        return "not strong"
    if find_good_cycle(sd) is not None:
        return "good cycle"
    return "survivor"


def check_survivor(sd) -> str:
    cert = main_certificate(sd)
    ok, failure = verify_certificate(sd.digraph, cert)
    if not ok:
        return f"CERTIFICATE REJECTED: {failure}"
    pan, gap = is_vertex_pancyclic(sd.digraph)
    if not pan:
        return f"ORACLE DISAGREES: gap {gap}"
    return "certified + oracle-confirmed"


def survey_exhaustive(name, instances):
    tally = Counter()
    survivors = []
    for sd in instances:
        outcome = classify(sd)
        tally[outcome] += 1
        if outcome == "survivor":
            survivors.append(sd)
    print(f"{name}: {dict(tally)}")
    for sd in survivors:
        print(f"  survivor arcs={sorted(sd.digraph.arcs)}")
        print(f"    -> {check_survivor(sd)}")
    return survivors


def survey_random(sizes, seeds):
    tally = Counter()
    survivors = []
    for seed in range(seeds):
        sd = generate_random_gs(sizes, seed=seed)
        outcome = classify(sd)
        tally[outcome] += 1
        if outcome == "survivor":
            survivors.append((seed, sd))
    line = f"random {sizes} x{seeds}: {dict(tally)}"
    print(line)
    for seed, sd in survivors:
        print(f"  seed {seed}: {check_survivor(sd)}")
    return survivors


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, default=400)
    args = parser.parse_args()

    print("== exhaustive ==")
    survey_exhaustive("(2,2,2), all 4096 cross orientations", all_222_instances())
    survey_exhaustive("(3,3,3), orbit-balanced chord-free (216)", orbit_333_instances())

    print("== seeded random, acceptance distribution ==")
    k3 = [s for s in itertools.product((2, 3), repeat=3)]
    k4 = [s for s in itertools.product((2, 3), repeat=4)]
    total_survivors = 0
    for sizes in k3 + k4:
        total_survivors += len(survey_random(sizes, args.seeds))

    print("== seeded random, larger sizes ==")
    for sizes in [(4, 4, 4), (3, 4, 5), (5, 5, 5), (3, 3, 3, 3)]:
        total_survivors += len(survey_random(sizes, args.seeds // 4))

    print(f"total survivors: {total_survivors}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
