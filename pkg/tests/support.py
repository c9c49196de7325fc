"""Shared builders and naive reference implementations for the suite.

Builders construct instances with known structure: orbit-balanced cross
orientations (which provably exclude good pairs) and wholesale domination
patterns. The ``naive_*`` functions re-implement library predicates in the
most literal way available — permutation scans, boolean matrix closure —
sharing no code with the implementations under test, so agreement between
the two is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
import math
import random

from gensum.core import CycleWitness, Digraph
from gensum.decomposition import SummandDecomposition, validate_decomposition

Arc = tuple[int, int]


def orbit_pair(
    n: int, m: int, dirs: tuple[int, ...], chord_seed: int | None = None
) -> SummandDecomposition:
    """Two summands [0,n) and [n,n+m) with orbit-constant cross orientation.

    The cross pair (x_s, y_t) points x -> y iff dirs[(s+t) % gcd(n,m)] is
    truthy. Both arcs of any would-be good pair fall in the same orbit
    with opposite orientations, so instances built here never contain one.
    ``chord_seed`` optionally sprinkles random interior chords (these never
    affect good pairs or parallel classes, which are cross-arc notions).
    """
    if len(dirs) != math.gcd(n, m):
        raise ValueError("need one orientation bit per orbit")
    arcs = {(i, (i + 1) % n) for i in range(n)}
    arcs |= {(n + j, n + (j + 1) % m) for j in range(m)}
    for s in range(n):
        for t in range(m):
            if dirs[(s + t) % len(dirs)]:
                arcs.add((s, n + t))
            else:
                arcs.add((n + t, s))
    if chord_seed is not None:
        rng = random.Random(chord_seed)
        for lo, size in ((0, n), (n, m)):
            for u in range(lo, lo + size):
                for v in range(lo, lo + size):
                    if u != v and v != lo + ((u - lo + 1) % size) and rng.random() < 0.3:
                        arcs.add((u, v))
    return validate_decomposition(
        Digraph(n + m, frozenset(arcs)),
        (frozenset(range(n)), frozenset(range(n, n + m))),
        (CycleWitness(tuple(range(n))), CycleWitness(tuple(range(n, n + m)))),
    )


def orbit_multi(
    sizes: tuple[int, ...], pair_dirs: dict[tuple[int, int], tuple[int, ...]]
) -> SummandDecomposition:
    """Several summands, each cross pair oriented by its own orbit rule.

    ``pair_dirs[(i, j)]`` gives one bit per orbit of the (i, j) pair;
    mixed bits make that pair bidirectional.
    """
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    arcs: set[Arc] = set()
    cycles = []
    for k, size in enumerate(sizes):
        block = list(range(offsets[k], offsets[k] + size))
        arcs |= {(block[i], block[(i + 1) % size]) for i in range(size)}
        cycles.append(CycleWitness(tuple(block)))
    for (i, j), dirs in pair_dirs.items():
        if len(dirs) != math.gcd(sizes[i], sizes[j]):
            raise ValueError("need one orientation bit per orbit")
        for s in range(sizes[i]):
            for t in range(sizes[j]):
                u, v = offsets[i] + s, offsets[j] + t
                arcs.add((u, v) if dirs[(s + t) % len(dirs)] else (v, u))
    return validate_decomposition(
        Digraph(sum(sizes), frozenset(arcs)),
        tuple(frozenset(range(offsets[k], offsets[k] + sizes[k])) for k in range(len(sizes))),
        tuple(cycles),
    )


def dominating_instance(
    sizes: tuple[int, ...], dom: list[tuple[int, int]], seed: int | None = None
) -> SummandDecomposition:
    """Summands with wholesale domination: every pair in ``dom`` as a -> b.

    ``dom`` must orient every summand pair exactly once. With a seed the
    interiors are random Hamiltonian digraphs (shuffled cycle plus random
    chords); without one they are bare directed cycles in id order.
    """
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    rng = random.Random(seed) if seed is not None else None
    arcs: set[Arc] = set()
    cycles = []
    for k, size in enumerate(sizes):
        block = list(range(offsets[k], offsets[k] + size))
        order = block[:]
        if rng is not None:
            rng.shuffle(order)
        for i in range(size):
            arcs.add((order[i], order[(i + 1) % size]))
        if rng is not None:
            pos = {v: i for i, v in enumerate(order)}
            for u in block:
                for v in block:
                    if u != v and (pos[v] - pos[u]) % size != 1 and rng.random() < 0.4:
                        arcs.add((u, v))
        cycles.append(CycleWitness(tuple(order)).canonical())
    for a, b in dom:
        for u in range(offsets[a], offsets[a] + sizes[a]):
            for v in range(offsets[b], offsets[b] + sizes[b]):
                arcs.add((u, v))
    return validate_decomposition(
        Digraph(sum(sizes), frozenset(arcs)),
        tuple(frozenset(range(offsets[k], offsets[k] + sizes[k])) for k in range(len(sizes))),
        tuple(cycles),
    )


def cyclic_triple(sizes: tuple[int, int, int], seed: int | None = None) -> SummandDecomposition:
    """Three summands dominating cyclically 0 -> 1 -> 2 -> 0."""
    return dominating_instance(sizes, [(0, 1), (1, 2), (2, 0)], seed)


def strong_4_tournament_instance(sizes: tuple[int, int, int, int]) -> SummandDecomposition:
    """Four summands whose condensation is the strong 4-vertex tournament."""
    return dominating_instance(sizes, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


def all_tournaments(n: int):
    """Every labeled tournament on [0, n), by exhaustive orientation."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        yield Digraph(n, frozenset((u, v) if b else (v, u) for (u, v), b in zip(pairs, bits)))


# ---------------------------------------------------------------------------
# naive reference implementations


def naive_cycles(d: Digraph, max_length: int | None = None) -> set[tuple[int, ...]]:
    """All simple cycles as canonical (min-vertex-first) tuples, by brute force.

    Walks every subset and every arrangement; only viable for tiny digraphs.
    """
    limit = d.vertex_count if max_length is None else max_length
    out: set[tuple[int, ...]] = set()
    verts = list(d.vertices)
    for size in range(2, limit + 1):
        for subset in itertools.combinations(verts, size):
            first = subset[0]
            for rest in itertools.permutations(subset[1:]):
                cyc = (first, *rest)
                if all(d.has_arc(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    out.add(cyc)
    return out


def naive_strong(d: Digraph) -> bool:
    """Strong connectivity via boolean matrix closure."""
    n = d.vertex_count
    if n <= 1:
        return True
    reach = [[u == v or d.has_arc(u, v) for v in range(n)] for u in range(n)]
    for w in range(n):
        for u in range(n):
            if reach[u][w]:
                row_w = reach[w]
                row_u = reach[u]
                for v in range(n):
                    if row_w[v]:
                        row_u[v] = True
    return all(all(row) for row in reach)


def naive_good_pairs(sd: SummandDecomposition) -> set[tuple[int, int, int]]:
    """All good pairs as (role, s, r), role 0 = declared cycle order."""
    assert sd.summand_count == 2
    d = sd.digraph
    hits = set()
    for role, (c1, c2) in enumerate([(sd.cycles[0], sd.cycles[1]), (sd.cycles[1], sd.cycles[0])]):
        for s in range(c1.length):
            for r in range(c2.length):
                if d.has_arc(c1.at(s), c2.at(r)) and d.has_arc(c2.at(r - 1), c1.at(s + 1)):
                    hits.add((role, s, r))
    return hits


def naive_exterior(sd: SummandDecomposition) -> frozenset[Arc]:
    side = {}
    for i, block in enumerate(sd.summands):
        for v in block:
            side[v] = i
    return frozenset((u, v) for (u, v) in sd.digraph.arcs if side[u] != side[v])
