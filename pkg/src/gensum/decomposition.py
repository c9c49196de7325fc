"""Summand decompositions: the generalized-sum structure on a digraph.

A digraph D is a generalized sum of Hamiltonian digraphs D_1, ..., D_k
when the summand vertex sets partition V(D), each induced summand carries
a declared Hamiltonian cycle, and every cross-summand vertex pair is
joined by exactly one arc (in one direction or the other). The arcs
between different summands are the *exterior* arcs; arcs inside a summand
are *interior* and are never constrained beyond the declared cycle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .core import Arc, CycleWitness, Digraph, validate_cycle
from .errors import (
    InvalidSummandCycleError,
    MissingCrossArcError,
    NotAPartitionError,
    SymmetricCrossArcError,
)


@dataclass(frozen=True)
class SummandDecomposition:
    """A digraph together with a validated generalized-sum structure.

    Construct through :func:`validate_decomposition`; the constructor
    itself does not re-check the invariants.
    """

    digraph: Digraph
    summands: tuple[frozenset[int], ...]
    cycles: tuple[CycleWitness, ...]

    @property
    def summand_count(self) -> int:
        return len(self.summands)

    def size(self, i: int) -> int:
        return len(self.summands[i])

    @cached_property
    def _summand_of(self) -> tuple[int, ...]:
        owner = [0] * self.digraph.vertex_count
        for i, s in enumerate(self.summands):
            for v in s:
                owner[v] = i
        return tuple(owner)

    def summand_of(self, v: int) -> int:
        """Index of the summand containing vertex v."""
        return self._summand_of[v]

    def is_exterior(self, arc: Arc) -> bool:
        u, v = arc
        return self.summand_of(u) != self.summand_of(v)

    @cached_property
    def _exterior(self) -> frozenset[Arc]:
        return frozenset(a for a in self.digraph.arcs if self.is_exterior(a))

    def cross_arcs(self, i: int, j: int) -> tuple[frozenset[Arc], frozenset[Arc]]:
        """The exterior arcs between summands i and j, split by direction.

        Returns (arcs from i to j, arcs from j to i).
        """
        fwd = []
        bwd = []
        for u, v in self._exterior:
            if self.summand_of(u) == i and self.summand_of(v) == j:
                fwd.append((u, v))
            elif self.summand_of(u) == j and self.summand_of(v) == i:
                bwd.append((u, v))
        return frozenset(fwd), frozenset(bwd)


def validate_decomposition(
    digraph: Digraph,
    summands: tuple[frozenset[int], ...] | list[frozenset[int]],
    cycles: tuple[CycleWitness, ...] | list[CycleWitness],
) -> SummandDecomposition:
    """Check every generalized-sum clause and return the validated structure.

    Raises a distinct error per clause:
      NotAPartitionError       summand sets do not partition [0, n), or
                               k < 2, or some summand has fewer than 2 vertices;
      MissingCrossArcError     some cross pair has no arc at all;
      SymmetricCrossArcError   some cross pair has arcs both ways;
      InvalidSummandCycleError a declared cycle is not a spanning cycle of
                               its summand in the digraph.
    """
    summands = tuple(frozenset(s) for s in summands)
    cycles = tuple(cycles)
    if len(summands) < 2:
        raise NotAPartitionError(f"need at least 2 summands, got {len(summands)}")
    if len(cycles) != len(summands):
        raise NotAPartitionError(
            f"{len(summands)} summands but {len(cycles)} Hamiltonian witnesses"
        )
    seen: dict[int, int] = {}
    for i, s in enumerate(summands):
        if len(s) < 2:
            raise NotAPartitionError(f"summand {i} has {len(s)} < 2 vertices")
        for v in s:
            if not 0 <= v < digraph.vertex_count:
                raise NotAPartitionError(f"summand {i} contains out-of-range vertex {v}")
            if v in seen:
                raise NotAPartitionError(
                    f"vertex {v} lies in summands {seen[v]} and {i}"
                )
            seen[v] = i
    if len(seen) != digraph.vertex_count:
        missing = min(v for v in digraph.vertices if v not in seen)
        raise NotAPartitionError(f"vertex {missing} belongs to no summand")

    for u in digraph.vertices:
        for v in range(u + 1, digraph.vertex_count):
            if seen[u] == seen[v]:
                continue
            uv = digraph.has_arc(u, v)
            vu = digraph.has_arc(v, u)
            if uv and vu:
                raise SymmetricCrossArcError(u, v)
            if not uv and not vu:
                raise MissingCrossArcError(u, v)

    for i, (s, c) in enumerate(zip(summands, cycles)):
        if set(c.vertices) != s:
            raise InvalidSummandCycleError(i, f"cycle {c.vertices} does not span the summand")
        if not validate_cycle(digraph, c):
            raise InvalidSummandCycleError(i, f"cycle {c.vertices} uses a missing arc")

    return SummandDecomposition(digraph, summands, cycles)


def exterior_arcs(sd: SummandDecomposition) -> frozenset[Arc]:
    """The set of all exterior (cross-summand) arcs of sd."""
    return sd._exterior


def exterior_degrees(sd: SummandDecomposition, v: int) -> tuple[int, int]:
    """(exterior out-degree, exterior in-degree) of vertex v.

    Their sum always equals the total size of the other summands, since
    every cross pair carries exactly one arc.
    """
    out = sum(1 for (u, w) in sd._exterior if u == v)
    inc = sum(1 for (u, w) in sd._exterior if w == v)
    return out, inc


@dataclass(frozen=True)
class InducedSubsum:
    """Result of restricting a decomposition to a subset of its summands.

    Vertex ids are re-densified; ``parent_ids[new]`` recovers the id the
    vertex had in the parent decomposition.
    """

    decomposition: SummandDecomposition
    parent_ids: tuple[int, ...]

    def lift_cycle(self, c: CycleWitness) -> CycleWitness:
        """Map a cycle of the subsum back into parent vertex ids."""
        return CycleWitness(tuple(self.parent_ids[v] for v in c.vertices))


def induced_subsum(sd: SummandDecomposition, indices: set[int] | frozenset[int]) -> InducedSubsum:
    """The generalized sum induced on the chosen summands.

    New ids are assigned by ascending summand index, then ascending old id,
    so the mapping is deterministic. At least two summands are required.
    """
    chosen = sorted(indices)
    if len(chosen) < 2:
        raise ValueError("an induced subsum needs at least 2 summands")
    if any(not 0 <= i < sd.summand_count for i in chosen):
        raise ValueError(f"summand index out of range in {chosen}")

    parent_ids: list[int] = []
    for i in chosen:
        parent_ids.extend(sorted(sd.summands[i]))
    to_new = {old: new for new, old in enumerate(parent_ids)}

    keep = set(parent_ids)
    arcs = frozenset(
        (to_new[u], to_new[v]) for (u, v) in sd.digraph.arcs if u in keep and v in keep
    )
    digraph = Digraph(len(parent_ids), arcs)
    summands = tuple(frozenset(to_new[v] for v in sd.summands[i]) for i in chosen)
    cycles = tuple(
        CycleWitness(tuple(to_new[v] for v in sd.cycles[i].vertices)) for i in chosen
    )
    sub = validate_decomposition(digraph, summands, cycles)
    return InducedSubsum(sub, tuple(parent_ids))


def merge_summands(
    sd: SummandDecomposition, indices: set[int] | frozenset[int], merged_cycle: CycleWitness
) -> SummandDecomposition:
    """Rewrite the decomposition with the chosen summands fused into one.

    The digraph is unchanged; the fused summand takes index 0 with
    ``merged_cycle`` as its Hamiltonian witness (the caller supplies it),
    and the remaining summands keep their relative order. The exterior
    arc set of the result is a subset of the original's.
    """
    chosen = frozenset(indices)
    if len(chosen) < 2:
        raise ValueError("merging needs at least 2 summands")
    merged_vertices = frozenset().union(*(sd.summands[i] for i in chosen))
    if set(merged_cycle.vertices) != merged_vertices:
        raise ValueError("merged cycle does not span the union of the chosen summands")
    summands = [merged_vertices]
    cycles = [merged_cycle]
    for i in range(sd.summand_count):
        if i not in chosen:
            summands.append(sd.summands[i])
            cycles.append(sd.cycles[i])
    return validate_decomposition(sd.digraph, summands, cycles)


def generate_random_gs(
    sizes: list[int] | tuple[int, ...], bias: float = 0.5, seed: int = 0
) -> SummandDecomposition:
    """Sample a random generalized sum, fully determined by the seed.

    Each summand is a random Hamiltonian digraph: a Hamiltonian cycle on a
    shuffled vertex order plus each chord (unordered pair not consecutive
    on that cycle) independently with probability 1/2 in a uniformly random
    orientation. Each cross pair is oriented from the lower-indexed summand
    to the higher with probability ``bias``, else reversed.
    """
    if len(sizes) < 2:
        raise ValueError("need at least 2 summands")
    if any(s < 2 for s in sizes):
        raise ValueError("summand sizes must be at least 2")
    if not 0.0 <= bias <= 1.0:
        raise ValueError("bias must lie in [0, 1]")

    rng = random.Random(seed)
    arcs: set[Arc] = set()
    summands: list[frozenset[int]] = []
    cycles: list[CycleWitness] = []
    offset = 0
    for size in sizes:
        block = list(range(offset, offset + size))
        order = block[:]
        rng.shuffle(order)
        for i in range(size):
            arcs.add((order[i], order[(i + 1) % size]))
        # chords: pairs at cyclic distance >= 2 on the shuffled order
        pos = {v: i for i, v in enumerate(order)}
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                u, v = block[a], block[b]
                dist = (pos[v] - pos[u]) % size
                if dist in (1, size - 1):
                    continue
                if rng.random() < 0.5:
                    arcs.add((u, v) if rng.random() < 0.5 else (v, u))
        summands.append(frozenset(block))
        cycles.append(CycleWitness(tuple(order)).canonical())
        offset += size

    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in sorted(summands[i]):
                for v in sorted(summands[j]):
                    arcs.add((u, v) if rng.random() < bias else (v, u))

    return validate_decomposition(Digraph(offset, frozenset(arcs)), summands, cycles)
