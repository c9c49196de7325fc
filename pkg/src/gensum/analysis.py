"""Structural analysis of generalized sums.

Three kinds of structure are detected here:

* *good pairs* between the two declared Hamiltonian cycles of a 2-summand
  instance: arcs x_s -> y_r and y_{r-1} -> x_{s+1} (cycle positions taken
  modulo the respective lengths). A good pair is exactly what lets the two
  cycles merge into one spanning cycle.

* *parallel classes*: when no good pair exists, every exterior arc forces
  a whole lcm(n, m)-sized family of translated exterior arcs to be present.
  These classes are the raw material for all cycle constructions.

* *good cycles*: anti-directed 4-cycles whose designated opposite arc pair
  is exterior. They generalize good pairs to decompositions with any
  number of summands, and their absence is the hypothesis of the general
  certification routine.

Plus the pairwise domination classification and the condensation
tournament used by the induction on the number of summands.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import Arc, CycleWitness, Digraph
from .decomposition import SummandDecomposition
from .errors import GensumError, HypothesesNotMetError, ParallelClassError


@dataclass(frozen=True)
class GoodPairWitness:
    """A good pair between two cycles.

    ``s`` indexes the first cycle and ``r`` the second in the role order
    actually used; ``swapped`` records whether the roles of the two
    scanned cycles were exchanged. ``arcs`` holds the two concrete arcs
    (x_s -> y_r, y_{r-1} -> x_{s+1}), which is unambiguous either way.
    """

    s: int
    r: int
    arcs: tuple[Arc, Arc]
    swapped: bool = False


def _scan_good_pair(d: Digraph, c1: CycleWitness, c2: CycleWitness) -> tuple[int, int] | None:
    n, m = c1.length, c2.length
    for s in range(n):
        for r in range(m):
            if d.has_arc(c1.at(s), c2.at(r)) and d.has_arc(c2.at(r - 1), c1.at(s + 1)):
                return s, r
    return None


def find_good_pair(sd: SummandDecomposition) -> GoodPairWitness | None:
    """First good pair between the two summand cycles, in scan order.

    Scans (s, r) ascending with cycle 1 hosting the first arc's tail, then
    repeats with the roles exchanged. Requires a 2-summand instance.

    The second scan is provably redundant — the two arcs of a swapped hit
    at (s, r) are a declared-order hit at (r-1, s+1) — but it stays, both
    because the interface promises it and as a guard against the scan
    above drifting away from that symmetry.
    """
    if sd.summand_count != 2:
        raise ValueError("good pairs are defined between exactly 2 summand cycles")
    c1, c2 = sd.cycles
    hit = _scan_good_pair(sd.digraph, c1, c2)
    if hit is not None:
        s, r = hit
        return GoodPairWitness(
            s, r, ((c1.at(s), c2.at(r)), (c2.at(r - 1), c1.at(s + 1))), swapped=False
        )
    hit = _scan_good_pair(sd.digraph, c2, c1)
    if hit is not None:
        s, r = hit
        return GoodPairWitness(
            s, r, ((c2.at(s), c1.at(r)), (c1.at(r - 1), c2.at(s + 1))), swapped=True
        )
    return None


@dataclass(frozen=True)
class GoodCycleWitness:
    """An anti-directed 4-cycle (v0, v1, v2, v3) qualifying as good.

    The anti-directed orientation pattern puts the even-indexed vertices
    as sources: the four arcs are (v0,v1), (v2,v1), (v2,v3), (v0,v3).
    ``exterior_flags`` marks which of those four arcs are exterior, in
    that order.
    """

    vertices: tuple[int, int, int, int]
    exterior_flags: tuple[bool, bool, bool, bool]

    def arcs(self) -> tuple[Arc, Arc, Arc, Arc]:
        v0, v1, v2, v3 = self.vertices
        return ((v0, v1), (v2, v1), (v2, v3), (v0, v3))


def find_good_cycle(sd: SummandDecomposition, strict: bool = False) -> GoodCycleWitness | None:
    """First good cycle in ascending lexicographic (v0, v1, v2, v3) order.

    A 4-tuple of distinct vertices qualifies when the anti-directed arcs
    (v0,v1), (v2,v1), (v2,v3), (v0,v3) all exist and at least one opposite
    pair, {(v0,v1), (v2,v3)} or {(v2,v1), (v0,v3)}, is entirely exterior.

    With ``strict`` the complementary opposite pair must additionally be
    entirely interior (the arcs alternate exterior / summand-internal
    around the 4-cycle). The default accepts the 4-cycle regardless of
    where the complementary pair lives, which is the broader notion; the
    strict variant admits strictly fewer good cycles, hence strictly more
    instances into the certification hypotheses. See the README for the
    consequences of choosing one or the other.
    """
    d = sd.digraph
    ext = lambda a: sd.is_exterior(a)  # noqa: E731
    for v0 in d.vertices:
        for v1 in d.out_neighbors(v0):
            for v2 in d.in_neighbors(v1):
                if v2 == v0:
                    continue
                for v3 in d.out_neighbors(v2):
                    if v3 in (v0, v1) or not d.has_arc(v0, v3):
                        continue
                    a01, a21, a23, a03 = (v0, v1), (v2, v1), (v2, v3), (v0, v3)
                    first = ext(a01) and ext(a23)
                    second = ext(a21) and ext(a03)
                    if strict:
                        first = first and not ext(a21) and not ext(a03)
                        second = second and not ext(a01) and not ext(a23)
                    if first or second:
                        return GoodCycleWitness(
                            (v0, v1, v2, v3), (ext(a01), ext(a21), ext(a23), ext(a03))
                        )
    return None


@dataclass(frozen=True)
class ParallelClass:
    """An exterior arc's full translated family, in lcm-index order.

    For a generator x_s -> y_t the members are x_{s+i} -> y_{t-i} for
    i in [0, lcm(n, m)); for a generator y_t -> x_s they are
    y_{t+i} -> x_{s-i}. ``direction`` is the (tail summand, head summand)
    pair shared by every member.
    """

    generator: Arc
    members: tuple[Arc, ...]
    direction: tuple[int, int]

    @property
    def size(self) -> int:
        return len(self.members)

    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.members)


def parallel_class(sd: SummandDecomposition, generator: Arc) -> ParallelClass:
    """Materialize and verify the parallel class of an exterior arc.

    Requires a 2-summand instance with no good pair (the hypothesis under
    which the class is guaranteed to exist). Every predicted member is
    checked against the digraph; a missing member is reported as an
    internal consistency failure naming the offending lcm index, since it
    contradicts the verified no-good-pair precondition.
    """
    if sd.summand_count != 2:
        raise ValueError("parallel classes are defined on 2-summand instances")
    gp = find_good_pair(sd)
    if gp is not None:
        raise HypothesesNotMetError("good pair present", witness=gp)
    u, w = generator
    if (u, w) not in sd.digraph.arcs:
        raise ValueError(f"generator {generator} is not an arc")
    tail_side = sd.summand_of(u)
    head_side = sd.summand_of(w)
    if tail_side == head_side:
        raise ValueError(f"generator {generator} is not an exterior arc")

    tail_cycle = sd.cycles[tail_side]
    head_cycle = sd.cycles[head_side]
    size = math.lcm(tail_cycle.length, head_cycle.length)
    s = tail_cycle.position(u)
    t = head_cycle.position(w)
    members = []
    for i in range(size):
        arc = (tail_cycle.at(s + i), head_cycle.at(t - i))
        if arc not in sd.digraph.arcs:
            raise ParallelClassError(generator, i, arc)
        members.append(arc)
    return ParallelClass(generator, tuple(members), (tail_side, head_side))


class PairKind(enum.Enum):
    """How the exterior arcs between two summands are oriented."""

    BIDIRECTIONAL = "bidirectional"
    I_DOMINATES = "i_dominates"
    J_DOMINATES = "j_dominates"


def classify_summand_pair(sd: SummandDecomposition, i: int, j: int) -> PairKind:
    """Domination classification of the exterior arcs between summands i and j."""
    if i == j or not (0 <= i < sd.summand_count and 0 <= j < sd.summand_count):
        raise ValueError(f"invalid summand pair ({i}, {j})")
    fwd, bwd = sd.cross_arcs(i, j)
    if fwd and bwd:
        return PairKind.BIDIRECTIONAL
    return PairKind.I_DOMINATES if fwd else PairKind.J_DOMINATES


@dataclass(frozen=True)
class BidirectionalPair:
    """The lexicographically first summand pair with arcs both ways."""

    i: int
    j: int


@dataclass(frozen=True)
class CondensationTournament:
    """One vertex per summand; vertex i beats j iff summand i dominates j."""

    tournament: Digraph
    summand_for_vertex: tuple[int, ...]


def condensation_tournament(
    sd: SummandDecomposition,
) -> CondensationTournament | BidirectionalPair:
    """Condense summands to single vertices when every pair dominates.

    Returns the tournament if each pair classifies as dominating, else the
    first (lexicographic) bidirectional pair.
    """
    k = sd.summand_count
    arcs = set()
    for i in range(k):
        for j in range(i + 1, k):
            kind = classify_summand_pair(sd, i, j)
            if kind is PairKind.BIDIRECTIONAL:
                return BidirectionalPair(i, j)
            arcs.add((i, j) if kind is PairKind.I_DOMINATES else (j, i))
    return CondensationTournament(Digraph(k, frozenset(arcs)), tuple(range(k)))


def require_no_good_cycle(sd: SummandDecomposition, strict: bool = False) -> None:
    """Raise HypothesesNotMetError carrying the witness if a good cycle exists."""
    gc = find_good_cycle(sd, strict=strict)
    if gc is not None:
        raise HypothesesNotMetError("good cycle present", witness=gc)


# re-exported for callers that want to catch everything from this module
__all__ = [
    "BidirectionalPair",
    "CondensationTournament",
    "GensumError",
    "GoodCycleWitness",
    "GoodPairWitness",
    "PairKind",
    "ParallelClass",
    "classify_summand_pair",
    "condensation_tournament",
    "find_good_cycle",
    "find_good_pair",
    "parallel_class",
    "require_no_good_cycle",
]
