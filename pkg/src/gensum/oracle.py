"""Brute-force ground truth, independent of the constructive machinery.

Everything here works directly on the arc set of a digraph: exhaustive
cycle enumeration, a decision procedure for vertex-pancyclicity, and a
certificate checker that re-derives every claim from scratch. None of it
consults traces, parallel classes, or any other synthesis-side notion, so
agreement between the two sides is meaningful evidence.

All exhaustive routines are capped (default 14 vertices) and raise
:class:`CapExceededError` beyond that rather than silently running for
hours.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CycleWitness, Digraph
from .errors import CapExceededError

DEFAULT_ORACLE_CAP = 14


@dataclass(frozen=True)
class CycleInventory:
    """Exhaustive cycle counts, indexed by (vertex, length)."""

    by_vertex_and_length: dict[tuple[int, int], int] = field(default_factory=dict)

    def count(self, v: int, length: int) -> int:
        return self.by_vertex_and_length.get((v, length), 0)

    def lengths_through(self, v: int) -> tuple[int, ...]:
        return tuple(
            sorted(
                length
                for (u, length), c in self.by_vertex_and_length.items()
                if u == v and c > 0
            )
        )

    def total_of_length(self, length: int) -> int:
        """Number of distinct cycles of this length (each touches ℓ cells)."""
        cells = sum(
            c for (_, ll), c in self.by_vertex_and_length.items() if ll == length
        )
        return cells // length

    @classmethod
    def from_cycles(cls, cycles: list[CycleWitness]) -> CycleInventory:
        counts: dict[tuple[int, int], int] = {}
        for c in cycles:
            for v in c.vertices:
                key = (v, c.length)
                counts[key] = counts.get(key, 0) + 1
        return cls(counts)


def enumerate_cycles(
    d: Digraph, max_length: int | None = None, cap: int = DEFAULT_ORACLE_CAP
) -> CycleInventory:
    """Count every simple cycle of length 2..max_length, each exactly once.

    Each cycle is discovered rooted at its minimum vertex (canonical
    rotation) by a search that never walks below the current root, which
    is what makes each cycle appear exactly once.
    """
    if d.vertex_count > cap:
        raise CapExceededError(
            f"{d.vertex_count} vertices exceeds the enumeration cap {cap}"
        )
    limit = d.vertex_count if max_length is None else min(max_length, d.vertex_count)
    found: list[CycleWitness] = []
    path: list[int] = []
    on_path: set[int] = set()

    def dfs(root: int, u: int) -> None:
        path.append(u)
        on_path.add(u)
        if len(path) >= 2 and d.has_arc(u, root):
            found.append(CycleWitness(tuple(path)))
        if len(path) < limit:
            for w in d.out_neighbors(u):
                if w > root and w not in on_path:
                    dfs(root, w)
        path.pop()
        on_path.discard(u)

    for root in d.vertices:
        dfs(root, root)
    return CycleInventory.from_cycles(found)


def _exact_cycle_through(d: Digraph, v: int, length: int) -> CycleWitness | None:
    """First cycle of exactly ``length`` through v, in DFS order, or None."""
    path = [v]
    used = {v}

    def dfs(u: int) -> bool:
        if len(path) == length:
            return d.has_arc(u, v)
        for w in d.out_neighbors(u):
            if w not in used:
                used.add(w)
                path.append(w)
                if dfs(w):
                    return True
                path.pop()
                used.discard(w)
        return False

    if dfs(v):
        return CycleWitness(tuple(path))
    return None


def is_vertex_pancyclic(
    d: Digraph, cap: int = DEFAULT_ORACLE_CAP
) -> tuple[bool, tuple[int, int] | None]:
    """Decide vertex-pancyclicity; on failure report the least missing cell.

    Scans (vertex, length) cells in ascending order. Each cycle found
    satisfies the current length for all of its vertices, which keeps the
    number of searches per length near one on dense instances. Returns
    ``(True, None)`` or ``(False, (v, length))`` with the lexicographically
    least cell no cycle fills.
    """
    n = d.vertex_count
    if n < 3:
        raise ValueError("vertex-pancyclicity needs at least 3 vertices")
    if n > cap:
        raise CapExceededError(f"{n} vertices exceeds the oracle cap {cap}")
    satisfied: set[tuple[int, int]] = set()
    for v in d.vertices:
        for length in range(3, n + 1):
            if (v, length) in satisfied:
                continue
            cycle = _exact_cycle_through(d, v, length)
            if cycle is None:
                return False, (v, length)
            for u in cycle.vertices:
                satisfied.add((u, length))
    return True, None


@dataclass(frozen=True)
class VerificationFailure:
    """Why a certificate was rejected: the first failing check, located."""

    kind: str
    vertex: int | None
    length: int | None
    detail: str


def verify_certificate(d: Digraph, cert) -> tuple[bool, VerificationFailure | None]:
    """Re-check every claim a certificate makes, from the arc set alone.

    The checks are independent of how the certificate was produced: the
    table must cover exactly V x [3, |V|], and each entry must be a simple
    cycle of the keyed length through the keyed vertex whose arcs (wrap
    included) all exist. Returns the first failure in a fixed scan order,
    never raises.
    """
    n = d.vertex_count
    table = cert.table
    for v in d.vertices:
        for length in range(3, n + 1):
            if (v, length) not in table:
                return False, VerificationFailure(
                    "missing_entry", v, length, f"no cycle recorded for ({v}, {length})"
                )
    expected_count = n * max(0, n - 2)
    if len(table) != expected_count:
        for key in sorted(table):
            v, length = key
            if not (v in d.vertices and 3 <= length <= n):
                return False, VerificationFailure(
                    "extra_entry", v, length, f"entry ({v}, {length}) outside the domain"
                )
    for v, length in sorted(table):
        witness, _trace = table[(v, length)]
        verts = witness.vertices
        if len(set(verts)) != len(verts):
            return False, VerificationFailure(
                "duplicate_vertex", v, length, f"repeated vertex in {verts}"
            )
        if any(u not in d.vertices for u in verts):
            return False, VerificationFailure(
                "vertex_out_of_range", v, length, f"vertex id outside digraph in {verts}"
            )
        k = len(verts)
        for i in range(k):
            arc = (verts[i], verts[(i + 1) % k])
            if arc not in d.arcs:
                return False, VerificationFailure(
                    "missing_arc", v, length, f"arc {arc} absent from the digraph"
                )
        if k != length:
            return False, VerificationFailure(
                "wrong_length", v, length, f"cycle has {k} vertices, keyed length {length}"
            )
        if v not in verts:
            return False, VerificationFailure(
                "vertex_not_on_cycle", v, length, f"vertex {v} not on its own witness"
            )
    return True, None
