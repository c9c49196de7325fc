"""Digraph carrier and basic cycle machinery.

Vertex ids are dense integers in [0, vertex_count). Cycle and path
witnesses are plain vertex sequences; their validity against a concrete
digraph is always re-checkable, never assumed. All values are immutable,
so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceededError

Arc = tuple[int, int]

#: Above this many vertices the exact Hamiltonian-cycle search refuses to run.
DEFAULT_HAMILTONIAN_CAP = 12


@dataclass(frozen=True)
class Digraph:
    """A finite digraph without self-loops or duplicate arcs."""

    vertex_count: int
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        if not isinstance(self.arcs, frozenset):
            object.__setattr__(self, "arcs", frozenset(self.arcs))
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"arc ({u}, {v}) out of vertex range")

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in sorted(self.arcs):
            out[u].append(v)
            inc[v].append(u)
        for lst in inc:
            lst.sort()
        return tuple(tuple(l) for l in out), tuple(tuple(l) for l in inc)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Out-neighbors of v in ascending order."""
        return self._adjacency[0][v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        """In-neighbors of v in ascending order."""
        return self._adjacency[1][v]


def _check_distinct(vertices: tuple[int, ...], kind: str) -> None:
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"{kind} vertices must be distinct: {vertices}")


@dataclass(frozen=True)
class CycleWitness:
    """A directed cycle given as its vertex sequence (closing arc implied).

    The sequence fixes a rotation; equality is sequence equality. Use
    :meth:`canonical` when rotation-independent identity is wanted.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.vertices, tuple):
            object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise ValueError("a cycle has at least 2 vertices")
        _check_distinct(self.vertices, "cycle")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def arcs(self) -> tuple[Arc, ...]:
        """The cycle's arcs in traversal order, wrap-around included."""
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    @cached_property
    def _position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def __contains__(self, v: int) -> bool:
        return v in self._position

    def position(self, v: int) -> int:
        try:
            return self._position[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not on the cycle") from None

    def at(self, i: int) -> int:
        """Vertex at position i, taken modulo the length."""
        return self.vertices[i % len(self.vertices)]

    def successor(self, v: int) -> int:
        """The unique vertex following v along the cycle."""
        return self.at(self.position(v) + 1)

    def predecessor(self, v: int) -> int:
        """The unique vertex preceding v along the cycle."""
        return self.at(self.position(v) - 1)

    def rotated_to(self, v: int) -> CycleWitness:
        """The same cycle rotated so that v comes first."""
        i = self.position(v)
        return CycleWitness(self.vertices[i:] + self.vertices[:i])

    def canonical(self) -> CycleWitness:
        """Rotation with the minimum vertex id first (stable identity)."""
        return self.rotated_to(min(self.vertices))


@dataclass(frozen=True)
class PathWitness:
    """A directed path given as its vertex sequence (no closing arc)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.vertices, tuple):
            object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a path has at least 1 vertex")
        _check_distinct(self.vertices, "path")

    @property
    def length(self) -> int:
        """Number of arcs, i.e. one less than the number of vertices."""
        return len(self.vertices) - 1

    def arcs(self) -> tuple[Arc, ...]:
        vs = self.vertices
        return tuple((vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]


def validate_cycle(d: Digraph, c: CycleWitness) -> bool:
    """True iff c is a genuine directed cycle of d.

    Checks vertex range, distinctness and every consecutive arc including
    the wrap-around. Total: malformed input yields False, not an exception.
    """
    vs = c.vertices
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < d.vertex_count for v in vs):
        return False
    return all(a in d.arcs for a in c.arcs())


def validate_path(d: Digraph, p: PathWitness) -> bool:
    """True iff p is a genuine directed path of d (same spirit as validate_cycle)."""
    vs = p.vertices
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < d.vertex_count for v in vs):
        return False
    return all(a in d.arcs for a in p.arcs())


def _reachable(d: Digraph, start: int, forward: bool) -> int:
    seen = bytearray(d.vertex_count)
    seen[start] = 1
    stack = [start]
    count = 1
    step = d.out_neighbors if forward else d.in_neighbors
    while stack:
        u = stack.pop()
        for w in step(u):
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count


def is_strong(d: Digraph) -> bool:
    """True iff d is strongly connected.

    Equivalent to d having exactly one strongly connected component:
    every vertex reaches and is reached by vertex 0.
    """
    if d.vertex_count == 0:
        raise ValueError("strong connectivity is undefined on the empty digraph")
    if d.vertex_count == 1:
        return True
    n = d.vertex_count
    return _reachable(d, 0, True) == n and _reachable(d, 0, False) == n


def find_hamiltonian_cycle(
    d: Digraph, cap: int = DEFAULT_HAMILTONIAN_CAP
) -> CycleWitness | None:
    """Exact backtracking search for a Hamiltonian cycle of d.

    Deterministic: neighbors are explored in ascending id order, so the
    result (when one exists) is the lexicographically least Hamiltonian
    vertex sequence starting at vertex 0.

    Raises:
        ValueError: fewer than 2 vertices.
        CapExceededError: more than ``cap`` vertices.
    """
    n = d.vertex_count
    if n < 2:
        raise ValueError("a Hamiltonian cycle needs at least 2 vertices")
    if n > cap:
        raise CapExceededError(f"{n} vertices exceeds the search cap {cap}")

    path = [0]
    on_path = bytearray(n)
    on_path[0] = 1

    def extend() -> bool:
        if len(path) == n:
            return d.has_arc(path[-1], 0)
        for w in d.out_neighbors(path[-1]):
            if not on_path[w]:
                path.append(w)
                on_path[w] = 1
                if extend():
                    return True
                path.pop()
                on_path[w] = 0
        return False

    if extend():
        return CycleWitness(tuple(path))
    return None
