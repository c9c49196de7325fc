"""Constructive cycle synthesis.

Everything in this module builds cycles of prescribed lengths through
prescribed vertices, and returns each one together with a
:class:`DerivationTrace` naming the construction family and its indices.

The construction families, in the order they appear below:

* merging two cycles across a good pair (length ``n + m``);
* a 3-cycle through any vertex of a strong no-good-pair 2-summand
  instance (one vertex on one summand cycle, two consecutive on the
  other);
* the short families ``alpha`` / ``beta_case1`` / ``gamma_case2`` /
  ``epsilon`` covering lengths ``[3, 2*min(n, m)]``;
* the long families ``zigzag_beta_long`` / ``gamma_long`` covering
  ``[min(n, m) + 2, n + m]`` (delegating to the short families when the
  summands have equal size);
* the three-summand families ``mapsto_alpha`` / ``mapsto_beta`` /
  ``mapsto_gamma`` for cyclically dominating triples;
* Moon's inductive extension for strong tournaments;
* the general certification routine, an induction on the number of
  summands that either merges a bidirectional pair through the
  two-summand certificate or condenses a fully dominating family and
  splices Hamiltonian paths along a tournament cycle.

All functions are deterministic: free indices are swept ascending and
the first instance covering the target vertex wins.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    BidirectionalPair,
    GoodPairWitness,
    PairKind,
    ParallelClass,
    classify_summand_pair,
    condensation_tournament,
    find_good_cycle,
    find_good_pair,
    parallel_class,
)
from .core import CycleWitness, Digraph, is_strong, validate_cycle
from .decomposition import SummandDecomposition, induced_subsum, merge_summands
from .errors import HypothesesNotMetError, InternalInconsistencyError

TraceParam = int | tuple[int, ...]


@dataclass(frozen=True)
class DerivationTrace:
    """Which construction produced a witness, and with which indices.

    ``parameters`` is an ordered (name, value) sequence; values are ints or
    int tuples. ``inner`` chains to the trace of the sub-instance for the
    induction steps. :meth:`predicted_length` evaluates the length formula
    the construction promises, so a certificate can be audited without
    re-running the synthesis.
    """

    construction_tag: str
    parameters: tuple[tuple[str, TraceParam], ...] = ()
    inner: DerivationTrace | None = None

    def parameter(self, name: str) -> TraceParam:
        for key, value in self.parameters:
            if key == name:
                return value
        raise KeyError(name)

    def predicted_length(self) -> int:
        tag = self.construction_tag
        if tag in ("induction_case1", "induction_case2"):
            if self.inner is None:
                raise InternalInconsistencyError(f"{tag} trace carries no inner construction")
            return self.inner.predicted_length()
        p = dict(self.parameters)
        try:
            if tag == "merge_good_pair":
                return p["n1"] + p["n2"]
            if tag == "triangle_lemma":
                return 3
            if tag == "alpha":
                return 2 * p["h"] + 3
            if tag in ("beta_case1", "gamma_case2"):
                return 2 * p["h"] + 4
            if tag == "epsilon":
                return 2 * p["m"]
            if tag == "zigzag_beta_long":
                return p["i"] * p["m"] + p["j"] + 1
            if tag == "gamma_long":
                return p["n"] + p["j"] + 1
            if tag == "mapsto_alpha":
                return p["g"] + 3
            if tag == "mapsto_beta":
                return p["gp"] + p["t"] + 2
            if tag == "mapsto_gamma":
                return p["gpp"] + p["m"] + p["t"] + 1
            if tag == "moon_step":
                return p["length"]
        except KeyError as exc:
            raise InternalInconsistencyError(
                f"trace {tag} is missing parameter {exc.args[0]!r}"
            ) from exc
        raise ValueError(f"unknown construction tag {tag!r}")

    def render(self) -> str:
        """Compact single-line form: outermost step first, nested with '/'."""
        parts = []
        node: DerivationTrace | None = self
        while node is not None:
            if node.parameters:
                body = ",".join(f"{k}={_format_param(v)}" for k, v in node.parameters)
                parts.append(f"{node.construction_tag}[{body}]")
            else:
                parts.append(node.construction_tag)
            node = node.inner
        return "/".join(parts)


def _format_param(value: TraceParam) -> str:
    if isinstance(value, tuple):
        return ".".join(str(x) for x in value)
    return str(value)


def _trace(tag: str, inner: DerivationTrace | None = None, **params: TraceParam) -> DerivationTrace:
    return DerivationTrace(tag, tuple(params.items()), inner)


Entry = tuple[CycleWitness, DerivationTrace]


@dataclass(frozen=True)
class PancyclicityCertificate:
    """One witness cycle per (vertex, length) slot, each with its trace.

    ``table`` maps ``(v, length)`` over the full domain
    ``V x [3, |V|]`` to ``(CycleWitness, DerivationTrace)``.
    """

    table: dict[tuple[int, int], Entry]

    def __len__(self) -> int:
        return len(self.table)

    def entry(self, v: int, length: int) -> Entry:
        return self.table[(v, length)]

    def domain(self) -> list[tuple[int, int]]:
        return sorted(self.table)


def _checked(
    sd: SummandDecomposition, vertices: tuple[int, ...], length: int, trace: DerivationTrace
) -> Entry:
    witness = CycleWitness(vertices)
    if witness.length != length or not validate_cycle(sd.digraph, witness):
        raise InternalInconsistencyError(
            f"construction {trace.render()} produced an invalid witness {vertices}"
        )
    return witness, trace


def merge_cycles_good_pair(
    d: Digraph, c1: CycleWitness, c2: CycleWitness, gp: GoodPairWitness
) -> CycleWitness:
    """Merge two disjoint cycles across a good pair into one spanning cycle.

    The result runs all the way around the first cycle from the successor
    of the pair's tail, crosses to the second cycle, runs around it, and
    crosses back: length ``|c1| + |c2|`` exactly.
    """
    if set(c1.vertices) & set(c2.vertices):
        raise ValueError("cycles share vertices; a good pair needs disjoint cycles")
    first, second = (c2, c1) if gp.swapped else (c1, c2)
    s, r = gp.s, gp.r
    expected = ((first.at(s), second.at(r)), (second.at(r - 1), first.at(s + 1)))
    if gp.arcs != expected:
        raise ValueError(f"good pair arcs {gp.arcs} do not match indices (s={s}, r={r})")
    if not (validate_cycle(d, c1) and validate_cycle(d, c2)):
        raise ValueError("cycles do not validate against the digraph")
    if not all(d.has_arc(*a) for a in gp.arcs):
        raise ValueError(f"good pair arcs {gp.arcs} are not both present")
    merged = CycleWitness(
        tuple(first.at(s + 1 + i) for i in range(first.length))
        + tuple(second.at(r + i) for i in range(second.length))
    )
    if not validate_cycle(d, merged):
        raise InternalInconsistencyError("merged cycle failed validation")
    return merged


def _scan_triangle(sd: SummandDecomposition, anchor: int) -> CycleWitness:
    d = sd.digraph
    other = sd.cycles[1 - sd.summand_of(anchor)]
    m = other.length
    a = next((i for i in range(m) if d.has_arc(anchor, other.at(i))), None)
    if a is None:
        raise InternalInconsistencyError(
            f"vertex {anchor} has no outgoing exterior arc despite the hypotheses"
        )
    t = next((j for j in range(1, m) if d.has_arc(other.at(a + j), anchor)), None)
    if t is None:
        raise InternalInconsistencyError(
            f"vertex {anchor} has no incoming exterior arc despite the hypotheses"
        )
    triangle = CycleWitness((anchor, other.at(a + t - 1), other.at(a + t)))
    if not validate_cycle(d, triangle):
        raise InternalInconsistencyError(f"triangle scan at {anchor} produced a non-cycle")
    return triangle


def find_triangle(sd: SummandDecomposition, anchor: int) -> CycleWitness:
    """A 3-cycle (anchor, w, w+) with w, w+ consecutive on the other cycle.

    Scans the other summand's cycle for the first position with an arc out
    of the anchor, then walks forward to the first position with an arc
    back in; the flip point yields the triangle. Requires a strong
    2-summand instance with no good pair — under those hypotheses both
    scans must succeed, because every vertex is incident with an arc of
    each exterior parallel class.
    """
    if sd.summand_count != 2:
        raise ValueError("triangles are scanned on 2-summand instances")
    if anchor not in sd.digraph.vertices:
        raise ValueError(f"anchor {anchor} out of range")
    if not is_strong(sd.digraph):
        raise HypothesesNotMetError("instance is not strong")
    gp = find_good_pair(sd)
    if gp is not None:
        raise HypothesesNotMetError("good pair present", witness=gp)
    return _scan_triangle(sd, anchor)


@dataclass(frozen=True)
class _Frame:
    """The re-indexed coordinate system the two-summand families live in.

    ``xs`` is the larger summand's cycle, rotated so the triangle's anchor
    sits at index 0; ``ys`` is the smaller one, rotated so
    (xs[0], ys[0], ys[1]) is the base triangle. ``class_a`` is the
    parallel class of xs[0] -> ys[0], ``class_b`` of ys[1] -> xs[0], and
    ``class_cd`` of the case-splitting arc between xs[0] and ys[2]
    (``case1`` tells which orientation is present).
    """

    sd: SummandDecomposition
    xs: tuple[int, ...]
    ys: tuple[int, ...]
    case1: bool
    class_a: ParallelClass
    class_b: ParallelClass
    class_cd: ParallelClass

    @property
    def n(self) -> int:
        return len(self.xs)

    @property
    def m(self) -> int:
        return len(self.ys)

    def x(self, i: int) -> int:
        return self.xs[i % len(self.xs)]

    def y(self, j: int) -> int:
        return self.ys[j % len(self.ys)]


def _build_frame(sd: SummandDecomposition) -> _Frame:
    if sd.summand_count != 2:
        raise ValueError("the two-summand families need exactly 2 summands")
    if not is_strong(sd.digraph):
        raise HypothesesNotMetError("instance is not strong")
    gp = find_good_pair(sd)
    if gp is not None:
        raise HypothesesNotMetError("good pair present", witness=gp)

    x_side = 0 if sd.size(0) >= sd.size(1) else 1
    anchor = sd.cycles[x_side].at(0)
    triangle = _scan_triangle(sd, anchor)
    xs = sd.cycles[x_side].rotated_to(anchor).vertices
    ys = sd.cycles[1 - x_side].rotated_to(triangle.vertices[1]).vertices

    class_a = parallel_class(sd, (xs[0], ys[0]))
    class_b = parallel_class(sd, (ys[1], xs[0]))
    y2 = ys[2 % len(ys)]
    if sd.digraph.has_arc(xs[0], y2):
        case1, class_cd = True, parallel_class(sd, (xs[0], y2))
    else:
        case1, class_cd = False, parallel_class(sd, (y2, xs[0]))
    return _Frame(sd, xs, ys, case1, class_a, class_b, class_cd)


def _short_cycle(frame: _Frame, v: int, length: int) -> Entry:
    n, m = frame.n, frame.m
    if length % 2 == 1:
        h = (length - 3) // 2  # in [0, m-2]
        for t in range(n):
            verts = (
                frame.x(t),
                *(frame.y(-t + d) for d in range(h + 2)),
                *(frame.x(t - h + d) for d in range(h)),
            )
            if v in verts:
                return _checked(frame.sd, verts, length, _trace("alpha", t=t, h=h))
    elif frame.case1:
        h = (length - 4) // 2  # in [0, m-2]
        for t in range(n):
            verts = (
                frame.x(t),
                *(frame.y(2 - t + d) for d in range(h + 1)),
                *(frame.x(t - h - 1 + d) for d in range(h + 1)),
                frame.y(1 - t),
            )
            if v in verts:
                return _checked(frame.sd, verts, length, _trace("beta_case1", t=t, h=h))
    elif length == 2 * m:
        allowed = frame.class_a.arc_set() | frame.class_b.arc_set()
        for t in range(n):
            verts = [frame.y(1 - t)]
            for a in range(m):
                verts.append(frame.x(t + a))
                if a < m - 1:
                    verts.append(frame.y(-t - a))
            if v in verts:
                entry = _checked(frame.sd, tuple(verts), length, _trace("epsilon", t=t, m=m))
                # the construction promises every arc lies in the two base
                # classes; verified rather than assumed
                for arc in entry[0].arcs():
                    if arc not in allowed:
                        raise InternalInconsistencyError(
                            f"epsilon arc {arc} escapes the two generating classes"
                        )
                return entry
    else:
        h = (length - 4) // 2  # in [0, m-3]
        for t in range(n):
            verts = (
                frame.x(t),
                *(frame.y(-t + d) for d in range(h + 3)),
                *(frame.x(t - h + d) for d in range(h)),
            )
            if v in verts:
                return _checked(frame.sd, verts, length, _trace("gamma_case2", t=t, h=h))
    raise InternalInconsistencyError(f"no short family instance covers ({v}, {length})")


def _zigzag(frame: _Frame, t: int, j: int) -> list[int]:
    verts: list[int] = []
    for a in range(j + 1):
        verts.append(frame.y(-t - a))
        verts.append(frame.x(t + a + 1))
    return verts


def _long_cycle(frame: _Frame, v: int, length: int) -> Entry:
    n, m = frame.n, frame.m  # n > m here
    q, r = divmod(n, m)
    if length <= (q + 1) * m:
        i, j = divmod(length - 1, m)  # i in [1, q], j in [0, m-1]
        for t in range(n):
            verts = _zigzag(frame, t, j)
            verts.extend(frame.x(t + b) for b in range(j + 2, i * m + 1))
            if v in verts:
                return _checked(
                    frame.sd,
                    tuple(verts),
                    length,
                    _trace("zigzag_beta_long", t=t, i=i, j=j, m=m, q=q, r=r),
                )
    else:
        j = length - n - 1  # in [0, m-1]
        for t in range(n):
            verts = _zigzag(frame, t, j)
            verts.extend(frame.x(t + b) for b in range(j + 2, n + 1))
            if v in verts:
                return _checked(
                    frame.sd, tuple(verts), length, _trace("gamma_long", t=t, j=j, n=n)
                )
    raise InternalInconsistencyError(f"no long family instance covers ({v}, {length})")


def _require_vertex(sd: SummandDecomposition, v: int) -> None:
    if v not in sd.digraph.vertices:
        raise ValueError(f"vertex {v} out of range")


def two_summand_short_cycles(sd: SummandDecomposition, v: int, length: int) -> Entry:
    """A cycle of ``length`` in [3, 2*min(n, m)] through v, with its trace.

    Odd lengths come from the alpha family; even lengths branch on the
    orientation between xs[0] and ys[2] (beta in case 1, gamma in case 2,
    with epsilon supplying the top length 2*min(n, m) in case 2). The
    translation index t is swept ascending until the instance covers v.
    """
    _require_vertex(sd, v)
    if sd.summand_count == 2:
        top = 2 * min(sd.size(0), sd.size(1))
        if not 3 <= length <= top:
            raise ValueError(f"length {length} outside the short range [3, {top}]")
    return _short_cycle(_build_frame(sd), v, length)


def two_summand_long_cycles(sd: SummandDecomposition, v: int, length: int) -> Entry:
    """A cycle of ``length`` in [min(n, m) + 2, n + m] through v.

    With equal summand sizes the short families already reach n + m and
    the call delegates wholesale. Otherwise the zig-zag path families
    apply: beta-type cycles close early through a translate arc after i
    laps of the smaller cycle, and gamma-type cycles absorb all of the
    larger cycle.
    """
    _require_vertex(sd, v)
    if sd.summand_count == 2:
        lo = min(sd.size(0), sd.size(1)) + 2
        hi = sd.size(0) + sd.size(1)
        if not lo <= length <= hi:
            raise ValueError(f"length {length} outside the long range [{lo}, {hi}]")
    frame = _build_frame(sd)
    if frame.n == frame.m:
        return _short_cycle(frame, v, length)
    return _long_cycle(frame, v, length)


def two_summand_certificate(sd: SummandDecomposition) -> PancyclicityCertificate:
    """Total certificate for a strong no-good-pair 2-summand instance.

    Lengths up to 2*min(n, m) use the short families; the rest use the
    long ones. The two ranges glue without a gap for every legal summand
    size (2*min >= min + 2 whenever min >= 2) — asserted, not assumed.
    """
    frame = _build_frame(sd)
    n, m = frame.n, frame.m
    if 2 * m < m + 2:
        raise InternalInconsistencyError("short and long ranges fail to glue")
    table: dict[tuple[int, int], Entry] = {}
    for v in range(n + m):
        for length in range(3, n + m + 1):
            if length <= 2 * m:
                table[(v, length)] = _short_cycle(frame, v, length)
            else:
                table[(v, length)] = _long_cycle(frame, v, length)
    return PancyclicityCertificate(table)


def _cyclic_domination_order(sd: SummandDecomposition) -> tuple[int, int, int]:
    """The summand order (0, a, b) with 0 -> a -> b -> 0 domination."""
    dominates: dict[int, set[int]] = {0: set(), 1: set(), 2: set()}
    for i in range(3):
        for j in range(i + 1, 3):
            kind = classify_summand_pair(sd, i, j)
            if kind is PairKind.BIDIRECTIONAL:
                raise HypothesesNotMetError(
                    f"summand pair ({i}, {j}) is bidirectional, not dominating",
                    witness=(i, j),
                )
            if kind is PairKind.I_DOMINATES:
                dominates[i].add(j)
            else:
                dominates[j].add(i)
    if any(len(out) != 1 for out in dominates.values()):
        raise HypothesesNotMetError(
            "domination pattern is transitive, not cyclic",
            witness=tuple(sorted((i, j) for i, out in dominates.items() for j in out)),
        )
    a = next(iter(dominates[0]))
    b = next(iter(dominates[a]))
    if dominates[b] != {0}:
        raise InternalInconsistencyError("domination map is not a permutation")
    return 0, a, b


def three_summand_mapsto_certificate(sd: SummandDecomposition) -> PancyclicityCertificate:
    """Total certificate for three summands dominating in a cycle.

    With every cross arc available in the cyclic direction, three families
    suffice: mapsto_alpha (one vertex in each of the first two summands
    plus a run on the third), mapsto_beta (a run on the second plus all of
    the third), and mapsto_gamma (a run on the first plus all of the
    rest). Free indices sweep ascending; the boundary lengths prefer the
    earlier family.
    """
    if sd.summand_count != 3:
        raise ValueError("the cyclic domination families need exactly 3 summands")
    s0, s1, s2 = _cyclic_domination_order(sd)
    xs = sd.cycles[s0].vertices
    ys = sd.cycles[s1].vertices
    ws = sd.cycles[s2].vertices
    n, m, t = len(xs), len(ys), len(ws)

    def X(a: int) -> int:
        return xs[a % n]

    def Y(a: int) -> int:
        return ys[a % m]

    def W(a: int) -> int:
        return ws[a % t]

    def entry_for(v: int, length: int) -> Entry:
        if length <= t + 2:
            g = length - 3  # in [0, t-1]
            for i in range(n):
                for j in range(m):
                    for h in range(t):
                        verts = (X(i), Y(j), *(W(h + d) for d in range(g + 1)))
                        if v in verts:
                            return _checked(
                                sd, verts, length, _trace("mapsto_alpha", i=i, j=j, h=h, g=g)
                            )
        elif length <= m + t + 1:
            gp = length - t - 2  # in [1, m-1]
            for i in range(n):
                for j in range(m):
                    verts = (X(i), *(Y(j + d) for d in range(gp + 1)), *ws)
                    if v in verts:
                        return _checked(
                            sd, verts, length, _trace("mapsto_beta", i=i, j=j, gp=gp, t=t)
                        )
        else:
            gpp = length - m - t - 1  # in [1, n-1]
            for i in range(n):
                verts = (*(X(i + d) for d in range(gpp + 1)), *ys, *ws)
                if v in verts:
                    return _checked(
                        sd, verts, length, _trace("mapsto_gamma", i=i, gpp=gpp, m=m, t=t)
                    )
        raise InternalInconsistencyError(f"no cyclic family instance covers ({v}, {length})")

    total = n + m + t
    table = {
        (v, length): entry_for(v, length)
        for v in range(total)
        for length in range(3, total + 1)
    }
    return PancyclicityCertificate(table)


def _require_tournament(h: Digraph) -> None:
    expected = h.vertex_count * (h.vertex_count - 1) // 2
    if len(h.arcs) != expected:
        raise ValueError(f"not a tournament: {len(h.arcs)} arcs, expected {expected}")
    for u in h.vertices:
        for v in range(u + 1, h.vertex_count):
            if h.has_arc(u, v) == h.has_arc(v, u):
                raise ValueError(f"not a tournament: pair ({u}, {v})")


def _moon_extend(h: Digraph, cycle: list[int]) -> list[int]:
    members = set(cycle)
    outside = [w for w in h.vertices if w not in members]
    size = len(cycle)
    for w in outside:
        sends = any(h.has_arc(w, c) for c in cycle)
        receives = any(h.has_arc(c, w) for c in cycle)
        if sends and receives:
            for idx in range(size):
                if h.has_arc(cycle[idx], w) and h.has_arc(w, cycle[(idx + 1) % size]):
                    return cycle[: idx + 1] + [w] + cycle[idx + 1 :]
            raise InternalInconsistencyError(
                f"vertex {w} meets the cycle both ways but admits no insertion"
            )
    # every outside vertex either beats the whole cycle or loses to it
    senders = [w for w in outside if all(h.has_arc(w, c) for c in cycle)]
    receivers = [w for w in outside if all(h.has_arc(c, w) for c in cycle)]
    for loser in receivers:
        for winner in senders:
            if h.has_arc(loser, winner):
                return cycle[:-1] + [loser, winner]
    raise InternalInconsistencyError("no extension exists; the tournament cannot be strong")


def moon_tournament_cycles(h: Digraph, u: int, length: int) -> CycleWitness:
    """A cycle of exactly ``length`` through u in a strong tournament.

    Classical inductive construction: a 3-cycle through u, then one vertex
    added per step. A step either inserts an outside vertex that both
    sends to and receives from the current cycle, or — when the outside
    splits into whole-cycle winners and losers — reroutes the final arc
    through a loser-to-winner arc, dropping u's predecessor. Ties break by
    ascending vertex id throughout.
    """
    k = h.vertex_count
    if k < 3:
        raise ValueError("a tournament needs at least 3 vertices to carry cycles")
    _require_tournament(h)
    if u not in h.vertices:
        raise ValueError(f"vertex {u} out of range")
    if not 3 <= length <= k:
        raise ValueError(f"length {length} outside [3, {k}]")
    if not is_strong(h):
        raise HypothesesNotMetError("tournament is not strong")

    cycle: list[int] | None = None
    for w in h.out_neighbors(u):
        for z in h.in_neighbors(u):
            if h.has_arc(w, z):
                cycle = [u, w, z]
                break
        if cycle is not None:
            break
    if cycle is None:
        raise InternalInconsistencyError(f"no 3-cycle through {u} in a strong tournament")

    while len(cycle) < length:
        grown = _moon_extend(h, cycle)
        if (
            len(grown) != len(cycle) + 1
            or grown[0] != u
            or not validate_cycle(h, CycleWitness(tuple(grown)))
        ):
            raise InternalInconsistencyError("extension step broke the cycle invariant")
        cycle = grown
    return CycleWitness(tuple(cycle))


def main_certificate(
    sd: SummandDecomposition, strict_good_cycle: bool = False
) -> PancyclicityCertificate:
    """Total certificate for a strong instance with no good cycle.

    The hypotheses (strongness, good-cycle freeness) are checked once,
    here; the induction below them never re-tests, because both survive
    every merge it performs. ``strict_good_cycle`` switches the good-cycle
    test to its strict reading (see :func:`gensum.find_good_cycle`);
    instances admitted only by the strict reading may run into proof
    steps whose own hypotheses fail, which surfaces as
    InternalInconsistencyError rather than a wrong certificate.
    """
    if not is_strong(sd.digraph):
        raise HypothesesNotMetError("instance is not strong")
    gc = find_good_cycle(sd, strict=strict_good_cycle)
    if gc is not None:
        raise HypothesesNotMetError("good cycle present", witness=gc)
    return _certify(sd)


def _certify(sd: SummandDecomposition) -> PancyclicityCertificate:
    if sd.summand_count == 2:
        try:
            return two_summand_certificate(sd)
        except HypothesesNotMetError as exc:
            raise InternalInconsistencyError(
                f"two-summand step rejected its instance mid-induction: {exc}"
            ) from exc
    cond = condensation_tournament(sd)
    if isinstance(cond, BidirectionalPair):
        return _certify_case1(sd, cond.i, cond.j)
    return _certify_case2(sd, cond.tournament)


def _certify_case1(sd: SummandDecomposition, j: int, jp: int) -> PancyclicityCertificate:
    sub = induced_subsum(sd, {j, jp})
    ssd = sub.decomposition
    if not is_strong(ssd.digraph):
        raise InternalInconsistencyError(
            f"subsum on bidirectional pair ({j}, {jp}) is not strong"
        )
    try:
        sub_cert = two_summand_certificate(ssd)
    except HypothesesNotMetError as exc:
        raise InternalInconsistencyError(
            f"subsum on pair ({j}, {jp}) violated a proof-step hypothesis: {exc}"
        ) from exc

    sub_size = ssd.digraph.vertex_count
    hamiltonian, _ = sub_cert.entry(0, sub_size)
    merged_cycle = sub.lift_cycle(hamiltonian).canonical()
    rec = _certify(merge_summands(sd, {j, jp}, merged_cycle))

    table: dict[tuple[int, int], Entry] = {}
    for key, (witness, trace) in rec.table.items():
        table[key] = (witness, _trace("induction_case1", trace, j=j, jp=jp))
    # short lengths through the merged block come from the subsum itself
    for v_sub, v_parent in enumerate(sub.parent_ids):
        for length in range(3, sub_size + 1):
            witness, trace = sub_cert.entry(v_sub, length)
            lifted = sub.lift_cycle(witness)
            if not validate_cycle(sd.digraph, lifted):
                raise InternalInconsistencyError("lifted subsum witness failed validation")
            table[(v_parent, length)] = (lifted, _trace("induction_case1", trace, j=j, jp=jp))
    return PancyclicityCertificate(table)


def _certify_case2(sd: SummandDecomposition, h: Digraph) -> PancyclicityCertificate:
    if not is_strong(h):
        raise InternalInconsistencyError("condensation of a strong instance is not strong")
    if sd.summand_count == 3:
        try:
            return three_summand_mapsto_certificate(sd)
        except HypothesesNotMetError as exc:
            raise InternalInconsistencyError(
                f"cyclic-domination step rejected its instance: {exc}"
            ) from exc

    t = sd.summand_count - 1
    alpha = moon_tournament_cycles(h, 0, t)
    order = alpha.vertices
    paths = []
    for i in order:
        cyc = sd.cycles[i]
        paths.append(cyc.rotated_to(cyc.successor(min(cyc.vertices))).vertices)
    for a, path in enumerate(paths):
        successor_head = paths[(a + 1) % t][0]
        if not sd.digraph.has_arc(path[-1], successor_head):
            # domination along the tournament cycle forces this arc
            raise InternalInconsistencyError(
                f"missing forced connector arc ({path[-1]}, {successor_head})"
            )
    gamma = CycleWitness(tuple(v for path in paths for v in path))
    if not validate_cycle(sd.digraph, gamma):
        raise InternalInconsistencyError("spliced tournament-cycle walk is not a cycle")

    rec = _certify(merge_summands(sd, set(order), gamma.canonical()))
    table = {
        key: (witness, _trace("induction_case2", trace, t=t, merged=tuple(order)))
        for key, (witness, trace) in rec.table.items()
    }
    return PancyclicityCertificate(table)
