"""Plain-text instance and certificate formats.

Instance files::

    SUMMANDS <k>
    <vertex ids of summand 0, ascending>
    ...                                   (k lines)
    CYCLES
    <stored rotation of cycle 0>
    ...                                   (k lines)
    ARCS
    <tail> <head>                         (one arc per line, sorted)

Certificate files carry one line per (vertex, length) cell, sorted::

    <vertex> <length> <trace>: <v0> <v1> ... <v_{length-1}>

Parsers skip blank lines and ``#`` comments; serializers emit neither, and
``parse`` then ``serialize`` reproduces a serialized file byte for byte.
Syntactic problems raise :class:`InstanceParseError` with a 1-based line
number; structural problems (a well-formed file that is not a generalized
sum) surface as the usual :class:`DecompositionError` subclasses.
"""

from __future__ import annotations

from pathlib import Path

from .core import CycleWitness, Digraph
from .decomposition import SummandDecomposition, validate_decomposition
from .errors import InstanceParseError
from .synthesis import DerivationTrace, PancyclicityCertificate

Row = tuple[int, str]


def _content_rows(text: str) -> list[Row]:
    rows: list[Row] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            rows.append((lineno, stripped))
    return rows


def _ints(row: Row, *, exactly: int | None = None) -> list[int]:
    lineno, text = row
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError:
        raise InstanceParseError(lineno, f"expected integers, got {text!r}") from None
    if exactly is not None and len(values) != exactly:
        raise InstanceParseError(lineno, f"expected {exactly} integers, got {len(values)}")
    if any(v < 0 for v in values):
        raise InstanceParseError(lineno, f"negative vertex id in {text!r}")
    return values


class _RowCursor:
    def __init__(self, rows: list[Row]):
        self._rows = rows
        self._i = 0

    def take(self, what: str) -> Row:
        if self._i >= len(self._rows):
            last = self._rows[-1][0] if self._rows else 0
            raise InstanceParseError(last, f"unexpected end of file, wanted {what}")
        row = self._rows[self._i]
        self._i += 1
        return row

    def remaining(self) -> list[Row]:
        return self._rows[self._i :]


def parse_instance(text: str) -> SummandDecomposition:
    cursor = _RowCursor(_content_rows(text))

    lineno, header = cursor.take("SUMMANDS header")
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != "SUMMANDS":
        raise InstanceParseError(lineno, f"expected 'SUMMANDS <k>', got {header!r}")
    try:
        k = int(tokens[1])
    except ValueError:
        raise InstanceParseError(lineno, f"summand count {tokens[1]!r} is not an integer") from None

    summands = [frozenset(_ints(cursor.take("a summand line"))) for _ in range(k)]

    lineno, marker = cursor.take("CYCLES header")
    if marker != "CYCLES":
        raise InstanceParseError(lineno, f"expected 'CYCLES', got {marker!r}")
    cycle_rows = [cursor.take("a cycle line") for _ in range(k)]

    lineno, marker = cursor.take("ARCS header")
    if marker != "ARCS":
        raise InstanceParseError(lineno, f"expected 'ARCS', got {marker!r}")

    arcs: set[tuple[int, int]] = set()
    for row in cursor.remaining():
        u, v = _ints(row, exactly=2)
        if u == v:
            raise InstanceParseError(row[0], f"self-loop at vertex {u}")
        arcs.add((u, v))

    referenced = [v for s in summands for v in s]
    referenced.extend(v for row in cycle_rows for v in _ints(row))
    referenced.extend(v for arc in arcs for v in arc)
    if not referenced:
        raise InstanceParseError(lineno, "instance mentions no vertices")
    vertex_count = max(referenced) + 1

    cycles = []
    for row in cycle_rows:
        values = _ints(row)
        try:
            cycles.append(CycleWitness(tuple(values)))
        except ValueError as exc:
            raise InstanceParseError(row[0], str(exc)) from None

    digraph = Digraph(vertex_count, frozenset(arcs))
    return validate_decomposition(digraph, tuple(summands), tuple(cycles))


def serialize_instance(sd: SummandDecomposition) -> str:
    lines = [f"SUMMANDS {sd.summand_count}"]
    lines.extend(" ".join(str(v) for v in sorted(s)) for s in sd.summands)
    lines.append("CYCLES")
    lines.extend(" ".join(str(v) for v in c.vertices) for c in sd.cycles)
    lines.append("ARCS")
    lines.extend(f"{u} {v}" for u, v in sorted(sd.digraph.arcs))
    return "\n".join(lines) + "\n"


def load_instance(path: str | Path) -> SummandDecomposition:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def save_instance(sd: SummandDecomposition, path: str | Path) -> None:
    Path(path).write_text(serialize_instance(sd), encoding="utf-8")


def serialize_certificate(cert: PancyclicityCertificate) -> str:
    lines = []
    for v, length in sorted(cert.table):
        witness, trace = cert.table[(v, length)]
        body = " ".join(str(u) for u in witness.vertices)
        lines.append(f"{v} {length} {trace.render()}: {body}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> PancyclicityCertificate:
    """Read a certificate back; traces stay as their rendered strings.

    A parsed trace is an opaque :class:`DerivationTrace` whose tag is the
    raw rendered text (rendered traces contain no whitespace), so parsing
    and re-serializing a certificate is byte-exact even though the trace
    structure is not rebuilt.
    """
    table: dict[tuple[int, int], tuple[CycleWitness, DerivationTrace]] = {}
    for lineno, row in _content_rows(text):
        head, sep, tail = row.partition(":")
        if not sep:
            raise InstanceParseError(lineno, f"missing ':' in certificate line {row!r}")
        fields = head.split()
        if len(fields) != 3:
            raise InstanceParseError(
                lineno, f"expected '<vertex> <length> <trace>', got {head.strip()!r}"
            )
        v, length = _ints((lineno, " ".join(fields[:2])), exactly=2)
        vertices = _ints((lineno, tail))
        try:
            witness = CycleWitness(tuple(vertices))
        except ValueError as exc:
            raise InstanceParseError(lineno, str(exc)) from None
        if (v, length) in table:
            raise InstanceParseError(lineno, f"duplicate entry for ({v}, {length})")
        table[(v, length)] = (witness, DerivationTrace(fields[2]))
    return PancyclicityCertificate(table)


def load_certificate(path: str | Path) -> PancyclicityCertificate:
    return parse_certificate(Path(path).read_text(encoding="utf-8"))


def save_certificate(cert: PancyclicityCertificate, path: str | Path) -> None:
    Path(path).write_text(serialize_certificate(cert), encoding="utf-8")
