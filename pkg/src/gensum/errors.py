"""Shared exception types.

The CLI maps these onto distinct exit codes, so the hierarchy mirrors the
failure categories a caller can meaningfully react to: malformed input
files, structurally invalid instances, instances that merely fail the
mathematical hypotheses, and internal consistency violations (which always
indicate a bug, never a property of the input).
"""

from __future__ import annotations


class GensumError(Exception):
    """Base class for all errors raised by this package."""


class CapExceededError(GensumError, ValueError):
    """Input exceeds the configured exhaustive-search size cap."""


class DecompositionError(GensumError, ValueError):
    """The proposed summand decomposition is structurally invalid."""


class NotAPartitionError(DecompositionError):
    """Summand vertex sets do not partition the vertex range."""


class MissingCrossArcError(DecompositionError):
    """A cross-summand vertex pair has no arc in either direction."""

    def __init__(self, u: int, v: int):
        super().__init__(f"no arc between cross-summand vertices {u} and {v}")
        self.pair = (u, v)


class SymmetricCrossArcError(DecompositionError):
    """A cross-summand vertex pair has arcs in both directions."""

    def __init__(self, u: int, v: int):
        super().__init__(f"arcs in both directions between cross-summand vertices {u} and {v}")
        self.pair = (u, v)


class InvalidSummandCycleError(DecompositionError):
    """A declared Hamiltonian witness is not a spanning cycle of its summand."""

    def __init__(self, summand: int, reason: str):
        super().__init__(f"summand {summand}: {reason}")
        self.summand = summand


class HypothesesNotMetError(GensumError):
    """The instance fails a theorem hypothesis; carries a concrete witness.

    ``witness`` is whatever object demonstrates the failure (a good pair,
    a good cycle, a pair classification, ...) or None when the failure is
    a global property such as strongness.
    """

    def __init__(self, reason: str, witness: object = None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class InternalInconsistencyError(GensumError):
    """A step that is mathematically guaranteed failed: a bug, not an input."""


class ParallelClassError(InternalInconsistencyError):
    """A predicted parallel-class member is absent from the digraph."""

    def __init__(self, generator: tuple[int, int], index: int, arc: tuple[int, int]):
        super().__init__(
            f"parallel class of {generator}: member {index} = {arc} is not an arc"
        )
        self.generator = generator
        self.index = index
        self.arc = arc


class InstanceParseError(GensumError, ValueError):
    """An instance or certificate file is syntactically malformed."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
