"""Generalized sums of Hamiltonian digraphs.

A generalized sum is a digraph assembled from vertex-disjoint Hamiltonian
summands with exactly one arc between every cross-summand vertex pair.
This package models such digraphs, detects the structural obstructions
(good pairs, good cycles) that block cycle-merging arguments, and, when
the obstructions are absent, produces explicit vertex-pancyclicity
certificates: one concrete cycle per (vertex, length) slot, each tagged
with the construction that produced it. An independent brute-force oracle
re-validates everything.
"""

from .core import (
    CycleWitness,
    Digraph,
    PathWitness,
    find_hamiltonian_cycle,
    is_strong,
    validate_cycle,
    validate_path,
)
from .decomposition import (
    InducedSubsum,
    SummandDecomposition,
    exterior_arcs,
    exterior_degrees,
    generate_random_gs,
    induced_subsum,
    merge_summands,
    validate_decomposition,
)
from .analysis import (
    BidirectionalPair,
    CondensationTournament,
    GoodCycleWitness,
    GoodPairWitness,
    PairKind,
    ParallelClass,
    classify_summand_pair,
    condensation_tournament,
    find_good_cycle,
    find_good_pair,
    parallel_class,
)
from .synthesis import (
    DerivationTrace,
    PancyclicityCertificate,
    find_triangle,
    main_certificate,
    merge_cycles_good_pair,
    moon_tournament_cycles,
    three_summand_mapsto_certificate,
    two_summand_certificate,
    two_summand_long_cycles,
    two_summand_short_cycles,
)
from .oracle import (
    CycleInventory,
    VerificationFailure,
    enumerate_cycles,
    is_vertex_pancyclic,
    verify_certificate,
)

__all__ = [
    "BidirectionalPair",
    "CondensationTournament",
    "CycleInventory",
    "CycleWitness",
    "DerivationTrace",
    "Digraph",
    "GoodCycleWitness",
    "GoodPairWitness",
    "InducedSubsum",
    "PairKind",
    "PancyclicityCertificate",
    "ParallelClass",
    "PathWitness",
    "SummandDecomposition",
    "VerificationFailure",
    "classify_summand_pair",
    "condensation_tournament",
    "enumerate_cycles",
    "exterior_arcs",
    "exterior_degrees",
    "find_good_cycle",
    "find_good_pair",
    "find_hamiltonian_cycle",
    "find_triangle",
    "generate_random_gs",
    "induced_subsum",
    "is_strong",
    "is_vertex_pancyclic",
    "main_certificate",
    "merge_cycles_good_pair",
    "merge_summands",
    "moon_tournament_cycles",
    "parallel_class",
    "three_summand_mapsto_certificate",
    "two_summand_certificate",
    "two_summand_long_cycles",
    "two_summand_short_cycles",
    "validate_cycle",
    "validate_decomposition",
    "validate_path",
    "verify_certificate",
]
