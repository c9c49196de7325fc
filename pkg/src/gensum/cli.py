"""Command-line front end.

Six subcommands: ``validate`` (is the file a well-formed instance),
``analyze`` (structural report: strongness, pair kinds, obstruction
witnesses, parallel classes, condensation), ``certify`` (produce a
pancyclicity certificate), ``verify`` (re-check a certificate against an
instance), ``generate`` (sample a seeded random instance), and ``oracle``
(brute-force pancyclicity on small instances).

Exit codes: 0 success, 1 I/O failure, 2 malformed input or bad usage,
3 structural validation failure (including certificate rejection),
4 theorem hypotheses not met (a witness is printed), 5 internal
inconsistency (a step the theory guarantees has failed — a bug).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    BidirectionalPair,
    PairKind,
    classify_summand_pair,
    condensation_tournament,
    find_good_cycle,
    find_good_pair,
    parallel_class,
)
from .core import is_strong
from .decomposition import SummandDecomposition, exterior_arcs, generate_random_gs
from .errors import (
    CapExceededError,
    DecompositionError,
    HypothesesNotMetError,
    InstanceParseError,
    InternalInconsistencyError,
)
from .files import (
    load_certificate,
    load_instance,
    serialize_certificate,
    serialize_instance,
)
from .oracle import (
    DEFAULT_ORACLE_CAP,
    enumerate_cycles,
    is_vertex_pancyclic,
    verify_certificate,
)
from .synthesis import main_certificate


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _sizes(sd: SummandDecomposition) -> str:
    return "(" + ", ".join(str(sd.size(i)) for i in range(sd.summand_count)) + ")"


def cmd_validate(args: argparse.Namespace) -> int:
    sd = load_instance(args.instance)
    print(
        f"ok: {sd.summand_count} summands, sizes {_sizes(sd)}, "
        f"{sd.digraph.vertex_count} vertices, {len(sd.digraph.arcs)} arcs "
        f"({len(exterior_arcs(sd))} exterior)"
    )
    return 0


def _describe_pair_kind(sd: SummandDecomposition, i: int, j: int) -> str:
    kind = classify_summand_pair(sd, i, j)
    if kind is PairKind.BIDIRECTIONAL:
        return "bidirectional"
    winner = i if kind is PairKind.I_DOMINATES else j
    return f"summand {winner} dominates"


def cmd_analyze(args: argparse.Namespace) -> int:
    sd = load_instance(args.instance)
    d = sd.digraph
    k = sd.summand_count
    print(f"summands: {k}  sizes: {_sizes(sd)}")
    print(f"vertices: {d.vertex_count}  arcs: {len(d.arcs)}  exterior: {len(exterior_arcs(sd))}")
    print(f"strong: {'yes' if is_strong(d) else 'no'}")
    for i in range(k):
        for j in range(i + 1, k):
            print(f"pair ({i}, {j}): {_describe_pair_kind(sd, i, j)}")

    gp = None
    if k == 2:
        gp = find_good_pair(sd)
        if gp is None:
            print("good pair: none")
        else:
            (a1, a2) = gp.arcs
            swapped = " [roles swapped]" if gp.swapped else ""
            print(
                f"good pair: s={gp.s} r={gp.r} arcs {a1[0]}->{a1[1]} {a2[0]}->{a2[1]}{swapped}"
            )

    gc = find_good_cycle(sd, strict=args.strict_good_cycle)
    if gc is None:
        print("good cycle: none")
    else:
        v0, v1, v2, v3 = gc.vertices
        flags = ",".join("ext" if f else "int" for f in gc.exterior_flags)
        print(f"good cycle: ({v0}, {v1}, {v2}, {v3}) arcs [{flags}]")

    if k == 2:
        if gp is None:
            print("parallel classes:")
            classed: set[tuple[int, int]] = set()
            for arc in sorted(exterior_arcs(sd)):
                if arc in classed:
                    continue
                pc = parallel_class(sd, arc)
                classed.update(pc.members)
                body = " ".join(f"{u}->{v}" for u, v in pc.members)
                print(f"  {arc[0]}->{arc[1]} [size {pc.size}]: {body}")
        else:
            print("parallel classes: skipped (good pair present)")
    else:
        cond = condensation_tournament(sd)
        if isinstance(cond, BidirectionalPair):
            print(f"condensation: bidirectional pair ({cond.i}, {cond.j})")
        else:
            body = " ".join(f"{u}->{v}" for u, v in sorted(cond.tournament.arcs))
            print(f"condensation: tournament on {k} summands, arcs {body}")
    return 0


def cmd_certify(args: argparse.Namespace) -> int:
    sd = load_instance(args.instance)
    cert = main_certificate(sd, strict_good_cycle=args.strict_good_cycle)
    _emit(serialize_certificate(cert), args.out)
    if args.out is not None:
        print(f"wrote {len(cert.table)} entries to {args.out}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    sd = load_instance(args.instance)
    cert = load_certificate(args.certificate)
    ok, failure = verify_certificate(sd.digraph, cert)
    if ok:
        print(f"certificate ok: {len(cert.table)} entries")
        return 0
    assert failure is not None
    print(
        f"certificate rejected: {failure.kind} at "
        f"({failure.vertex}, {failure.length}): {failure.detail}",
        file=sys.stderr,
    )
    return 3


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        sizes = tuple(int(tok) for tok in args.sizes.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"--sizes wants comma-separated integers, got {args.sizes!r}") from None
    sd = generate_random_gs(sizes, bias=args.bias, seed=args.seed)
    _emit(serialize_instance(sd), args.out)
    if args.out is not None:
        print(f"wrote instance with {sd.digraph.vertex_count} vertices to {args.out}")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    sd = load_instance(args.instance)
    d = sd.digraph
    print(f"strong: {'yes' if is_strong(d) else 'no'}")
    inventory = enumerate_cycles(d, cap=args.cap)
    counts = " ".join(
        f"{length}:{inventory.total_of_length(length)}"
        for length in range(2, d.vertex_count + 1)
    )
    print(f"cycles by length: {counts}")
    ok, gap = is_vertex_pancyclic(d, cap=args.cap)
    if ok:
        print("vertex-pancyclic: yes")
    else:
        assert gap is not None
        print(f"vertex-pancyclic: no  first gap: vertex {gap[0]} length {gap[1]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gensum",
        description="structure analysis and pancyclicity certificates for "
        "generalized sums of Hamiltonian digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a file is a well-formed instance")
    p.add_argument("instance", help="instance file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="report strongness, pair kinds, and obstructions")
    p.add_argument("instance", help="instance file")
    p.add_argument(
        "--strict-good-cycle",
        action="store_true",
        help="also require the interior opposite pair in the good-cycle test",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="produce a vertex-pancyclicity certificate")
    p.add_argument("instance", help="instance file")
    p.add_argument("--strict-good-cycle", action="store_true")
    p.add_argument("--out", metavar="PATH", help="write the certificate here instead of stdout")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate against an instance")
    p.add_argument("instance", help="instance file")
    p.add_argument("certificate", help="certificate file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="sample a seeded random instance")
    p.add_argument("--sizes", required=True, help="comma-separated summand sizes, e.g. 3,3,4")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bias", type=float, default=0.5, help="probability a cross pair points low->high")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="brute-force pancyclicity check (small instances)")
    p.add_argument("instance", help="instance file")
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP, help="vertex-count cap")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InstanceParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"refusing: {exc}", file=sys.stderr)
        return 2
    except DecompositionError as exc:
        print(f"invalid instance: {exc}", file=sys.stderr)
        return 3
    except HypothesesNotMetError as exc:
        if exc.witness is not None:
            print(f"hypotheses not met: {exc.reason}  witness: {exc.witness}", file=sys.stderr)
        else:
            print(f"hypotheses not met: {exc.reason}", file=sys.stderr)
        return 4
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 5
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entrypoint()
