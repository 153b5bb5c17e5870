"""Batch front end: generate, verify, analyze and export MUB families.

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 construction failure.  Given identical flags the output is
byte-identical (fixed search orders, canonical JSON, no randomness
except the seeded sampler).
"""

from __future__ import annotations

import argparse
import json
import sys

from .entanglement import Bipartition, analysis_report
from .fields import PolyZp, is_prime
from .linalg import MatZp
from .mubs import (
    MubSet,
    canonical_json,
    from_document,
    mub_set,
    to_document,
    verify_mu_condition,
)
from .states import circuit_to_text, emit_measurement_circuit, verify_mu_numeric
from .symrep import (
    ConstructionError,
    symmetrizing_form_odd,
    symmetrize_companion,
    tridiagonal_rep,
)
from .tables import derive_rows

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3


def _prime(text: str) -> int:
    v = int(text)
    if not is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"{v} must be >= 1")
    return v


def _csv_ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphmub",
        description="Construct, verify and analyze complete sets of "
                    "mutually unbiased graph bases for prime-power dimensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a family and emit its document")
    gen.add_argument("-p", type=_prime, required=True, help="prime qupit dimension")
    gen.add_argument("-n", type=_positive, required=True, help="number of qupits")
    gen.add_argument("--method", choices=("tridiag", "companion", "auto"),
                     default="auto")
    gen.add_argument("--poly", type=_csv_ints, metavar="C0,C1,...",
                     help="target polynomial, ascending coefficients")
    gen.add_argument("--d", type=_csv_ints, metavar="D1,...,DN",
                     help="explicit tridiagonal diagonal")
    gen.add_argument("--primitive", action="store_true",
                     help="demand a primitive characteristic polynomial")
    gen.add_argument("--out", help="output path (default stdout)")

    ver = sub.add_parser("verify", help="check a family document")
    ver.add_argument("doc", nargs="?", default="-", help="document path or - for stdin")
    ver.add_argument("--numeric", action="store_true",
                     help="also sweep state-vector overlaps")
    ver.add_argument("--tol", type=float, default=1e-10)
    ver.add_argument("--sample", type=_positive,
                     help="sampled overlap count instead of the full sweep")
    ver.add_argument("--threads", type=_positive, default=1)

    ana = sub.add_parser("analyze", help="entanglement and design-identity report")
    ana.add_argument("doc", nargs="?", default="-")
    ana.add_argument("--bipartition", type=_csv_ints, metavar="I,J,...",
                     help="X-side vertex indices (default: all bipartitions)")
    ana.add_argument("--out")

    exp = sub.add_parser("export", help="re-emit a document as json, dot or circuits")
    exp.add_argument("doc", nargs="?", default="-")
    exp.add_argument("--format", choices=("json", "dot", "circuit"), default="json")
    exp.add_argument("--index", type=int,
                     help="restrict to one adjacency matrix")
    exp.add_argument("--out")

    tab = sub.add_parser("tables", help="re-derive the curated diagonal tables")
    tab.add_argument("-p", type=_prime, help="restrict to one prime")
    tab.add_argument("--out")

    exa = sub.add_parser("example", help="replay a worked construction end to end")
    exa.add_argument("name", choices=("appendix-c", "appendix-d"),
                     help="appendix-c: three qutrits via companion symmetrization; "
                          "appendix-d: three qubits via a tridiagonal diagonal")

    return parser


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> MubSet:
    raw = sys.stdin.read() if path == "-" else open(path).read()
    return from_document(json.loads(raw))


def _fmt_matrix(m: MatZp) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in m.rows)


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_gen(args) -> int:
    poly = PolyZp(args.p, args.poly) if args.poly is not None else None
    try:
        fam = mub_set(args.p, args.n, method=args.method, poly=poly,
                      d=args.d, primitive=args.primitive)
    except ConstructionError as exc:
        print(f"construction failure: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(canonical_json(to_document(fam)), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        fam = _load(args.doc)
    except (OSError, ValueError, KeyError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    algebraic = verify_mu_condition(fam)
    if not algebraic.ok:
        r, t = algebraic.failing_pair
        print(f"FAIL algebraic (difference condition): matrices {r} and {t} "
              f"have a singular difference", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    print(f"algebraic difference condition: pass "
          f"({algebraic.mode} mode, {len(fam.matrices)} matrices)")
    if args.numeric:
        report = verify_mu_numeric(fam, tol=args.tol, sample=args.sample,
                                   threads=args.threads)
        if not report.ok:
            r, t, mr, ms, dev = report.first_violation
            print(f"FAIL numeric (overlap): bases {r},{t} elements {mr},{ms} "
                  f"deviate by {dev:.3e} (tol {args.tol:.1e})", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        print(f"numeric overlap sweep: pass ({report.mode}, "
              f"{report.pairs_checked} checks, worst deviation "
              f"{report.worst_deviation:.3e})")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    try:
        fam = _load(args.doc)
    except (OSError, ValueError, KeyError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    bips = None
    if args.bipartition:
        try:
            bips = [Bipartition.of(args.bipartition, fam.n)]
        except ValueError as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    report = analysis_report(fam, bips)
    _write(canonical_json(report), args.out)
    return EXIT_OK


def adjacency_to_dot(m: MatZp, name: str) -> str:
    """Multigraph DOT form: vertices 1..n, multiplicities as edge labels,
    self-loops as labeled loop edges."""
    lines = [f"graph {name} {{"]
    for i in range(1, m.n + 1):
        lines.append(f"  {i};")
    for i in range(m.n):
        for j in range(i, m.n):
            k = m[i, j]
            if k:
                lines.append(f'  {i + 1} -- {j + 1} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_export(args) -> int:
    try:
        fam = _load(args.doc)
    except (OSError, ValueError, KeyError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    indices = range(len(fam.matrices))
    if args.index is not None:
        if not 0 <= args.index < len(fam.matrices):
            print(f"index {args.index} out of range", file=sys.stderr)
            return EXIT_USAGE
        indices = [args.index]
    if args.format == "json":
        out = canonical_json(to_document(fam))
    elif args.format == "dot":
        out = "".join(adjacency_to_dot(fam.matrices[i], f"g{i}") for i in indices)
    else:
        parts = [circuit_to_text(emit_measurement_circuit(fam.matrices[i]))
                 for i in indices]
        out = "\n".join(parts)
    _write(out, args.out)
    return EXIT_OK


def _cmd_tables(args) -> int:
    rows = derive_rows(args.p)
    text = "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n"
                   for r in rows)
    _write(text, args.out)
    return EXIT_OK


def _cmd_example(args) -> int:
    if args.name == "appendix-c":
        return _example_three_qutrits()
    return _example_three_qubits()


def _example_three_qutrits() -> int:
    f = PolyZp(3, [1, 2, 1, 1])
    print(f"polynomial f = {f} over Z_3 (irreducible: {f.is_irreducible()})")
    rep = symmetrize_companion(f)
    print("companion matrix C:")
    print(_fmt_matrix(rep.companion))
    b0 = symmetrizing_form_odd(f)
    print("base form B_0:")
    print(_fmt_matrix(b0))
    print(f"det(B_0) = {b0.det()}")
    print(f"multiplier g = {rep.multiplier}")
    print("congruence transform P with P (g B_0) P^T = 1:")
    print(_fmt_matrix(rep.transform))
    print("P^-1:")
    print(_fmt_matrix(rep.transform.inverse()))
    print("symmetric seed Q = P C P^-1:")
    print(_fmt_matrix(rep.q))
    print("Q^2:")
    print(_fmt_matrix(rep.q @ rep.q))
    fam = mub_set(3, 3, method="companion", poly=f)
    report = verify_mu_condition(fam)
    print(f"family: {len(fam.matrices)} adjacency matrices; "
          f"difference condition {'pass' if report.ok else 'FAIL'}; "
          f"{fam.num_bases} mutually unbiased bases including computational")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _example_three_qubits() -> int:
    d = (1, 0, 0)
    rep = tridiagonal_rep(2, d)
    print(f"diagonal d = {d} over Z_2")
    print("tridiagonal seed Q:")
    print(_fmt_matrix(rep.q))
    print(f"characteristic polynomial: {rep.f} "
          f"(irreducible: {rep.f.is_irreducible()}, primitive: {rep.f.is_primitive()})")
    fam = mub_set(2, 3, d=d)
    for k in range(3):
        print(f"fundamental graph Q^{k}:")
        print(_fmt_matrix(rep.q**k))
    print("all adjacency matrices (index: coefficient vector a_0,a_1,a_2):")
    for idx, m in enumerate(fam.matrices):
        print(f"  index {idx}, coefficients {fam.coeff_vector(idx)}:")
        for row in m.rows:
            print("    " + " ".join(map(str, row)))
    report = verify_mu_condition(fam)
    print(f"difference condition {'pass' if report.ok else 'FAIL'}; "
          f"{fam.num_bases} mutually unbiased bases including computational")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


_HANDLERS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
    "export": _cmd_export,
    "tables": _cmd_tables,
    "example": _cmd_example,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
