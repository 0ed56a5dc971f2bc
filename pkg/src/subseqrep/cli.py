"""Command-line front end.

Subcommands: analyze (all solvers on one sequence), tables (dump the
square/cube interval table), reduce (graph -> SAT -> string instances),
oracle (brute-force reference values), bench (timing + fitted scaling
slope).  All reports are JSON documents on stdout; timings live in one
subtree so the rest is byte-stable across runs.

Exit codes: 0 ok, 2 input error, 3 budget or guard exceeded,
4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time

from .core import (
    OccurrenceIndex,
    Sequence,
    SequenceParseError,
    SrsDecomposition,
    parse_sequence,
    sequence_from_tokens,
    split_exponent,
    validate_srs,
)
from .hardness import (
    GraphFormatError,
    InstanceSizeError,
    assignment_from_coloring,
    check_reduction_invariants,
    coloring_to_sat,
    extract_witness,
    parse_graph,
    sat_from_json_doc,
    sat_to_json_doc,
    sat_to_string,
    to_dimacs,
)
from .lsrs import lsrs
from .oracles import (
    BudgetExceededError,
    oracle_cube_table,
    oracle_lsrs,
    oracle_lsrs_plus,
    oracle_square_table,
)
from .plus3 import OccurrenceBoundError, lsrs_plus3
from .tables import cube_table, cube_witness, square_table, square_witness

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def read_sequence(path: str | None, tokens: bool) -> Sequence:
    text = _read_text(path)
    if tokens:
        return parse_sequence(text, "tokens")
    # FASTA-style: drop header lines, concatenate the rest
    body = "".join(
        line.strip() for line in text.splitlines() if not line.startswith(">")
    )
    return parse_sequence(body, "raw")


def decomposition_doc(seq: Sequence, dec: SrsDecomposition) -> dict:
    return {
        "blocks": [
            {
                "root": [seq.tokens[a] for a in b.root],
                "exponent": b.exponent,
                "copies": [list(c) for c in b.copies],
            }
            for b in dec.blocks
        ],
        "total_length": dec.total_length,
        "display": dec.render(seq),
    }


def _checked_witness_doc(
    seq: Sequence,
    dec: SrsDecomposition | None,
    cover=frozenset(),
    expect_length: int | None = None,
):
    """Witnesses are re-validated before printing; a failure is internal."""
    if dec is None:
        return None
    problems = validate_srs(seq, dec, cover)
    if problems:
        raise _InternalError("witness validation failed: " + "; ".join(problems))
    if expect_length is not None and dec.total_length != expect_length:
        raise _InternalError(
            f"witness length {dec.total_length} != reported length {expect_length}"
        )
    return decomposition_doc(seq, dec)


class _InternalError(Exception):
    pass


def cmd_analyze(args) -> int:
    seq = read_sequence(args.input, args.tokens)
    if seq.n > args.max_n:
        print(
            f"sequence length {seq.n} exceeds --max-n {args.max_n}",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    index = OccurrenceIndex.from_sequence(seq)
    timing = {}
    t0 = time.perf_counter()
    q2 = square_table(seq, args.threads)
    timing["square"] = round((time.perf_counter() - t0) * 1000.0, 3)
    t0 = time.perf_counter()
    q3 = cube_table(seq, args.threads)
    timing["cube"] = round((time.perf_counter() - t0) * 1000.0, 3)

    n = seq.n
    sq_len = q2.get(1, n) if n else 0
    cu_len = q3.get(1, n) if n else 0
    report = {
        "input": {
            "n": n,
            "alphabet": seq.alphabet_size,
            "max_occurrence": index.max_occurrence,
        },
        "square": {
            "length": sq_len,
            "witness": _checked_witness_doc(
                seq, square_witness(seq, 1, n) if sq_len else None, expect_length=sq_len
            ),
        },
        "cube": {
            "length": cu_len,
            "witness": _checked_witness_doc(
                seq, cube_witness(seq, 1, n) if cu_len else None, expect_length=cu_len
            ),
        },
    }
    t0 = time.perf_counter()
    result = lsrs(seq, threads=args.threads, q2=q2, q3=q3)
    timing["lsrs"] = round((time.perf_counter() - t0) * 1000.0, 3)
    report["lsrs"] = {
        "length": result.length,
        "decomposition": _checked_witness_doc(
            seq, result.decomposition, expect_length=result.length
        ),
    }
    if index.max_occurrence <= 3:
        t0 = time.perf_counter()
        plus = lsrs_plus3(seq, q2=q2, threads=args.threads)
        timing["lsrs_plus3"] = round((time.perf_counter() - t0) * 1000.0, 3)
        cover = frozenset(range(seq.alphabet_size)) if plus.feasible else frozenset()
        report["lsrs_plus3"] = {
            "feasible": plus.feasible,
            "length": plus.length,
            "decomposition": _checked_witness_doc(
                seq,
                plus.decomposition,
                cover,
                expect_length=plus.length if plus.feasible else None,
            ),
        }
    report["timing_ms"] = timing
    _emit(args, report)
    return EXIT_OK


def cmd_tables(args) -> int:
    seq = read_sequence(args.input, args.tokens)
    if seq.n > args.max_n:
        print(
            f"sequence length {seq.n} exceeds --max-n {args.max_n}",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    table = (square_table if args.which == "q2" else cube_table)(seq, args.threads)
    if args.format == "csv":
        lines = []
        for i in range(1, seq.n + 1):
            row = [""] * (i - 1) + [str(v) for v in table.rows[i - 1]]
            lines.append(",".join(row))
        _emit_text(args, "\n".join(lines) + "\n")
    else:
        _emit(args, {"which": args.which, "n": seq.n, "rows": table.rows})
    return EXIT_OK


def cmd_oracle(args) -> int:
    seq = read_sequence(args.input, args.tokens)
    if args.kind == "q2":
        table = oracle_square_table(seq)
        value = table.get(1, seq.n) if seq.n else 0
    elif args.kind == "q3":
        table = oracle_cube_table(seq)
        value = table.get(1, seq.n) if seq.n else 0
    elif args.kind == "lsrs":
        value = oracle_lsrs(seq)
    else:
        got = oracle_lsrs_plus(seq)
        value = "infeasible" if got is None else got
    _emit(args, {"kind": args.kind, "value": value})
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read_text(args.input)
    graph = None
    if args.source == "coloring":
        graph = parse_graph(text)
        sat = coloring_to_sat(graph)
    else:
        sat = sat_from_json_doc(json.loads(text))

    if args.target == "sat":
        if args.format == "dimacs":
            _emit_text(args, to_dimacs(sat))
        else:
            _emit(args, sat_to_json_doc(sat))
        return EXIT_OK

    instance = sat_to_string(sat)
    problems = check_reduction_invariants(instance)
    if problems:
        raise _InternalError("; ".join(problems))
    if args.format == "tokens":
        _emit_text(args, instance.seq.render(" ") + "\n")
        return EXIT_OK
    doc = {
        "tokens": instance.seq.render(" "),
        "length": instance.seq.n,
        "alphabet": instance.seq.alphabet_size,
        "plus_clauses": instance.num_plus,
        "neg_clauses": instance.num_neg,
        "legend": instance.legend,
    }
    if args.witness:
        if graph is None:
            print("--witness requires --from coloring", file=sys.stderr)
            return EXIT_INPUT
        colors = [int(tok) for tok in _read_text(args.witness).split()]
        assignment = assignment_from_coloring(graph, sat, colors)
        if not assignment.valid:
            print("coloring does not induce a valid assignment", file=sys.stderr)
            return EXIT_INPUT
        dec = extract_witness(sat, assignment, instance)
        doc["witness"] = _checked_witness_doc(
            instance.seq, dec, frozenset(range(instance.seq.alphabet_size))
        )
        doc["witness"]["validation"] = "ok"
    _emit(args, doc)
    return EXIT_OK


def _bench_input(alg: str, n: int, seed: int) -> Sequence:
    """Deterministic benchmark input; bound-3 algorithms get a bound-3 string."""
    rng = random.Random(f"{seed}:{alg}:{n}")
    if alg == "plus3":
        parts = split_exponent(n) if n >= 2 else [n] * (n > 0)
        tokens = [f"x{i}" for i, part in enumerate(parts) for _ in range(part)]
        rng.shuffle(tokens)
        return sequence_from_tokens(tokens)
    return sequence_from_tokens([rng.choice("abcd") for _ in range(n)])


def _bench_once(alg: str, seq: Sequence, threads: int) -> None:
    if alg == "q2":
        square_table(seq, threads)
    elif alg == "q3":
        cube_table(seq, threads)
    elif alg == "lsrs":
        lsrs(seq, threads=threads)
    else:
        lsrs_plus3(seq, threads=threads)


def fitted_slope(points: list[tuple[int, float]]) -> float:
    """Least-squares slope of log(time) against log(size)."""
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(t, 1e-9)) for _, t in points]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    num = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    den = sum((x - mean_x) ** 2 for x in xs)
    return num / den


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    if len(sizes) < 2:
        print("need at least two sizes", file=sys.stderr)
        return EXIT_INPUT
    rows = []
    points = []
    for n in sizes:
        seq = _bench_input(args.alg, n, args.seed)
        reps = args.reps if args.reps else (5 if n <= 16 else 1)
        best = math.inf
        for _ in range(reps):
            t0 = time.perf_counter()
            _bench_once(args.alg, seq, args.threads)
            best = min(best, time.perf_counter() - t0)
        rows.append({"n": n, "seconds": round(best, 6)})
        points.append((n, best))
    _emit(args, {"alg": args.alg, "seed": args.seed, "rows": rows, "slope": round(fitted_slope(points), 3)})
    return EXIT_OK


def _emit(args, doc) -> None:
    _emit_text(args, json.dumps(doc, indent=2) + "\n")


def _emit_text(args, text: str) -> None:
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subseqrep",
        description="Square, cubic and repeat-subsequence analysis of sequences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_guard=True):
        p.add_argument("input", nargs="?", help="input file, or - for stdin")
        p.add_argument("--tokens", action="store_true", help="whitespace-token input")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("-o", "--output", help="write the report to a file")
        if with_guard:
            p.add_argument(
                "--max-n",
                type=int,
                default=64,
                help="refuse longer inputs (the cube stage is O(n^6))",
            )

    p = sub.add_parser("analyze", help="run every solver on one sequence")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tables", help="dump an interval table")
    add_common(p)
    p.add_argument("--which", choices=("q2", "q3"), required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("oracle", help="brute-force reference value")
    add_common(p, with_guard=False)
    p.add_argument("--kind", choices=("q2", "q3", "lsrs", "lsrs-plus"), required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce", help="generate hardness instances")
    p.add_argument("input", nargs="?", help="graph or SAT document file, - for stdin")
    p.add_argument("--from", dest="source", choices=("coloring", "sat"), required=True)
    p.add_argument("--to", dest="target", choices=("sat", "string"), required=True)
    p.add_argument("--format", choices=("json", "dimacs", "tokens"), default="json")
    p.add_argument("--witness", help="coloring file: extract and validate a repeat witness")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="timing and fitted log-log slope")
    p.add_argument("--alg", choices=("q2", "q3", "lsrs", "plus3"), required=True)
    p.add_argument("--sizes", required=True, help="comma-separated lengths")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=0, help="0 = pick automatically")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SequenceParseError, GraphFormatError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceededError, OccurrenceBoundError, InstanceSizeError) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (_InternalError, AssertionError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
