"""Command-line front end: ``lexchoice rank | verify | encode``.

Exit codes: 0 ok, 1 property falsified, 2 parse error, 3 validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .convolution import (DegenerateCriterionError, best_by_convolution, convolve,
                          lex_coefficients, quantize, ration, verify_agreement)
from .core_types import Alternative, DecisionProblem, MalformedInputError, ScaleSpec, validate_problem
from .generate import random_problem
from .lex_relation import check_order_axioms, compare_lex, pareto_kernel, sort_lex
from .lexicon import AlphabetSpec, LexiconError, encode_word, read_word_list

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_PARSE = 2
EXIT_INVALID = 3

RANK_HEADER = ["rank", "id", "convolution", "in_kernel", "degree_vs_next"]


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RationSpec:
    a: Fraction
    q: int


@dataclass(frozen=True)
class RankingRow:
    rank: int
    id: str
    convolution: int
    in_kernel: bool
    degree_vs_next: int | None


# -- input parsing ----------------------------------------------------------

def parse_ration(text: str) -> RationSpec:
    try:
        a, q = text.split(",")
        spec = RationSpec(Fraction(a.strip()), int(q))
    except ValueError as exc:
        raise CliError(f"--ration expects 'a,q', got {text!r}", EXIT_PARSE) from exc
    if spec.a <= 0 or spec.q < 1:
        raise CliError(f"--ration needs a > 0 and q >= 1, got {text!r}", EXIT_PARSE)
    return spec


def load_scales(path, ration_override: RationSpec | None = None
                ) -> tuple[tuple[ScaleSpec, ...], RationSpec | None]:
    """Read a scales JSON file: a list of scales, or ``{"scales": [...], "ration": {a, q}}``."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read scales {path}: {exc}", EXIT_PARSE) from exc

    ration_spec = None
    if isinstance(data, dict):
        if "ration" in data:
            r = data["ration"]
            try:
                ration_spec = RationSpec(Fraction(str(r["a"])), int(r["q"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise CliError(f"scales {path}: bad 'ration' entry {r!r}", EXIT_PARSE) from exc
        data = data.get("scales")
    if ration_override is not None:
        ration_spec = ration_override
    if not isinstance(data, list):
        raise CliError(f"scales {path}: expected a list of scales", EXIT_PARSE)

    scales = []
    for j, entry in enumerate(data, start=1):
        try:
            name = str(entry["name"])
            if ration_spec is not None and "min_rank" not in entry:
                scales.append(ScaleSpec(0, 0, name))
            else:
                scales.append(ScaleSpec(int(entry["min_rank"]), int(entry["max_rank"]), name))
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(f"scales {path}: entry {j} is malformed ({exc})", EXIT_PARSE) from exc
    return tuple(scales), ration_spec


def read_alternatives(path, scales, rational: bool = False) -> list[tuple[str, list]]:
    """Parse the alternatives CSV into (id, cells) pairs.

    Cells are ints, or Fractions when ``rational`` is set.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        return []

    header = [h.strip() for h in rows[0]]
    names = [s.name for s in scales]
    if header[1:] != names:
        raise CliError(
            f"{path}: header criteria {header[1:]} do not match scale names {names}", EXIT_PARSE)

    parse = Fraction if rational else int
    out = []
    for row_no, row in enumerate(rows[1:], start=1):
        if len(row) != len(header):
            raise CliError(f"{path}: row {row_no} has {len(row)} columns, expected {len(header)}",
                           EXIT_PARSE)
        cells = []
        for name, cell in zip(header[1:], row[1:]):
            try:
                cells.append(parse(cell.strip()))
            except (ValueError, ZeroDivisionError):
                raise CliError(f"{path}: row {row_no}, column {name!r}: cannot parse {cell!r}",
                               EXIT_PARSE) from None
        out.append((row[0].strip(), cells))
    return out


def load_problem(input_path, scales_path, ration_override: RationSpec | None = None) -> DecisionProblem:
    scales, ration_spec = load_scales(scales_path, ration_override)
    raw = read_alternatives(input_path, scales, rational=ration_spec is not None)

    if ration_spec is not None and raw:
        cols = list(zip(*(cells for _, cells in raw)))
        ranked_cols = []
        for s, col in zip(scales, cols):
            try:
                ranked_cols.append(quantize(ration(col, ration_spec.a), ration_spec.a, ration_spec.q))
            except (DegenerateCriterionError, MalformedInputError) as exc:
                raise CliError(f"criterion {s.name!r}: {exc}", EXIT_INVALID) from exc
        raw = [(rid, list(vals)) for (rid, _), vals in zip(raw, zip(*ranked_cols))]
    if ration_spec is not None:
        scales = tuple(ScaleSpec(0, ration_spec.q - 1, s.name) for s in scales)

    alts = tuple(Alternative(rid, tuple(vals)) for rid, vals in raw)
    problem = DecisionProblem(alts, scales)
    violations = validate_problem(problem)
    if violations:
        raise CliError("\n".join(str(v) for v in violations), EXIT_INVALID)
    return problem


# -- ranking ----------------------------------------------------------------

def ranking_rows(problem: DecisionProblem) -> list[RankingRow]:
    coeffs = lex_coefficients(problem.scales)
    kernel = {a.id for a in pareto_kernel(problem)}
    ordered = sort_lex(problem)
    values = [convolve(a, coeffs, problem.scales).value for a in ordered]

    rows = []
    rank = 0
    for i, (alt, v) in enumerate(zip(ordered, values)):
        if i == 0 or v != values[i - 1]:
            rank += 1
        degree = None
        if i + 1 < len(ordered):
            degree = compare_lex(alt, ordered[i + 1], problem).degree
        rows.append(RankingRow(rank, alt.id, v, alt.id in kernel, degree))
    return rows


def write_ranking(rows: list[RankingRow], stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(RANK_HEADER)
    for r in rows:
        w.writerow([r.rank, r.id, str(r.convolution), "true" if r.in_kernel else "false",
                    "" if r.degree_vs_next is None else r.degree_vs_next])


def _open_output(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_rank(args) -> int:
    ration_override = parse_ration(args.ration) if args.ration else None
    problem = load_problem(args.input, args.scales, ration_override)
    rows = ranking_rows(problem)
    out, close = _open_output(args.output)
    try:
        write_ranking(rows, out)
    finally:
        if close:
            out.close()
    return EXIT_OK


# -- verification -----------------------------------------------------------

def _parse_weights(text: str | None):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise CliError(f"bad weights {text!r}", EXIT_PARSE) from exc


def check_problem(problem: DecisionProblem, weights=None) -> list[str]:
    """Run every agreement and axiom check; return failure messages."""
    coeffs = None
    if weights is not None:
        coeffs = weights * problem.m if len(weights) == 1 else weights
    failures = []
    agreement = verify_agreement(problem, coeffs)
    if not agreement.agrees:
        a, b = agreement.counterexample
        failures.append(f"convolution disagrees with lexicographic order on "
                        f"{a.id} {list(a.values)} vs {b.id} {list(b.values)}")
    axioms = check_order_axioms(problem)
    for name in ("linked", "strict_asymmetric", "transitive"):
        if not getattr(axioms, name):
            failures.append(f"order axiom '{name}' violated")
    best = {a.id for a in best_by_convolution(problem, coeffs)}
    kernel = {a.id for a in pareto_kernel(problem)}
    if best != kernel:
        failures.append(f"convolution maximum {sorted(best)} != Pareto kernel {sorted(kernel)}")
    return failures


def cmd_verify(args) -> int:
    if args.input is None and args.random is None:
        raise CliError("verify needs --input/--scales or --random N", EXIT_PARSE)
    if (args.input is None) != (args.scales is None):
        raise CliError("--input and --scales must be given together", EXIT_PARSE)
    weights = _parse_weights(args.weights)

    problems = []
    if args.input is not None:
        ration_override = parse_ration(args.ration) if args.ration else None
        problems.append((str(args.input), load_problem(args.input, args.scales, ration_override)))
    if args.random is not None:
        rng = random.Random(args.seed)
        problems.extend((f"random #{t + 1}", random_problem(rng)) for t in range(args.random))

    for label, problem in problems:
        failures = check_problem(problem, weights)
        if failures:
            print(f"FAIL {label}: " + "; ".join(failures))
            return EXIT_FALSIFIED
    print(f"ok: {len(problems)} problem(s) checked, no counterexample")
    return EXIT_OK


# -- lexicon ----------------------------------------------------------------

def cmd_encode(args) -> int:
    try:
        alphabet = AlphabetSpec.load(args.alphabet)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"cannot read alphabet {args.alphabet}: {exc}", EXIT_PARSE) from exc
    try:
        words = read_word_list(args.input)
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read {args.input}: {exc}", EXIT_PARSE) from exc
    try:
        keyed = sorted(((encode_word(w, alphabet).key, w) for w in words), key=lambda t: t[0])
    except LexiconError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc

    out, close = _open_output(args.output)
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["word", "key"])
        for key, word in keyed:
            w.writerow([word, str(key)])
    finally:
        if close:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexchoice",
                                     description="Lexicographic multicriteria choice.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank alternatives best-first")
    p.add_argument("--input", required=True, help="alternatives CSV (id, criteria...)")
    p.add_argument("--scales", required=True, help="scales JSON")
    p.add_argument("--output", help="ranking CSV (default stdout)")
    p.add_argument("--ration", help="'a,q': ration real values onto [0,a] then q ranks")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("verify", help="check convolution/lexicographic agreement")
    p.add_argument("--input", help="alternatives CSV")
    p.add_argument("--scales", help="scales JSON")
    p.add_argument("--ration", help="'a,q' as for rank")
    p.add_argument("--random", type=int, metavar="N", help="also check N random problems")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("encode", help="encode and sort a word list")
    p.add_argument("--input", required=True, help="UTF-8 word list, one per line")
    p.add_argument("--alphabet", required=True, help="alphabet JSON")
    p.add_argument("--output", help="CSV of word,key (default stdout)")
    p.set_defaults(func=cmd_encode)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
