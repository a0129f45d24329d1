"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from pathlib import Path

from .aligner import exact_regime
from .batch import METHODS, aligner_for, resolve_threads, run_batch, write_reports
from .classify import AlignmentError, score_alignment
from .criteria import CriteriaReport, compute_criteria
from .fasta import DuplicateId, ParseError, format_alignment, read_alignment, read_fasta
from .model import (GAP_MODELS, AlignParams, CdsError, MatrixFormatError, format_deci,
                    load_matrix, to_deci, validate_cds)

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def score(text):
    return to_deci(text)


def _add_params(p):
    g = p.add_argument_group("scoring")
    g.add_argument("--fs-open", type=score, default=to_deci(-30))
    g.add_argument("--fs-extend", type=score, default=to_deci(-1))
    g.add_argument("--gap-open", type=score, default=to_deci(-11))
    g.add_argument("--gap-cost", type=score, default=to_deci(-1))
    g.add_argument("--nt-match", type=score, default=to_deci(1))
    g.add_argument("--nt-mismatch", type=score, default=to_deci(-1))
    g.add_argument("--matrix", default="blosum62", help="blosum62 or a matrix file")
    g.add_argument("--gap-model", choices=GAP_MODELS, default="affine")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fsealign",
                     description="CDS alignment with frameshift-aware scoring")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("align", help="align two CDS")
    p.add_argument("fasta", nargs="+", help="one file with two records, or two files")
    p.add_argument("--ids", nargs=2, metavar=("A", "B"), help="record ids to align")
    p.add_argument("--method", choices=METHODS, default="fse")
    p.add_argument("--out", help="write the aligned pair here instead of stdout")
    _add_params(p)

    p = sub.add_parser("score", help="score a given alignment")
    p.add_argument("--aln", required=True, help="two-record aligned FASTA")
    _add_params(p)

    p = sub.add_parser("criteria", help="composition criteria of an alignment")
    p.add_argument("--aln", required=True, help="two-record aligned FASTA")

    p = sub.add_parser("batch", help="all pairs of a family")
    p.add_argument("fasta")
    p.add_argument("--method", choices=METHODS, default="fse")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--pairs-fasta", action="store_true",
                   help="also write every aligned pair")
    p.add_argument("--no-figure", action="store_true")
    _add_params(p)

    p = sub.add_parser("verify", help="check the aligner against exhaustive search")
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--max-len", type=int, default=9,
                   help="longest sequence in nucleotides (at most 9)")
    p.add_argument("--seed", type=int, default=0)
    _add_params(p)
    return parser


def params_from(args) -> AlignParams:
    try:
        matrix = load_matrix(args.matrix)
    except OSError as err:
        raise CdsError(f"cannot read matrix: {err}") from None
    try:
        return AlignParams(args.fs_open, args.fs_extend, args.gap_open, args.gap_cost,
                           args.nt_match, args.nt_mismatch, matrix, args.gap_model)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _pick_pair(args):
    if len(args.fasta) > 2:
        raise UsageError("align takes one or two FASTA files")
    if len(args.fasta) == 2:
        recs = [read_fasta(path) for path in args.fasta]
        if args.ids:
            wanted = []
            for want, pool in zip(args.ids, recs):
                match = [r for r in pool if r.id == want]
                if not match:
                    raise CdsError(f"no record {want!r}")
                wanted.append(match[0])
            return wanted
        if not recs[0] or not recs[1]:
            raise CdsError("empty FASTA file")
        return recs[0][0], recs[1][0]
    recs = read_fasta(args.fasta[0])
    if args.ids:
        by_id = {r.id: r for r in recs}
        missing = [x for x in args.ids if x not in by_id]
        if missing:
            raise CdsError(f"no record {missing[0]!r}")
        return by_id[args.ids[0]], by_id[args.ids[1]]
    if len(recs) != 2:
        raise CdsError(f"expected 2 records, found {len(recs)}; use --ids")
    return recs


def _criteria_block(report: CriteriaReport) -> str:
    return ("\t".join(CriteriaReport.header()) + "\n"
            + "\t".join(map(str, report.values())) + "\n")


def cmd_align(args, out):
    params = params_from(args)
    ra, rb = _pick_pair(args)
    a, b = validate_cds(ra.sequence), validate_cds(rb.sequence)
    res = aligner_for(args.method, params)(a, b)
    text = format_alignment(res.alignment, ra.id, rb.id)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    out.write(f"score\t{format_deci(res.score)}\n")
    out.write(_criteria_block(compute_criteria(res.alignment, res.partition)))
    return EXIT_OK


def cmd_score(args, out):
    params = params_from(args)
    _, aln = read_alignment(args.aln)
    out.write(format_deci(score_alignment(aln, params)) + "\n")
    return EXIT_OK


def cmd_criteria(args, out):
    _, aln = read_alignment(args.aln)
    out.write(_criteria_block(compute_criteria(aln)))
    return EXIT_OK


def cmd_batch(args, out):
    params = params_from(args)
    try:
        threads = resolve_threads(args.threads)
    except ValueError as err:
        raise UsageError(str(err)) from None
    records = read_fasta(args.fasta)
    pair_dir = Path(args.out) / "pairs" if args.pairs_fasta else None
    try:
        result = run_batch(records, params, args.method, threads, pair_dir)
    except ValueError as err:
        raise CdsError(str(err)) from None
    paths = write_reports(result, args.out, figure=not args.no_figure)
    for kind, path in paths.items():
        out.write(f"{kind}\t{path}\n")
    return EXIT_OK


def cmd_verify(args, out):
    from .aligner import align
    from .oracle import brute_max_score

    params = params_from(args)
    if not 3 <= args.max_len <= 9 or args.pairs < 1:
        raise UsageError("--max-len must be within 3..9 and --pairs positive")
    if not exact_regime(params):
        logging.warning("frameshift initiation is cheap relative to matches; "
                        "mismatches against exhaustive search are possible")
    rng = random.Random(args.seed)
    codons = args.max_len // 3
    failures = 0
    for _ in range(args.pairs):
        a, b = (validate_cds("".join(rng.choice("ACGT")
                                     for _ in range(3 * rng.randint(1, codons))))
                for _ in range(2))
        got = align(a, b, params).score
        want = brute_max_score(a, b, params)
        if got != want:
            failures += 1
            out.write(f"MISMATCH\t{a}\t{b}\taligner {format_deci(got)}\t"
                      f"exhaustive {format_deci(want)}\n")
    out.write(f"checked {args.pairs} pairs, {failures} mismatches\n")
    return EXIT_VERIFY if failures else EXIT_OK


COMMANDS = {"align": cmd_align, "score": cmd_score, "criteria": cmd_criteria,
            "batch": cmd_batch, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    except (CdsError, AlignmentError, ParseError, DuplicateId, MatrixFormatError,
            OSError) as err:
        print(f"fsealign: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
