"""Composition criteria of a CDS alignment and partner agreement."""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields

from .classify import CodonPartition, PairwiseAlignment, classify_codons
from .model import GAP, translate_codon


class SequenceMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CriteriaReport:
    identity_nt: int
    identity_aa: int
    gap_init: int
    gap_length: int
    fs_init: int
    fs_length: int

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def values(self) -> tuple[int, ...]:
        return astuple(self)


def _gap_runs(aln: PairwiseAlignment) -> tuple[int, int]:
    """(runs, columns) of gap-containing columns; a run also ends where the
    gap moves to the other row."""
    runs = length = 0
    prev = None
    for x, y in zip(aln.row_a, aln.row_b):
        kind = "a" if x == GAP else "b" if y == GAP else None
        if kind:
            length += 1
            if kind != prev:
                runs += 1
        prev = kind
    return runs, length


def _same_aa_codons(aln: PairwiseAlignment, part: CodonPartition) -> int:
    a, b = aln.row_a, aln.row_b
    same = lambda k, x, y: translate_codon(x[k - 3:k]) == translate_codon(y[k - 3:k])
    count = sum(same(k, a, b) for k in part.a.im)
    count += sum(same(k, a, b) for k in part.a.fsext)
    count += sum(same(k, b, a) for k in part.b.fsext)
    return count


def _fs_columns(part: CodonPartition) -> tuple[set[int], set[int]]:
    """Columns touched by FSext codons, and columns of frameshift segments."""
    ext, segment = set(), set()
    for side in (part.a, part.b):
        for k in side.fsext:
            ext.update(range(k - 2, k + 1))
        for k in side.fsinit:
            first, last = side.spans[k]
            if any(first <= c <= last for c in side.mfs):
                segment.update(range(first, last + 1))
    return ext, segment | ext


def _runs(columns: set[int]) -> int:
    return sum(1 for c in columns if c - 1 not in columns)


def compute_criteria(aln: PairwiseAlignment,
                     partition: CodonPartition | None = None) -> CriteriaReport:
    """The six composition counts of an alignment.

    A frameshift segment is a maximal run of columns that either touch an
    FSext codon or fall within the span of an FSinit codon holding at least
    one nucleotide aligned against a nucleotide.
    """
    part = partition or classify_codons(aln)
    identity_nt = sum(1 for x, y in zip(aln.row_a, aln.row_b) if x == y)
    gap_init, gap_length = _gap_runs(aln)
    ext, segment = _fs_columns(part)
    return CriteriaReport(identity_nt, _same_aa_codons(aln, part), gap_init,
                          gap_length, _runs(segment), len(ext))


def _partners(row: str, other: str) -> list[int]:
    out = []
    j = 0
    for x, y in zip(row, other):
        if y != GAP:
            j += 1
        if x != GAP:
            out.append(j if y != GAP else 0)
    return out


def partner_agreement(test: PairwiseAlignment,
                      benchmark: PairwiseAlignment) -> tuple[int, int]:
    """Nucleotides of both sequences paired with the same partner (or with a
    gap) in ``test`` as in ``benchmark``; returns ``(agree, n + m)``."""
    if test.seq_a != benchmark.seq_a or test.seq_b != benchmark.seq_b:
        raise SequenceMismatch("alignments are over different sequences")
    agree = total = 0
    for t, bench in ((_partners(test.row_a, test.row_b),
                      _partners(benchmark.row_a, benchmark.row_b)),
                     (_partners(test.row_b, test.row_a),
                      _partners(benchmark.row_b, benchmark.row_a))):
        total += len(t)
        agree += sum(1 for x, y in zip(t, bench) if x == y)
    return agree, total
