"""Codon classification of a CDS alignment and its exact score.

Every codon of each sequence falls into exactly one of four classes:

* ``IM``     grouped and aligned with a whole codon of the other sequence;
* ``FSext``  grouped and aligned with three nucleotides straddling two codons;
* ``InDel``  grouped and aligned with three gaps;
* ``FSinit`` everything else.

A codon is *grouped* when its three nucleotides occupy three consecutive
columns.  Codons are keyed by the (1-based) column of their last nucleotide.
Nucleotides of FSinit codons that face a nucleotide are the MFS set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import GAP, NUCLEOTIDES, AlignParams, Cds, halve

IM = "IM"
FSEXT = "FSext"
INDEL = "InDel"
FSINIT = "FSinit"


class AlignmentError(ValueError):
    pass


@dataclass(frozen=True)
class PairwiseAlignment:
    row_a: str
    row_b: str

    def __post_init__(self):
        if len(self.row_a) != len(self.row_b):
            raise AlignmentError("rows differ in length")
        for col, (x, y) in enumerate(zip(self.row_a, self.row_b), 1):
            if x == GAP and y == GAP:
                raise AlignmentError(f"column {col} holds two gaps")
            if x not in NUCLEOTIDES and x != GAP or y not in NUCLEOTIDES and y != GAP:
                raise AlignmentError(f"column {col} has an invalid symbol")
        for row in (self.row_a, self.row_b):
            n = len(row) - row.count(GAP)
            if n == 0 or n % 3:
                raise AlignmentError("ungapped row is not a CDS")

    def __len__(self):
        return len(self.row_a)

    @property
    def seq_a(self) -> str:
        return self.row_a.replace(GAP, "")

    @property
    def seq_b(self) -> str:
        return self.row_b.replace(GAP, "")

    def swap(self) -> "PairwiseAlignment":
        return PairwiseAlignment(self.row_b, self.row_a)

    @classmethod
    def identity(cls, cds: Cds) -> "PairwiseAlignment":
        return cls(cds.bases, cds.bases)


@dataclass(frozen=True)
class SidePartition:
    """Codon classes of one sequence, as sets of alignment columns."""

    im: frozenset
    fsext: frozenset
    indel: frozenset
    fsinit: frozenset
    mfs: frozenset
    # (first column, last column) of every codon, keyed by last column
    spans: dict

    def classes(self) -> dict[int, str]:
        out = {}
        for name, cols in ((IM, self.im), (FSEXT, self.fsext),
                           (INDEL, self.indel), (FSINIT, self.fsinit)):
            out.update(dict.fromkeys(cols, name))
        return dict(sorted(out.items()))


@dataclass(frozen=True)
class CodonPartition:
    a: SidePartition
    b: SidePartition


def _positions(row: str) -> tuple[list[int], list[int]]:
    """Columns of each residue (0-based) and residue index per column (-1 for gaps)."""
    cols, index = [], []
    for c, sym in enumerate(row):
        if sym == GAP:
            index.append(-1)
        else:
            index.append(len(cols))
            cols.append(c)
    return cols, index


def _classify_side(row: str, other: str) -> SidePartition:
    cols, _ = _positions(row)
    _, other_index = _positions(other)
    im, fsext, indel, fsinit, mfs = set(), set(), set(), set(), set()
    spans = {}
    for k in range(0, len(cols), 3):
        c0, c1, c2 = cols[k:k + 3]
        key = c2 + 1
        spans[key] = (c0 + 1, key)
        opposite = [other_index[c] for c in (c0, c1, c2)]
        if c2 - c0 == 2:
            if all(p < 0 for p in opposite):
                indel.add(key)
                continue
            if all(p >= 0 for p in opposite):
                if opposite[0] % 3 == 0:
                    im.add(key)
                else:
                    fsext.add(key)
                continue
        fsinit.add(key)
        mfs.update(c + 1 for c in cols[k:k + 3] if other[c] != GAP)
    return SidePartition(frozenset(im), frozenset(fsext), frozenset(indel),
                         frozenset(fsinit), frozenset(mfs), spans)


def classify_codons(aln: PairwiseAlignment) -> CodonPartition:
    return CodonPartition(_classify_side(aln.row_a, aln.row_b),
                          _classify_side(aln.row_b, aln.row_a))


def aa_score(triplet_a: str, triplet_b: str, params: AlignParams) -> int:
    """Amino-acid substitution score of two nucleotide triplets (deci-units)."""
    return params.s_aa(triplet_a, triplet_b)


def _indel_runs(side: SidePartition) -> int:
    """Maximal runs of InDel codons occupying contiguous columns."""
    runs = 0
    prev_end = None
    for key in sorted(side.indel):
        start, end = side.spans[key]
        if prev_end is None or start != prev_end + 1:
            runs += 1
        prev_end = end
    return runs


@dataclass(frozen=True)
class ScoreTerms:
    """Score of an alignment split into substitution part and cost counts.

    ``substitution`` already includes the IM, halved FSext and halved MFS
    scores; the counts multiply the four penalty costs.
    """

    substitution: int
    n_fsext: int
    n_indel: int
    n_indel_runs: int
    n_fsinit: int

    def total(self, p: AlignParams) -> int:
        score = (self.substitution + self.n_fsext * p.fs_extend_cost
                 + self.n_indel * p.gap_cost + self.n_fsinit * p.fs_open_cost)
        if p.affine:
            score += self.n_indel_runs * p.gap_open_cost
        return score


def score_terms(aln: PairwiseAlignment, params: AlignParams,
                partition: CodonPartition | None = None) -> ScoreTerms:
    part = partition or classify_codons(aln)
    a, b = aln.row_a, aln.row_b
    subst = sum(params.s_aa(a[k - 3:k], b[k - 3:k]) for k in part.a.im)
    counts = [0, 0, 0, 0]
    for row, other, side in ((a, b, part.a), (b, a, part.b)):
        for k in side.fsext:
            subst += halve(params.s_aa(row[k - 3:k], other[k - 3:k]))
        for k in side.mfs:
            subst += halve(params.s_an(row[k - 1], other[k - 1]))
        counts[0] += len(side.fsext)
        counts[1] += len(side.indel)
        counts[2] += _indel_runs(side)
        counts[3] += len(side.fsinit)
    return ScoreTerms(subst, *counts)


def score_alignment(aln: PairwiseAlignment, params: AlignParams,
                    partition: CodonPartition | None = None) -> int:
    """Exact alignment score in deci-units.

    IM codons are counted once (the IM sets of both sides coincide).
    """
    return score_terms(aln, params, partition).total(params)
