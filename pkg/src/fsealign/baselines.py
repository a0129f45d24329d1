"""Needleman-Wunsch baselines with affine gaps (Gotoh), at nucleotide level
and at amino-acid level with back-translation to codon columns.

Scores are deci-units like everywhere else.  A gap run of length ``k`` costs
``gap_open_cost + k * gap_cost``.  The returned ``AlignResult.score`` is the
baseline's own objective; the partition comes from the codon classifier so
that the composition criteria can be compared across methods.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .aligner import AlignResult
from .classify import PairwiseAlignment, classify_codons
from .model import BLOSUM62, GAP, NEG_INF, SCALE, Cds, to_deci, translate

NUCLEOTIDE = "nucleotide"
AMINO_ACID = "amino_acid"


@dataclass(frozen=True)
class NwParams:
    level: str = NUCLEOTIDE
    match: int = 20
    mismatch: int = -30
    matrix: Mapping[str, Mapping[str, int]] = field(default=BLOSUM62, repr=False)
    gap_open_cost: int = -50
    gap_cost: int = -20

    def __post_init__(self):
        if self.level not in (NUCLEOTIDE, AMINO_ACID):
            raise ValueError(f"unknown level {self.level!r}")
        if self.gap_open_cost > 0 or self.gap_cost > 0:
            raise ValueError("gap costs must be <= 0")

    @classmethod
    def nucleotide(cls, match=2, mismatch=-3, gap_open=-5, gap=-2):
        return cls(NUCLEOTIDE, to_deci(match), to_deci(mismatch), BLOSUM62,
                   to_deci(gap_open), to_deci(gap))

    @classmethod
    def amino_acid(cls, matrix=BLOSUM62, gap_open=-11, gap=-1):
        return cls(AMINO_ACID, 0, 0, matrix, to_deci(gap_open), to_deci(gap))


# states: 0 = residue pair, 1 = x against a gap, 2 = gap against y
def gotoh(x: str, y: str, score: Callable[[str, str], int], gap_open: int,
          gap: int) -> tuple[int, list[tuple[int, int]], int]:
    """Global affine alignment of ``x`` and ``y``.

    Returns the score, the columns as 1-based index pairs (0 for a gap) and
    the number of state evaluations.  Ties prefer pair, then x-gap, then
    y-gap, both when filling and when choosing the final state.
    """
    n, m = len(x), len(y)
    oe = gap_open + gap
    M = [[NEG_INF] * (m + 1) for _ in range(n + 1)]
    X = [[NEG_INF] * (m + 1) for _ in range(n + 1)]
    Y = [[NEG_INF] * (m + 1) for _ in range(n + 1)]
    # back pointers: previous state for each state table
    PM = [[0] * (m + 1) for _ in range(n + 1)]
    PX = [[0] * (m + 1) for _ in range(n + 1)]
    PY = [[0] * (m + 1) for _ in range(n + 1)]
    M[0][0] = 0
    for i in range(1, n + 1):
        X[i][0] = gap_open + i * gap
        PX[i][0] = 1 if i > 1 else 0
    for j in range(1, m + 1):
        Y[0][j] = gap_open + j * gap
        PY[0][j] = 2 if j > 1 else 0

    def pick(a, b, c):
        if a >= b and a >= c:
            return a, 0
        if b >= c:
            return b, 1
        return c, 2

    for i in range(1, n + 1):
        xi = x[i - 1]
        Mi, Xi, Yi, Mp, Xp, Yp = M[i], X[i], Y[i], M[i - 1], X[i - 1], Y[i - 1]
        for j in range(1, m + 1):
            best, PM[i][j] = pick(Mp[j - 1], Xp[j - 1], Yp[j - 1])
            Mi[j] = best + score(xi, y[j - 1]) if best > NEG_INF // 2 else NEG_INF
            best, PX[i][j] = pick(Mp[j] + oe, Xp[j] + gap, Yp[j] + oe)
            Xi[j] = best if best > NEG_INF // 2 else NEG_INF
            best, PY[i][j] = pick(Mi[j - 1] + oe, Xi[j - 1] + oe, Yi[j - 1] + gap)
            Yi[j] = best if best > NEG_INF // 2 else NEG_INF
    total, state = pick(M[n][m], X[n][m], Y[n][m])

    cols = []
    i, j = n, m
    while i or j:
        if state == 0:
            cols.append((i, j))
            state = PM[i][j]
            i, j = i - 1, j - 1
        elif state == 1:
            cols.append((i, 0))
            state = PX[i][j]
            i -= 1
        else:
            cols.append((0, j))
            state = PY[i][j]
            j -= 1
    cols.reverse()
    return total, cols, 3 * n * m


def _result(row_a: str, row_b: str, score: int, count: int) -> AlignResult:
    aln = PairwiseAlignment(row_a, row_b)
    return AlignResult(aln, score, classify_codons(aln), count)


def needle_nt(a: Cds, b: Cds, p: NwParams | None = None) -> AlignResult:
    p = p or NwParams.nucleotide()
    x, y = a.bases, b.bases
    score, cols, count = gotoh(
        x, y, lambda u, v: p.match if u == v else p.mismatch,
        p.gap_open_cost, p.gap_cost)
    row_a = "".join(x[i - 1] if i else GAP for i, _ in cols)
    row_b = "".join(y[j - 1] if j else GAP for _, j in cols)
    return _result(row_a, row_b, score, count)


def needle_aa(a: Cds, b: Cds, p: NwParams | None = None) -> AlignResult:
    """Protein alignment expanded back to whole-codon columns."""
    p = p or NwParams.amino_acid()
    matrix = p.matrix
    score, cols, count = gotoh(
        translate(a), translate(b), lambda u, v: matrix[u][v] * SCALE,
        p.gap_open_cost, p.gap_cost)
    ca, cb = a.codons, b.codons
    row_a = "".join(ca[i - 1] if i else GAP * 3 for i, _ in cols)
    row_b = "".join(cb[j - 1] if j else GAP * 3 for _, j in cols)
    return _result(row_a, row_b, score, count)
