"""Maximum-score CDS alignment with frameshift initiation and extension costs.

Four tables are filled over prefix pairs ``(i, j)``:

``D``
    best score aligning ``A[1..i]`` with ``B[1..j]``.
``DF``
    look-ahead table, only where ``i % 3 == 0`` or ``j % 3 == 0``.  When the
    other index is not a codon end, the cell scores ``A[1..i+k]`` against
    ``B[1..j+k]`` (``k`` the distance to the next codon end) with the ``k``
    trailing nucleotide pairs aligned together and half of their nucleotide
    score withheld; the codon types around them are settled later.
``GA``/``GB``
    (affine gaps only) best score when the last codon of ``A`` (``B``) is a
    whole-codon deletion, giving one opening cost per run of such codons.
``NA``/``NB``
    like ``D`` where ``i`` (``j``) is inside a codon, excluding alignments
    whose open partial codon of ``A`` (``B``) sits in the trailing columns
    against gaps only.  The "codon not grouped, last nucleotide against a gap"
    sub-cases read these, so a fully deleted codon is always charged as a
    deletion and never as a frameshift initiation.

Every sub-case is described once (``_case1``, ``_case2``, ``_case4`` for D,
``_df_two`` and ``_df_one`` for DF; the mirrored cases reuse them through a
view with A and B exchanged) as a score, a predecessor cell and the alignment
columns it appends.  The fill loop and the traceback share those
descriptions.  Ties go to the lowest sub-case number.

The recurrences are exact when frameshift initiation is expensive compared
with nucleotide matches (see :func:`exact_regime`); outside that regime the
returned score is still the exact score of the returned alignment, but a
better alignment may exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .classify import (CodonPartition, PairwiseAlignment, classify_codons,
                       score_alignment)
from .model import AMINO_ACIDS, GAP, NEG_INF, AlignParams, Cds

D, DF, GA, GB, NA, NB = "D", "DF", "GA", "GB", "NA", "NB"
_UNREACHABLE = NEG_INF // 2


class CorruptTrace(RuntimeError):
    pass


def _clamp(value: int) -> int:
    return NEG_INF if value <= _UNREACHABLE else value


@dataclass
class DpTables:
    n: int
    m: int
    D: list
    DF: list
    GA: list | None
    GB: list | None
    NA: list
    NB: list
    # per table: [i][j] -> sub-case number chosen (0 for initialised borders)
    trace: dict
    cell_fill_count: int = 0
    aux_fill_count: int = 0

    def table(self, name):
        return getattr(self, name)


@dataclass
class AlignResult:
    alignment: PairwiseAlignment
    score: int
    partition: CodonPartition
    cell_fill_count: int
    tables: DpTables | None = None


_MIRROR = {GA: GB, GB: GA, NA: NB, NB: NA}


class _View:
    """Table and sequence access, optionally with A and B exchanged.

    Cases 3 (and the mirrored look-ahead cases) are written once in terms of
    a *primary* sequence ``P`` and a *secondary* ``Q``; a mirrored view maps
    ``(x, y)`` to the real cell ``(y, x)``.
    """

    __slots__ = ("p", "P", "Q", "np", "nq", "t", "mirror")

    def __init__(self, tables: DpTables, a: str, b: str, p: AlignParams, mirror: bool):
        self.p = p
        self.t = tables
        self.mirror = mirror
        self.P, self.Q = (b, a) if mirror else (a, b)
        self.np, self.nq = len(self.P), len(self.Q)

    def ref(self, name, x, y):
        if self.mirror:
            return (_MIRROR.get(name, name), y, x)
        return (name, x, y)

    def get(self, name, x, y):
        name, i, j = self.ref(name, x, y)
        return self.t.table(name)[i][j]

    def col(self, x, y):
        return (y, x) if self.mirror else (x, y)

    def san(self, x, y):
        if x > self.np or y > self.nq:
            return NEG_INF
        return self.p.s_an(self.P[x - 1], self.Q[y - 1])

    def h(self, x, y):
        """Half nucleotide score."""
        if x > self.np or y > self.nq:
            return NEG_INF
        return self.p.s_an(self.P[x - 1], self.Q[y - 1]) // 2

    def saa(self, x, y):
        """AA score of ``P[x-2..x]`` against ``Q[y-2..y]``."""
        if x > self.np or y > self.nq:
            return NEG_INF
        return self.p.s_aa(self.P[x - 3:x], self.Q[y - 3:y])


# A case is (number, score, predecessor ref, appended columns); columns are
# (i, j) pairs of residue indices with 0 standing for a gap.


def _case1(v: _View, i, j) -> Iterator[tuple]:
    p = v.p
    fo, g = p.fs_open_cost, p.gap_cost
    get, san, h, c = v.get, v.san, v.h, v.col
    if i >= 3 and j >= 3:
        yield 1, v.saa(i, j) + get(D, i - 3, j - 3), v.ref(D, i - 3, j - 3), \
            (c(i - 2, j - 2), c(i - 1, j - 1), c(i, j))
    if i >= 3 and j >= 2:
        yield 2, san(i, j) + san(i - 1, j - 1) + get(D, i - 3, j - 2) + 2 * fo, \
            v.ref(D, i - 3, j - 2), (c(i - 2, 0), c(i - 1, j - 1), c(i, j))
        yield 3, san(i, j) + san(i - 2, j - 1) + get(D, i - 3, j - 2) + 2 * fo, \
            v.ref(D, i - 3, j - 2), (c(i - 2, j - 1), c(i - 1, 0), c(i, j))
    if i >= 3 and j >= 1:
        yield 4, san(i, j) + get(D, i - 3, j - 1) + 2 * fo, v.ref(D, i - 3, j - 1), \
            (c(i - 2, 0), c(i - 1, 0), c(i, j))
    if i >= 2 and j >= 3:
        yield 5, san(i, j) + san(i - 1, j - 1) + get(D, i - 2, j - 3) + 2 * fo, \
            v.ref(D, i - 2, j - 3), (c(0, j - 2), c(i - 1, j - 1), c(i, j))
        yield 6, san(i, j) + san(i - 1, j - 2) + get(D, i - 2, j - 3) + 2 * fo, \
            v.ref(D, i - 2, j - 3), (c(i - 1, j - 2), c(0, j - 1), c(i, j))
    if i >= 1 and j >= 3:
        yield 7, san(i, j) + get(D, i - 1, j - 3) + 2 * fo, v.ref(D, i - 1, j - 3), \
            (c(0, j - 2), c(0, j - 1), c(i, j))
    if i >= 1 and j >= 1:
        yield 8, san(i, j) + get(D, i - 1, j - 1) + 2 * fo, v.ref(D, i - 1, j - 1), \
            (c(i, j),)
    if i >= 3 and j >= 2:
        yield 9, h(i - 1, j) + h(i - 2, j - 1) + get(DF, i - 3, j - 2) + fo, \
            v.ref(DF, i - 3, j - 2), (c(i, 0),)
    if i >= 3 and j >= 1:
        yield 10, san(i - 1, j) + get(D, i - 3, j - 1) + 2 * fo, \
            v.ref(D, i - 3, j - 1), (c(i - 2, 0), c(i - 1, j), c(i, 0))
        yield 11, h(i - 2, j) + get(DF, i - 3, j - 1) + fo, \
            v.ref(DF, i - 3, j - 1), (c(i - 1, 0), c(i, 0))
    if i >= 3:
        yield from _whole_codon_gap(v, 12, i, j, primary=True)
    if i >= 1:
        yield 13, get(NA, i - 1, j) + fo, v.ref(NA, i - 1, j), (c(i, 0),)
    if i >= 2 and j >= 3:
        yield 14, h(i, j - 1) + h(i - 1, j - 2) + get(DF, i - 2, j - 3) + fo, \
            v.ref(DF, i - 2, j - 3), (c(0, j),)
    if i >= 1 and j >= 3:
        yield 15, san(i, j - 1) + get(D, i - 1, j - 3) + 2 * fo, \
            v.ref(D, i - 1, j - 3), (c(0, j - 2), c(i, j - 1), c(0, j))
        yield 16, h(i, j - 2) + get(DF, i - 1, j - 3) + fo, \
            v.ref(DF, i - 1, j - 3), (c(0, j - 1), c(0, j))
    if j >= 3:
        yield from _whole_codon_gap(v, 17, i, j, primary=False)
    if j >= 1:
        yield 18, get(NB, i, j - 1) + fo, v.ref(NB, i, j - 1), (c(0, j),)


def _whole_codon_gap(v: _View, number, i, j, primary):
    """Whole-codon deletion ending at ``(i, j)``, linear or via GA/GB."""
    g = v.p.gap_cost
    if primary:
        if v.p.affine:
            yield number, v.get(GA, i, j), v.ref(GA, i, j), ()
        else:
            yield number, g + v.get(D, i - 3, j), v.ref(D, i - 3, j), \
                (v.col(i - 2, 0), v.col(i - 1, 0), v.col(i, 0))
    else:
        if v.p.affine:
            yield number, v.get(GB, i, j), v.ref(GB, i, j), ()
        else:
            yield number, g + v.get(D, i, j - 3), v.ref(D, i, j - 3), \
                (v.col(0, j - 2), v.col(0, j - 1), v.col(0, j))


def _lookahead(y):
    """Trailing aligned pairs covered by a DF cell whose other index is ``y``."""
    return (3 - y % 3) % 3


def _case2(v: _View, i, j) -> Iterator[tuple]:
    """``i`` ends a codon of the primary sequence, ``j`` does not."""
    p = v.p
    fo = p.fs_open_cost
    get, san, h, c = v.get, v.san, v.h, v.col
    prev_end = (j - 1) % 3 == 0
    if i >= 3 and j >= 3:
        # the DF cell already holds the first 3 - k pairs of the codon
        covered = _lookahead(j - 3)
        cols = ((i - 2, j - 2), (i - 1, j - 1), (i, j))[covered:]
        score = v.saa(i, j) // 2 + get(DF, i - 3, j - 3) + p.fs_extend_cost + h(i, j)
        if not prev_end:
            score += h(i - 1, j - 1)
        yield 1, score, v.ref(DF, i - 3, j - 3), tuple(c(x, y) for x, y in cols)
    if i >= 3 and j >= 2:
        score = san(i, j) + san(i - 1, j - 1) + get(D, i - 3, j - 2) + fo
        if prev_end:
            score += fo
        yield 2, score, v.ref(D, i - 3, j - 2), (c(i - 2, 0), c(i - 1, j - 1), c(i, j))
        score = san(i, j) + san(i - 2, j - 1) + get(DF, i - 3, j - 2) + fo
        if prev_end:
            score -= h(i - 2, j - 1)
        cols = ((i - 2, j - 1), (i - 1, 0), (i, j))[_lookahead(j - 2):]
        yield 3, score, v.ref(DF, i - 3, j - 2), tuple(c(x, y) for x, y in cols)
    if i >= 3 and j >= 1:
        yield 4, san(i, j) + get(D, i - 3, j - 1) + fo, v.ref(D, i - 3, j - 1), \
            (c(i - 2, 0), c(i - 1, 0), c(i, j))
    if i >= 1 and j >= 1:
        yield 5, san(i, j) + get(D, i - 1, j - 1) + fo, v.ref(D, i - 1, j - 1), \
            (c(i, j),)
    if i >= 3 and j >= 2:
        score = san(i - 1, j) + san(i - 2, j - 1) + get(DF, i - 3, j - 2) + fo
        if prev_end:
            score -= h(i - 2, j - 1)
        cols = ((i - 2, j - 1), (i - 1, j), (i, 0))[_lookahead(j - 2):]
        yield 6, score, v.ref(DF, i - 3, j - 2), tuple(c(x, y) for x, y in cols)
    if i >= 3 and j >= 1:
        yield 7, san(i - 1, j) + get(D, i - 3, j - 1) + fo, v.ref(D, i - 3, j - 1), \
            (c(i - 2, 0), c(i - 1, j), c(i, 0))
        yield 8, san(i - 2, j) + get(D, i - 3, j - 1) + fo, v.ref(D, i - 3, j - 1), \
            (c(i - 2, j), c(i - 1, 0), c(i, 0))
    if i >= 3:
        yield from _whole_codon_gap(v, 9, i, j, primary=True)
    if i >= 1:
        yield 10, get(NA, i - 1, j) + fo, v.ref(NA, i - 1, j), (c(i, 0),)
    if j >= 1:
        yield 11, get(D, i, j - 1), v.ref(D, i, j - 1), (c(0, j),)


def _case4(v: _View, i, j) -> Iterator[tuple]:
    c = v.col
    yield 1, v.san(i, j) + v.get(D, i - 1, j - 1), v.ref(D, i - 1, j - 1), (c(i, j),)
    yield 2, v.get(D, i - 1, j), v.ref(D, i - 1, j), (c(i, 0),)
    yield 3, v.get(D, i, j - 1), v.ref(D, i, j - 1), (c(0, j),)


def _df_two(v: _View, i, j) -> Iterator[tuple]:
    """Primary index ``i % 3 == 2``, ``j % 3 == 0``: one look-ahead pair."""
    p = v.p
    fo = p.fs_open_cost
    get, h, c = v.get, v.h, v.col
    last = c(i + 1, j + 1)
    ahead = h(i + 1, j + 1)
    if i >= 2 and j >= 2:
        yield 1, v.saa(i + 1, j + 1) // 2 + get(DF, i - 2, j - 2) + p.fs_extend_cost, \
            v.ref(DF, i - 2, j - 2), (last,)
    if i >= 2 and j >= 1:
        yield 2, ahead + v.san(i, j) + get(D, i - 2, j - 1) + 2 * fo, \
            v.ref(D, i - 2, j - 1), (c(i - 1, 0), c(i, j), last)
        yield 3, ahead + h(i - 1, j) + get(DF, i - 2, j - 1) + fo, \
            v.ref(DF, i - 2, j - 1), (c(i, 0), last)
    if i >= 2:
        yield 4, ahead + get(D, i - 2, j) + fo, v.ref(D, i - 2, j), \
            (c(i - 1, 0), c(i, 0), last)
    yield 5, ahead + get(D, i, j) + fo, v.ref(D, i, j), (last,)


def _df_one(v: _View, i, j) -> Iterator[tuple]:
    """Primary index ``i % 3 == 1``, ``j % 3 == 0``: two look-ahead pairs."""
    p = v.p
    fo = p.fs_open_cost
    get, h, c = v.get, v.h, v.col
    pairs = (c(i + 1, j + 1), c(i + 2, j + 2))
    ahead = h(i + 1, j + 1) + h(i + 2, j + 2)
    if i >= 1 and j >= 1:
        yield 1, v.saa(i + 2, j + 2) // 2 + get(DF, i - 1, j - 1) + p.fs_extend_cost, \
            v.ref(DF, i - 1, j - 1), pairs
    if i >= 1:
        yield 2, ahead + get(D, i - 1, j) + fo, v.ref(D, i - 1, j), (c(i, 0),) + pairs
    yield 3, ahead + get(D, i, j) + fo, v.ref(D, i, j), pairs


def _gap_cases(v: _View, i, j) -> Iterator[tuple]:
    """GA (primary) at codon end ``i``: open a deletion run or extend one."""
    p = v.p
    cols = (v.col(i - 2, 0), v.col(i - 1, 0), v.col(i, 0))
    yield 1, v.get(D, i - 3, j) + p.gap_open_cost + p.gap_cost, v.ref(D, i - 3, j), cols
    yield 2, v.get(GA, i - 3, j) + p.gap_cost, v.ref(GA, i - 3, j), cols


# D sub-case that leaves the open partial codon of A (resp. B) as a trailing
# run against gaps, keyed by which case function produced the candidates.
_EXTENDS_GAP_RUN = {
    # (case kind, side) -> sub-case number
    ("case2", "A"): None, ("case2", "B"): 11,
    ("case3", "A"): 11, ("case3", "B"): None,
    ("case4", "A"): 2, ("case4", "B"): 3,
}
# sub-case number used in NA/NB for "one more nucleotide against a gap"
RUN_CONTINUES = 99


class _Aligner:
    def __init__(self, a: Cds, b: Cds, p: AlignParams):
        self.a, self.b, self.p = a.bases, b.bases, p
        n, m = len(self.a), len(self.b)
        self.n, self.m = n, m
        affine = p.affine

        def table():
            return [[NEG_INF] * (m + 1) for _ in range(n + 1)]

        def trace():
            return [[0] * (m + 1) for _ in range(n + 1)]

        self.t = DpTables(n, m, table(), table(), table() if affine else None,
                          table() if affine else None, table(), table(),
                          {D: trace(), DF: trace(), GA: trace() if affine else None,
                           GB: trace() if affine else None, NA: trace(), NB: trace()})
        self.fwd = _View(self.t, self.a, self.b, p, mirror=False)
        self.rev = _View(self.t, self.a, self.b, p, mirror=True)

    # -- case dispatch -------------------------------------------------------

    def _kind(self, i, j):
        ri, rj = i % 3, j % 3
        if ri == 0 and rj == 0:
            return "case1"
        if ri == 0:
            return "case2"
        if rj == 0:
            return "case3"
        return "case4"

    def d_cases(self, i, j):
        kind = self._kind(i, j)
        if kind == "case1":
            return _case1(self.fwd, i, j)
        if kind == "case2":
            return _case2(self.fwd, i, j)
        if kind == "case3":
            return _case2(self.rev, j, i)
        return _case4(self.fwd, i, j)

    def df_cases(self, i, j):
        ri, rj = i % 3, j % 3
        if ri == 0 and rj == 0:
            return iter([(1, self.t.D[i][j], (D, i, j), ())])
        if ri == 2 and rj == 0:
            return _df_two(self.fwd, i, j)
        if ri == 0 and rj == 2:
            return _df_two(self.rev, j, i)
        if ri == 1 and rj == 0:
            return _df_one(self.fwd, i, j)
        return _df_one(self.rev, j, i)

    def gap_cases(self, name, i, j):
        if name == GA:
            return _gap_cases(self.fwd, i, j)
        return _gap_cases(self.rev, j, i)

    def open_codon_cases(self, name, i, j, d_cases=None):
        """Cases of NA/NB: D's cases minus the one extending a gap-only run."""
        side = "A" if name == NA else "B"
        skip = _EXTENDS_GAP_RUN[self._kind(i, j), side]
        for case in (d_cases if d_cases is not None else self.d_cases(i, j)):
            if case[0] != skip:
                yield case
        if side == "A" and i % 3 == 2:
            yield RUN_CONTINUES, self.t.NA[i - 1][j], (NA, i - 1, j), ((i, 0),)
        elif side == "B" and j % 3 == 2:
            yield RUN_CONTINUES, self.t.NB[i][j - 1], (NB, i, j - 1), ((0, j),)

    def cases(self, name, i, j):
        if name == D:
            return self.d_cases(i, j)
        if name == DF:
            return self.df_cases(i, j)
        if name in (NA, NB):
            return self.open_codon_cases(name, i, j)
        return self.gap_cases(name, i, j)

    # -- fill ----------------------------------------------------------------

    @staticmethod
    def _best(cases):
        best, best_case, count = NEG_INF, 0, 0
        for number, score, _, _ in cases:
            count += 1
            if score > best:
                best, best_case = score, number
        return _clamp(best), best_case, count

    def init_borders(self):
        t, p = self.t, self.p
        for i in range(self.n + 1):
            t.D[i][0] = self._border(i)
        for j in range(self.m + 1):
            t.D[0][j] = self._border(j)
        if p.affine:
            for i in range(3, self.n + 1, 3):
                t.GA[i][0] = t.D[i][0]
            for j in range(3, self.m + 1, 3):
                t.GB[0][j] = t.D[0][j]
        for i in range(self.n + 1):
            t.DF[i][0] = self._border_df(self.fwd, i)
        for j in range(self.m + 1):
            t.DF[0][j] = self._border_df(self.rev, j)
        return t

    def _border(self, k):
        p = self.p
        score = (k // 3) * p.gap_cost
        if p.affine and k >= 3:
            score += p.gap_open_cost
        return score

    def _border_df(self, v: _View, x):
        fo = self.p.fs_open_cost
        base = self._border(x)
        if x % 3 == 1:
            return _clamp(base + v.h(x + 1, 1) + v.h(x + 2, 2) + fo)
        if x % 3 == 2:
            return _clamp(base + v.h(x + 1, 1) + fo)
        return base

    def fill(self) -> DpTables:
        t, p = self.t, self.p
        self.init_borders()
        tr = t.trace
        best = self._best
        for i in range(1, self.n + 1):
            ri = i % 3
            for j in range(1, self.m + 1):
                rj = j % 3
                if p.affine:
                    if ri == 0:
                        t.GA[i][j], tr[GA][i][j], k = best(self.gap_cases(GA, i, j))
                        t.aux_fill_count += k
                    if rj == 0:
                        t.GB[i][j], tr[GB][i][j], k = best(self.gap_cases(GB, i, j))
                        t.aux_fill_count += k
                cases = list(self.d_cases(i, j))
                t.D[i][j], tr[D][i][j], k = best(cases)
                t.cell_fill_count += k
                if ri:
                    t.NA[i][j], tr[NA][i][j], k = best(
                        self.open_codon_cases(NA, i, j, cases))
                    t.aux_fill_count += k
                if rj:
                    t.NB[i][j], tr[NB][i][j], k = best(
                        self.open_codon_cases(NB, i, j, cases))
                    t.aux_fill_count += k
                if ri == 0 or rj == 0:
                    t.DF[i][j], tr[DF][i][j], k = best(self.df_cases(i, j))
                    t.cell_fill_count += k
        return t

    # -- traceback -----------------------------------------------------------

    def _border_step(self, name, i, j):
        """Predecessor and columns for cells filled by initialisation."""
        if name == D:
            if i == 0:
                return None, tuple((0, k) for k in range(1, j + 1))
            return None, tuple((k, 0) for k in range(1, i + 1))
        if name == DF:
            if j == 0:
                return (D, i, 0), tuple((i + k, k) for k in range(1, _lookahead(i) + 1))
            return (D, 0, j), tuple((k, j + k) for k in range(1, _lookahead(j) + 1))
        if name == GA:
            return (D, i, 0), ()
        if name == GB:
            return (D, 0, j), ()
        raise CorruptTrace(f"{name}({i},{j}) has no border value")

    def traceback(self) -> PairwiseAlignment:
        t = self.t
        name, i, j = D, self.n, self.m
        pieces = []
        while True:
            if i == 0 or j == 0:
                ref, cols = self._border_step(name, i, j)
            else:
                number = t.trace[name][i][j]
                for case in self.cases(name, i, j):
                    if case[0] == number:
                        _, score, ref, cols = case
                        break
                else:
                    raise CorruptTrace(f"no sub-case {number} at {name}({i},{j})")
                if _clamp(score) != t.table(name)[i][j]:
                    raise CorruptTrace(f"{name}({i},{j}) does not match sub-case {number}")
            pieces.append(cols)
            if ref is None:
                break
            name, i, j = ref
        row_a, row_b = [], []
        for cols in reversed(pieces):
            for x, y in cols:
                row_a.append(self.a[x - 1] if x else GAP)
                row_b.append(self.b[y - 1] if y else GAP)
        return PairwiseAlignment("".join(row_a), "".join(row_b))


def exact_regime(p: AlignParams) -> bool:
    """True when the recurrences are guaranteed to find the optimum.

    Two frameshift initiations plus three nucleotide matches must never beat
    the worst codon substitution (nor that substitution as a frameshift
    extension).  The default and all grid parameter sets qualify.
    """
    worst = 10 * min(p.aa_matrix[x][y] for x in AMINO_ACIDS for y in AMINO_ACIDS)
    gain = 2 * p.fs_open_cost + 3 * max(p.nt_match, p.nt_mismatch, 0)
    return gain <= worst and gain <= worst + 2 * p.fs_extend_cost


def init_tables(a: Cds, b: Cds, p: AlignParams) -> DpTables:
    """Tables with only the initialised borders (row and column 0) filled."""
    return _Aligner(a, b, p).init_borders()


def fill_tables(a: Cds, b: Cds, p: AlignParams) -> DpTables:
    return _Aligner(a, b, p).fill()


def recompute_cell(tables: DpTables, a: Cds, b: Cds, p: AlignParams,
                   name: str, i: int, j: int) -> list[tuple[int, int]]:
    """``(sub-case, score)`` pairs for one cell, re-evaluated on filled tables."""
    al = _Aligner.__new__(_Aligner)
    al.a, al.b, al.p, al.t = a.bases, b.bases, p, tables
    al.n, al.m = len(a), len(b)
    al.fwd = _View(tables, al.a, al.b, p, mirror=False)
    al.rev = _View(tables, al.a, al.b, p, mirror=True)
    return [(number, _clamp(score)) for number, score, _, _ in al.cases(name, i, j)]


def align(a: Cds, b: Cds, p: AlignParams, keep_tables: bool = False) -> AlignResult:
    """Best-scoring alignment of ``a`` and ``b`` (quadratic time and space)."""
    al = _Aligner(a, b, p)
    tables = al.fill()
    aln = al.traceback()
    return AlignResult(aln, tables.D[al.n][al.m], classify_codons(aln),
                       tables.cell_fill_count, tables if keep_tables else None)
