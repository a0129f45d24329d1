"""Exhaustive alignment enumeration, used to certify the dynamic program."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .classify import PairwiseAlignment, score_terms
from .model import GAP, AlignParams, Cds


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_total_len: int = 18
    max_alignments: int = 2_000_000

    def check(self, n: int, m: int):
        if n + m > self.max_total_len:
            raise BudgetExceeded(f"{n} + {m} nucleotides exceed the budget of "
                                 f"{self.max_total_len}")
        if alignment_count(n, m) > self.max_alignments:
            raise BudgetExceeded(f"{alignment_count(n, m)} alignments exceed the "
                                 f"budget of {self.max_alignments}")


@lru_cache(maxsize=None)
def alignment_count(n: int, m: int) -> int:
    """Number of alignments of lengths ``n`` and ``m`` (Delannoy numbers)."""
    if n == 0 or m == 0:
        return 1
    return (alignment_count(n - 1, m - 1) + alignment_count(n - 1, m)
            + alignment_count(n, m - 1))


def _rows(a: str, b: str) -> Iterator[tuple[str, str]]:
    if not a and not b:
        yield "", ""
        return
    if a and b:
        for ra, rb in _rows(a[:-1], b[:-1]):
            yield ra + a[-1], rb + b[-1]
    if a:
        for ra, rb in _rows(a[:-1], b):
            yield ra + a[-1], rb + GAP
    if b:
        for ra, rb in _rows(a, b[:-1]):
            yield ra + GAP, rb + b[-1]


def enumerate_rows(a: str, b: str, budget: EnumerationBudget = EnumerationBudget()):
    """Every pair of gapped rows for raw strings ``a`` and ``b``, each once."""
    budget.check(len(a), len(b))
    return _rows(a, b)


def enumerate_alignments(a: Cds, b: Cds,
                         budget: EnumerationBudget = EnumerationBudget()
                         ) -> Iterator[PairwiseAlignment]:
    for ra, rb in enumerate_rows(a.bases, b.bases, budget):
        yield PairwiseAlignment(ra, rb)


def brute_max_scores(a: Cds, b: Cds, params: Sequence[AlignParams],
                     budget: EnumerationBudget = EnumerationBudget(),
                     compiled: bool = True) -> list[int]:
    """Best score over all alignments, for each parameter set.

    The parameter sets must share substitution scores; only the penalty
    costs may differ.  Each alignment is classified once.  ``compiled``
    selects the numba enumerator; the pure Python path goes through
    :func:`score_terms` and is much slower.
    """
    params = list(params)
    base = params[0]
    for p in params[1:]:
        if (p.nt_match, p.nt_mismatch, p.aa_matrix) != (
                base.nt_match, base.nt_mismatch, base.aa_matrix):
            raise ValueError("parameter sets differ in substitution scores")
    budget.check(len(a), len(b))
    if compiled:
        from . import _enum
        costs = np.array([[p.fs_open_cost, p.fs_extend_cost, p.gap_open_cost,
                           p.gap_cost, int(p.affine)] for p in params], dtype=np.int64)
        best, _ = _enum.brute_max(_enum.encode(a.bases), _enum.encode(b.bases),
                                  _enum.codon_matrix(base), _enum.nt_matrix(base), costs)
        return [int(x) for x in best]
    terms = {score_terms(aln, base) for aln in enumerate_alignments(a, b, budget)}
    return [max(t.total(p) for t in terms) for p in params]


def brute_max_score(a: Cds, b: Cds, params: AlignParams,
                    budget: EnumerationBudget = EnumerationBudget(),
                    compiled: bool = True) -> int:
    return brute_max_scores(a, b, [params], budget, compiled)[0]


def brute_best_alignments(a: Cds, b: Cds, params: AlignParams,
                          budget: EnumerationBudget = EnumerationBudget()
                          ) -> tuple[int, list[PairwiseAlignment]]:
    """Best score and every alignment reaching it."""
    best, winners = None, []
    for aln in enumerate_alignments(a, b, budget):
        score = score_terms(aln, params).total(params)
        if best is None or score > best:
            best, winners = score, [aln]
        elif score == best:
            winners.append(aln)
    return best, winners
