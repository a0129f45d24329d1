import random

import numpy as np
import pytest

from _gen import random_alignment, random_cds, random_pair
from fsealign import (AFFINE, LINEAR, AlignParams, BudgetExceeded, EnumerationBudget,
                      alignment_count, brute_max_score, enumerate_alignments, score_terms,
                      validate_cds)
from fsealign import _enum
from fsealign.oracle import brute_best_alignments, brute_max_scores, enumerate_rows


def test_small_counts():
    assert list(enumerate_rows("", "")) == [("", "")]
    assert len(list(enumerate_rows("A", "C"))) == 3
    a, b = validate_cds("ATG"), validate_cds("GCT")
    assert len(list(enumerate_alignments(a, b))) == 63


@pytest.mark.parametrize("n,m", [(1, 2), (3, 3), (3, 6), (4, 5), (6, 6)])
def test_enumeration_matches_recurrence(n, m):
    rows = list(enumerate_rows("A" * n, "C" * m))
    assert len(rows) == len(set(rows)) == alignment_count(n, m)


def test_delannoy_values():
    assert alignment_count(3, 3) == 63
    assert alignment_count(6, 6) == 8989
    assert alignment_count(7, 7) == 48639
    assert alignment_count(9, 9) == 1462563


def test_budget():
    big = validate_cds("ATG" * 4)
    with pytest.raises(BudgetExceeded):
        list(enumerate_alignments(big, big))
    with pytest.raises(BudgetExceeded):
        brute_max_score(validate_cds("ATG"), validate_cds("ATG"), AlignParams.create(),
                        EnumerationBudget(max_alignments=10))


def test_single_codon():
    p = AlignParams.create()
    c = validate_cds("TGG")
    assert brute_max_score(c, c, p) == p.s_aa("TGG", "TGG")


def _costs(p):
    return np.array([[p.fs_open_cost, p.fs_extend_cost, p.gap_open_cost, p.gap_cost,
                      int(p.affine)]], dtype=np.int64)


def test_compiled_leaf_terms_match_scorer():
    rng = random.Random(12)
    p = AlignParams.create()
    aa, nt = _enum.codon_matrix(p), _enum.nt_matrix(p)
    for _ in range(500):
        a, b = random_cds(rng, 1, 5), random_cds(rng, 1, 5)
        aln = random_alignment(rng, a, b, pair_weight=rng.choice((1, 4)))
        cols_a, cols_b = [], []
        i = j = 0
        for x, y in zip(aln.row_a, aln.row_b):
            cols_a.append(i if x != "-" else -1)
            cols_b.append(j if y != "-" else -1)
            i += x != "-"
            j += y != "-"
        got = _enum.leaf_terms(_enum.encode(a.bases), _enum.encode(b.bases),
                               np.array(cols_a, dtype=np.int64),
                               np.array(cols_b, dtype=np.int64), len(aln), aa, nt)
        t = score_terms(aln, p)
        assert list(got) == [t.substitution, t.n_fsext, t.n_indel, t.n_indel_runs,
                             t.n_fsinit]


@pytest.mark.parametrize("gap_model", [AFFINE, LINEAR])
def test_compiled_and_python_enumeration_agree(gap_model):
    rng = random.Random(13)
    ps = [AlignParams.create(fs_open=fo, fs_extend=fe, gap_model=gap_model)
          for fo, fe in ((-10, 0), (-20, -0.5), (-30, -1))]
    for _ in range(25):
        a, b = random_pair(rng, 1, 2)
        assert brute_max_scores(a, b, ps) == brute_max_scores(a, b, ps, compiled=False)
        _, visited = _enum.brute_max(_enum.encode(a.bases), _enum.encode(b.bases),
                                     _enum.codon_matrix(ps[0]), _enum.nt_matrix(ps[0]),
                                     _costs(ps[0]))
        assert visited == alignment_count(len(a), len(b))


def test_symmetry():
    rng = random.Random(14)
    p = AlignParams.create(fs_open=-10)
    for _ in range(20):
        a, b = random_pair(rng, 1, 3)
        assert brute_max_score(a, b, p) == brute_max_score(b, a, p)


def test_best_alignments_reach_the_maximum():
    p = AlignParams.create()
    a, b = validate_cds("ATGTAA"), validate_cds("ATG")
    best, winners = brute_best_alignments(a, b, p)
    assert best == brute_max_score(a, b, p)
    assert all(score_terms(w, p).total(p) == best for w in winners)


def test_mixed_substitution_scores_rejected():
    a = validate_cds("ATG")
    with pytest.raises(ValueError):
        brute_max_scores(a, a, [AlignParams.create(), AlignParams.create(nt_match=2)])
