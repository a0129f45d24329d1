import random

from _gen import random_cds, random_pair
from fsealign import NwParams, PairwiseAlignment, needle_aa, needle_nt, validate_cds
from fsealign.baselines import gotoh


def test_nt_identity():
    x = validate_cds("ATGGCTTAA")
    res = needle_nt(x, x)
    assert res.alignment == PairwiseAlignment.identity(x)
    assert res.score == 20 * len(x)


def test_nt_single_mismatch():
    res = needle_nt(validate_cds("ATGGCT"), validate_cds("ATGGCA"))
    assert res.alignment == PairwiseAlignment("ATGGCT", "ATGGCA")
    assert res.score == 5 * 20 - 30


def test_gotoh_gap_run_costs_open_once():
    score, cols, count = gotoh("AAAA", "AA", lambda u, v: 20 if u == v else -30, -50, -20)
    assert score == 2 * 20 - 50 - 2 * 20
    assert sum(1 for _, j in cols if j == 0) == 2
    assert count == 3 * 4 * 2


def test_nt_symmetric_scores():
    rng = random.Random(1)
    for _ in range(30):
        a, b = random_pair(rng, 1, 10)
        assert needle_nt(a, b).score == needle_nt(b, a).score
        assert len(needle_nt(a, b).alignment) <= len(a) + len(b)


def test_aa_identity_and_deletion():
    x = validate_cds("ATGGCTTGG")
    res = needle_aa(x, x)
    assert res.alignment == PairwiseAlignment.identity(x)
    assert res.score == 10 * (5 + 4 + 11)
    res = needle_aa(validate_cds("ATGTAA"), validate_cds("ATG"))
    assert res.alignment == PairwiseAlignment("ATGTAA", "ATG---")
    assert res.score == 50 - 110 - 10


def test_aa_only_whole_codons():
    rng = random.Random(2)
    for _ in range(50):
        a, b = random_pair(rng, 1, 10)
        res = needle_aa(a, b)
        for side in (res.partition.a, res.partition.b):
            assert not side.fsinit and not side.fsext
        assert len(res.alignment) % 3 == 0


def test_params_defaults():
    nt, aa = NwParams.nucleotide(), NwParams.amino_acid()
    assert (nt.match, nt.mismatch, nt.gap_open_cost, nt.gap_cost) == (20, -30, -50, -20)
    assert (aa.gap_open_cost, aa.gap_cost, aa.level) == (-110, -10, "amino_acid")


def test_cell_counts_three_per_cell():
    rng = random.Random(3)
    a, b = random_cds(rng, 20, 20), random_cds(rng, 20, 20)
    n = len(a)
    assert needle_nt(a, b).cell_fill_count == 3 * n * n
    assert needle_aa(a, b).cell_fill_count == 3 * (n // 3) ** 2
