"""Compiled exhaustive enumeration of alignments, scored leaf by leaf.

Each leaf is classified from scratch (no state shared between leaves), so
this stays a brute-force search; it only exists because Python is too slow
to visit the ~1.5 million alignments of two 3-codon sequences.
"""

import numpy as np
from numba import njit

from .model import GENETIC_CODE, NUCLEOTIDES, AlignParams

_CODE = {n: k for k, n in enumerate(NUCLEOTIDES)}


def encode(seq: str) -> np.ndarray:
    return np.array([_CODE[s] for s in seq], dtype=np.int64)


def codon_matrix(p: AlignParams) -> np.ndarray:
    """64x64 codon substitution scores (deci) indexed by 16*x + 4*y + z."""
    out = np.zeros((64, 64), dtype=np.int64)
    codons = list(GENETIC_CODE)
    for c1 in codons:
        k1 = 16 * _CODE[c1[0]] + 4 * _CODE[c1[1]] + _CODE[c1[2]]
        for c2 in codons:
            k2 = 16 * _CODE[c2[0]] + 4 * _CODE[c2[1]] + _CODE[c2[2]]
            out[k1, k2] = p.s_aa(c1, c2)
    return out


def nt_matrix(p: AlignParams) -> np.ndarray:
    out = np.full((4, 4), p.nt_mismatch, dtype=np.int64)
    np.fill_diagonal(out, p.nt_match)
    return out


@njit(cache=True)
def _side_terms(seq, other, pos, other_at, ncols, aa, nt, out):
    """Add one sequence's contribution to ``out``.

    out = [substitution, n_fsext, n_indel, n_runs, n_fsinit]
    """
    n = seq.shape[0]
    prev_indel_end = -10
    for k in range(0, n, 3):
        c0 = pos[k]
        c2 = pos[k + 2]
        o0 = other_at[c0]
        o1 = other_at[pos[k + 1]]
        o2 = other_at[c2]
        fsinit = True
        if c2 - c0 == 2:
            if o0 < 0 and o1 < 0 and o2 < 0:
                out[2] += 1
                if c0 != prev_indel_end + 1:
                    out[3] += 1
                prev_indel_end = c2
                fsinit = False
            elif o0 >= 0 and o1 >= 0 and o2 >= 0:
                mine = 16 * seq[k] + 4 * seq[k + 1] + seq[k + 2]
                theirs = 16 * other[o0] + 4 * other[o1] + other[o2]
                if o0 % 3 == 0:
                    # IM codons are counted on one side only (both sides agree)
                    out[5] += aa[mine, theirs]
                else:
                    out[0] += aa[mine, theirs] // 2
                    out[1] += 1
                fsinit = False
        if fsinit:
            out[4] += 1
            for r in range(k, k + 3):
                o = other_at[pos[r]]
                if o >= 0:
                    out[0] += nt[seq[r], other[o]] // 2


@njit(cache=True)
def leaf_terms(a, b, col_a, col_b, ncols, aa, nt):
    """Score terms of the alignment given by per-column residue indices."""
    n = a.shape[0]
    m = b.shape[0]
    pos_a = np.empty(n, dtype=np.int64)
    pos_b = np.empty(m, dtype=np.int64)
    for c in range(ncols):
        if col_a[c] >= 0:
            pos_a[col_a[c]] = c
        if col_b[c] >= 0:
            pos_b[col_b[c]] = c
    out = np.zeros(6, dtype=np.int64)
    _side_terms(a, b, pos_a, col_b, ncols, aa, nt, out)
    im_a = out[5]
    out[5] = 0
    _side_terms(b, a, pos_b, col_a, ncols, aa, nt, out)
    out[0] += im_a
    return out[:5]


@njit(cache=True)
def brute_max(a, b, aa, nt, costs):
    """Best total per row of ``costs`` = [fs_open, fs_extend, gap_open, gap, affine]."""
    n = a.shape[0]
    m = b.shape[0]
    npar = costs.shape[0]
    best = np.full(npar, np.iinfo(np.int64).min, dtype=np.int64)
    col_a = np.full(n + m, -1, dtype=np.int64)
    col_b = np.full(n + m, -1, dtype=np.int64)
    choice = np.full(n + m + 1, -1, dtype=np.int64)
    i = 0
    j = 0
    depth = 0
    visited = 0
    while True:
        if i == n and j == m:
            visited += 1
            t = leaf_terms(a, b, col_a, col_b, depth, aa, nt)
            for q in range(npar):
                total = (t[0] + t[1] * costs[q, 1] + t[2] * costs[q, 3]
                         + t[4] * costs[q, 0])
                if costs[q, 4]:
                    total += t[3] * costs[q, 2]
                if total > best[q]:
                    best[q] = total
        else:
            c = choice[depth] + 1
            while c <= 2:
                if c == 0 and i < n and j < m:
                    break
                if c == 1 and i < n:
                    break
                if c == 2 and j < m:
                    break
                c += 1
            if c <= 2:
                choice[depth] = c
                col_a[depth] = i if c != 2 else -1
                col_b[depth] = j if c != 1 else -1
                if c != 2:
                    i += 1
                if c != 1:
                    j += 1
                depth += 1
                continue
            choice[depth] = -1
        # backtrack one column
        if depth == 0:
            break
        depth -= 1
        if col_a[depth] >= 0:
            i -= 1
        if col_b[depth] >= 0:
            j -= 1
    return best, visited
