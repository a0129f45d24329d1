"""Pairwise alignment of coding DNA sequences that charges frameshifts both
for their initiation and for their length."""

from .aligner import AlignResult, CorruptTrace, DpTables, align, exact_regime, fill_tables, init_tables
from .baselines import NwParams, needle_aa, needle_nt
from .classify import (CodonPartition, PairwiseAlignment, ScoreTerms, aa_score, classify_codons,
                       score_alignment, score_terms)
from .criteria import CriteriaReport, SequenceMismatch, compute_criteria, partner_agreement
from .model import (AFFINE, BLOSUM62, LINEAR, AlignParams, Cds, EmptySequence, InvalidSymbol,
                    LengthNotMultipleOfThree, format_deci, load_matrix, residue_count, to_deci,
                    translate, validate_cds)
from .oracle import (BudgetExceeded, EnumerationBudget, alignment_count, brute_max_score,
                     enumerate_alignments)

__all__ = [
    "AFFINE", "BLOSUM62", "LINEAR", "AlignParams", "AlignResult", "BudgetExceeded", "Cds",
    "CodonPartition", "CorruptTrace", "CriteriaReport", "DpTables", "EmptySequence",
    "EnumerationBudget", "InvalidSymbol", "LengthNotMultipleOfThree", "NwParams",
    "PairwiseAlignment", "ScoreTerms", "SequenceMismatch", "aa_score", "align",
    "alignment_count", "brute_max_score", "classify_codons", "compute_criteria",
    "enumerate_alignments", "exact_regime", "fill_tables", "format_deci", "init_tables",
    "load_matrix", "needle_aa", "needle_nt", "partner_agreement", "residue_count",
    "score_alignment", "score_terms", "to_deci", "translate", "validate_cds",
]
