"""Domain types for CDS alignment: sequences, scores and scoring parameters.

Scores are kept as plain ``int`` values in deci-units (tenths of a score
point) so that every term of the alignment score, including halved
substitution scores, is compared exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from types import MappingProxyType
from typing import Mapping

NUCLEOTIDES = "ACGT"
GAP = "-"
SCALE = 10

# Reserved -infinity; anything at or below NEG_INF // 2 is treated as unreachable.
NEG_INF = -(1 << 60)


class CdsError(ValueError):
    """Base class for CDS validation failures."""


class EmptySequence(CdsError):
    pass


class LengthNotMultipleOfThree(CdsError):
    def __init__(self, length):
        super().__init__(f"sequence length {length} is not a multiple of 3")
        self.length = length


class InvalidSymbol(CdsError):
    def __init__(self, position, symbol):
        super().__init__(f"invalid symbol {symbol!r} at position {position}")
        self.position = position
        self.symbol = symbol


class ScoreFormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# fixed-point scores


def to_deci(value) -> int:
    """Convert ``value`` (int, str or float) to deci-units.

    More than one decimal place is rejected, since it cannot be represented
    exactly.
    """
    if isinstance(value, bool):
        raise ScoreFormatError(f"not a score: {value!r}")
    if isinstance(value, int):
        return value * SCALE
    try:
        dec = Decimal(str(value).strip().replace("−", "-"))
    except InvalidOperation:
        raise ScoreFormatError(f"not a number: {value!r}") from None
    if not dec.is_finite():
        raise ScoreFormatError(f"not a finite number: {value!r}")
    scaled = dec * SCALE
    if scaled != scaled.to_integral_value():
        raise ScoreFormatError(f"{value!r} has more than one decimal place")
    return int(scaled)


def format_deci(deci: int) -> str:
    """Render a deci-unit score with exactly one decimal, e.g. ``-115.0``."""
    if deci <= NEG_INF // 2:
        return "-inf"
    sign = "-" if deci < 0 else ""
    q, r = divmod(abs(deci), SCALE)
    return f"{sign}{q}.{r}"


def halve(deci: int) -> int:
    if deci % 2:
        raise ScoreFormatError(f"{format_deci(deci)} cannot be halved exactly")
    return deci // 2


# ---------------------------------------------------------------------------
# sequences


@dataclass(frozen=True)
class Cds:
    """A validated coding sequence over ACGT whose length is a multiple of 3."""

    bases: str

    def __post_init__(self):
        if not self.bases:
            raise EmptySequence("empty sequence")
        if len(self.bases) % 3:
            raise LengthNotMultipleOfThree(len(self.bases))
        for pos, sym in enumerate(self.bases, 1):
            if sym not in NUCLEOTIDES:
                raise InvalidSymbol(pos, sym)

    def __len__(self):
        return len(self.bases)

    def __str__(self):
        return self.bases

    @property
    def codons(self) -> list[str]:
        return [self.bases[k:k + 3] for k in range(0, len(self.bases), 3)]


_WS = re.compile(r"\s+")


def validate_cds(raw: str) -> Cds:
    """Normalise ``raw`` (whitespace removed, uppercased) into a :class:`Cds`.

    >>> validate_cds("atggct")
    Cds(bases='ATGGCT')
    """
    text = _WS.sub("", raw or "").upper()
    if not text:
        raise EmptySequence("empty sequence")
    for pos, sym in enumerate(text, 1):
        if sym not in NUCLEOTIDES:
            raise InvalidSymbol(pos, sym)
    if len(text) % 3:
        raise LengthNotMultipleOfThree(len(text))
    return Cds(text)


_BASES = "TCAG"
_AMINO = "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG"
GENETIC_CODE = MappingProxyType({
    a + b + c: _AMINO[16 * i + 4 * j + k]
    for i, a in enumerate(_BASES)
    for j, b in enumerate(_BASES)
    for k, c in enumerate(_BASES)
})
AMINO_ACIDS = "ARNDCQEGHILKMFPSTWYV*"


def translate_codon(codon: str) -> str:
    return GENETIC_CODE[codon]


def translate(cds) -> str:
    """Translate with the standard genetic code; stops become ``*``."""
    seq = cds.bases if isinstance(cds, Cds) else cds
    return "".join(GENETIC_CODE[seq[k:k + 3]] for k in range(0, len(seq), 3))


def residue_count(gapped: str, k: int, l: int) -> int:
    """Number of non-gap letters in columns ``k..l`` (1-based, inclusive)."""
    if not 1 <= k <= l <= len(gapped):
        raise IndexError(f"columns {k}..{l} outside 1..{len(gapped)}")
    return sum(1 for sym in gapped[k - 1:l] if sym != GAP)


# ---------------------------------------------------------------------------
# substitution matrices

BLOSUM62_TEXT = """\
   A  R  N  D  C  Q  E  G  H  I  L  K  M  F  P  S  T  W  Y  V  *
A  4 -1 -2 -2  0 -1 -1  0 -2 -1 -1 -1 -1 -2 -1  1  0 -3 -2  0 -4
R -1  5  0 -2 -3  1  0 -2  0 -3 -2  2 -1 -3 -2 -1 -1 -3 -2 -3 -4
N -2  0  6  1 -3  0  0  0  1 -3 -3  0 -2 -3 -2  1  0 -4 -2 -3 -4
D -2 -2  1  6 -3  0  2 -1 -1 -3 -4 -1 -3 -3 -1  0 -1 -4 -3 -3 -4
C  0 -3 -3 -3  9 -3 -4 -3 -3 -1 -1 -3 -1 -2 -3 -1 -1 -2 -2 -1 -4
Q -1  1  0  0 -3  5  2 -2  0 -3 -2  1  0 -3 -1  0 -1 -2 -1 -2 -4
E -1  0  0  2 -4  2  5 -2  0 -3 -3  1 -2 -3 -1  0 -1 -3 -2 -2 -4
G  0 -2  0 -1 -3 -2 -2  6 -2 -4 -4 -2 -3 -3 -2  0 -2 -2 -3 -3 -4
H -2  0  1 -1 -3  0  0 -2  8 -3 -3 -1 -2 -1 -2 -1 -2 -2  2 -3 -4
I -1 -3 -3 -3 -1 -3 -3 -4 -3  4  2 -3  1  0 -3 -2 -1 -3 -1  3 -4
L -1 -2 -3 -4 -1 -2 -3 -4 -3  2  4 -2  2  0 -3 -2 -1 -2 -1  1 -4
K -1  2  0 -1 -3  1  1 -2 -1 -3 -2  5 -1 -3 -1  0 -1 -3 -2 -2 -4
M -1 -1 -2 -3 -1  0 -2 -3 -2  1  2 -1  5  0 -2 -1 -1 -1 -1  1 -4
F -2 -3 -3 -3 -2 -3 -3 -3 -1  0  0 -3  0  6 -4 -2 -2  1  3 -1 -4
P -1 -2 -2 -1 -3 -1 -1 -2 -2 -3 -3 -1 -2 -4  7 -1 -1 -4 -3 -2 -4
S  1 -1  1  0 -1  0  0  0 -1 -2 -2  0 -1 -2 -1  4  1 -3 -2 -2 -4
T  0 -1  0 -1 -1 -1 -1 -2 -2 -1 -1 -1 -1 -2 -1  1  5 -2 -2  0 -4
W -3 -3 -4 -4 -2 -2 -3 -2 -2 -3 -2 -3 -1  1 -4 -3 -2 11  2 -3 -4
Y -2 -2 -2 -3 -2 -1 -2 -3  2 -1 -1 -2 -1  3 -3 -2 -2  2  7 -1 -4
V  0 -3 -3 -3 -1 -2 -2 -3 -3  3  1 -2  1 -1 -2 -2  0 -3 -1  4 -4
* -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4 -4  1
"""


class MatrixFormatError(ValueError):
    pass


def parse_matrix(text: str) -> Mapping[str, Mapping[str, int]]:
    """Parse a square substitution matrix with a header row of residues.

    Lines starting with ``#`` are comments.  Rows and columns for residues
    outside the 20 amino acids plus ``*`` (B, Z, X, ...) are dropped.  The
    result maps residue pairs to integer scores (read-only).
    """
    lines = [ln.split() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix")
    header = [h.upper() for h in lines[0]]
    table: dict[str, dict[str, int]] = {}
    for row in lines[1:]:
        label = row[0].upper()
        if len(row) - 1 != len(header):
            raise MatrixFormatError(f"row {label!r} has {len(row) - 1} values, "
                                    f"expected {len(header)}")
        try:
            values = [int(v) for v in row[1:]]
        except ValueError:
            raise MatrixFormatError(f"non-integer score in row {label!r}") from None
        table[label] = dict(zip(header, values))
    missing = [aa for aa in AMINO_ACIDS if aa not in table or aa not in header]
    if "*" in missing:
        # matrices without a stop row get the NCBI convention
        missing.remove("*")
        for aa in AMINO_ACIDS[:-1]:
            if aa in table:
                table[aa]["*"] = -4
        table["*"] = {aa: -4 for aa in AMINO_ACIDS}
        table["*"]["*"] = 1
    if missing:
        raise MatrixFormatError(f"matrix lacks residues {''.join(missing)}")
    for a in AMINO_ACIDS:
        for b in AMINO_ACIDS:
            if table[a][b] != table[b][a]:
                raise MatrixFormatError(f"matrix is not symmetric at {a}/{b}")
    return MappingProxyType({
        a: MappingProxyType({b: table[a][b] for b in AMINO_ACIDS})
        for a in AMINO_ACIDS})


BLOSUM62 = parse_matrix(BLOSUM62_TEXT)


def load_matrix(spec: str) -> Mapping[str, Mapping[str, int]]:
    """``'blosum62'`` or a path to a matrix file."""
    if spec.lower() == "blosum62":
        return BLOSUM62
    with open(spec, encoding="utf-8") as handle:
        return parse_matrix(handle.read())


# ---------------------------------------------------------------------------
# parameters

LINEAR = "linear"
AFFINE = "affine"
GAP_MODELS = (LINEAR, AFFINE)


def _codon_table(matrix: Mapping[str, Mapping[str, int]]) -> dict[tuple[str, str], int]:
    codons = list(GENETIC_CODE)
    return {(c1, c2): matrix[GENETIC_CODE[c1]][GENETIC_CODE[c2]] * SCALE
            for c1 in codons for c2 in codons}


@dataclass(frozen=True)
class AlignParams:
    """Costs and substitution scores, all in deci-units.

    Use :meth:`create` to build from ordinary numbers.  ``aa_matrix`` holds
    integer (not deci) scores as read from a matrix file.
    """

    fs_open_cost: int = -300
    fs_extend_cost: int = -10
    gap_open_cost: int = -110
    gap_cost: int = -10
    nt_match: int = 10
    nt_mismatch: int = -10
    aa_matrix: Mapping[str, Mapping[str, int]] = field(default=BLOSUM62, repr=False)
    gap_model: str = AFFINE
    codon_scores: Mapping[tuple[str, str], int] = field(init=False, repr=False,
                                                        compare=False)

    def __post_init__(self):
        if self.fs_open_cost >= 0:
            raise ValueError("fs_open_cost must be negative")
        if self.fs_extend_cost > 0:
            raise ValueError("fs_extend_cost must be <= 0")
        if self.gap_open_cost > 0:
            raise ValueError("gap_open_cost must be <= 0")
        if self.gap_cost >= 0:
            raise ValueError("gap_cost must be negative")
        if self.gap_model not in GAP_MODELS:
            raise ValueError(f"unknown gap model {self.gap_model!r}")
        # halved nucleotide scores must stay exact
        halve(self.nt_match)
        halve(self.nt_mismatch)
        object.__setattr__(self, "codon_scores",
                           MappingProxyType(_codon_table(self.aa_matrix)))

    @classmethod
    def create(cls, fs_open=-30, fs_extend=-1, gap_open=-11, gap=-1,
               nt_match=1, nt_mismatch=-1, matrix=BLOSUM62, gap_model=AFFINE):
        return cls(to_deci(fs_open), to_deci(fs_extend), to_deci(gap_open),
                   to_deci(gap), to_deci(nt_match), to_deci(nt_mismatch),
                   matrix, gap_model)

    def replace(self, **changes) -> "AlignParams":
        kwargs = dict(fs_open_cost=self.fs_open_cost,
                      fs_extend_cost=self.fs_extend_cost,
                      gap_open_cost=self.gap_open_cost, gap_cost=self.gap_cost,
                      nt_match=self.nt_match, nt_mismatch=self.nt_mismatch,
                      aa_matrix=self.aa_matrix, gap_model=self.gap_model)
        kwargs.update(changes)
        return AlignParams(**kwargs)

    @property
    def affine(self) -> bool:
        return self.gap_model == AFFINE

    def s_an(self, a: str, b: str) -> int:
        return self.nt_match if a == b else self.nt_mismatch

    def s_aa(self, codon_a: str, codon_b: str) -> int:
        return self.codon_scores[codon_a, codon_b]
