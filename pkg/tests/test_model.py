import pytest
from hypothesis import given, strategies as st

from fsealign import (AlignParams, EmptySequence, InvalidSymbol, LengthNotMultipleOfThree,
                      format_deci, residue_count, to_deci, translate, validate_cds)
from fsealign.model import (BLOSUM62, GENETIC_CODE, MatrixFormatError, ScoreFormatError,
                            halve, load_matrix, parse_matrix)

cds_text = st.integers(1, 20).flatmap(
    lambda k: st.text(alphabet="ACGTacgt", min_size=3 * k, max_size=3 * k))


def test_validate_normalizes_case():
    assert validate_cds("atggct").bases == "ATGGCT"
    assert validate_cds("  ATG\nGCT ").bases == "ATGGCT"


def test_validate_rejects_bad_length():
    with pytest.raises(LengthNotMultipleOfThree):
        validate_cds("ATGG")


@pytest.mark.parametrize("raw,pos,sym", [("ATGNAA", 4, "N"), ("RTG", 1, "R"),
                                         ("ATGGCY", 6, "Y")])
def test_validate_rejects_ambiguity_codes(raw, pos, sym):
    with pytest.raises(InvalidSymbol) as err:
        validate_cds(raw)
    assert (err.value.position, err.value.symbol) == (pos, sym)


def test_validate_rejects_empty():
    with pytest.raises(EmptySequence):
        validate_cds("  \n")


@given(cds_text)
def test_validate_idempotent(raw):
    once = validate_cds(raw)
    assert validate_cds(str(once)) == once


@given(cds_text)
def test_translate_length(raw):
    c = validate_cds(raw)
    assert len(translate(c)) == len(c) // 3


def test_translate_examples():
    assert translate(validate_cds("ATGGCT")) == "MA"
    assert translate(validate_cds("TAATAGTGA")) == "***"
    assert translate(validate_cds("ATG")) == "M"


def test_genetic_code_is_complete():
    assert len(GENETIC_CODE) == 64
    assert sum(aa == "*" for aa in GENETIC_CODE.values()) == 3


def test_residue_count():
    assert residue_count("ACCAT--GTAG", 4, 8) == 3
    assert residue_count("AC-T", 3, 3) == 0
    assert residue_count("ACGT", 1, 4) == 4
    with pytest.raises(IndexError):
        residue_count("ACGT", 0, 2)
    with pytest.raises(IndexError):
        residue_count("ACGT", 3, 5)


def test_to_deci():
    assert to_deci(-30) == -300
    assert to_deci("-0.5") == -5
    assert to_deci(-0.2) == -2
    assert to_deci("1") == 10
    for bad in ("0.25", "abc", "nan", True):
        with pytest.raises(ScoreFormatError):
            to_deci(bad)


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_deci_arithmetic_exact(a, b):
    assert (a + b) - b == a
    assert halve(2 * a) == a
    assert to_deci(format_deci(a)) == a


def test_format_deci():
    assert format_deci(-1150) == "-115.0"
    assert format_deci(5) == "0.5"
    assert format_deci(-5) == "-0.5"
    assert format_deci(0) == "0.0"


def test_blosum62_entries_and_stop_row():
    assert BLOSUM62["M"]["M"] == 5
    assert BLOSUM62["W"]["W"] == 11
    assert BLOSUM62["*"]["*"] == 1
    assert all(BLOSUM62["*"][aa] == -4 for aa in "ARNDCQEGHILKMFPSTWYV")
    assert load_matrix("BLOSUM62") is BLOSUM62


def test_parse_matrix_adds_stop_row_and_drops_extra_residues():
    letters = "ARNDCQEGHILKMFPSTWYVBZX"
    lines = ["   " + "  ".join(letters)]
    for a in letters:
        lines.append(a + " " + " ".join(str(2 if a == b else -1) for b in letters))
    m = parse_matrix("# comment\n" + "\n".join(lines))
    assert m["A"]["A"] == 2 and m["A"]["R"] == -1
    assert m["*"]["*"] == 1 and m["A"]["*"] == -4
    assert "B" not in m


def test_parse_matrix_rejects_asymmetry():
    text = BLOSUM62_lines(lambda a, b: 1 if (a, b) == ("A", "R") else 0)
    with pytest.raises(MatrixFormatError):
        parse_matrix(text)


def BLOSUM62_lines(fn):
    letters = "ARNDCQEGHILKMFPSTWYV"
    rows = ["  " + " ".join(letters)]
    rows += [a + " " + " ".join(str(fn(a, b)) for b in letters) for a in letters]
    return "\n".join(rows)


def test_params_validation():
    p = AlignParams.create()
    assert (p.fs_open_cost, p.fs_extend_cost, p.gap_open_cost, p.gap_cost) == (-300, -10, -110, -10)
    AlignParams.create(fs_extend=0)
    for bad in (dict(fs_open=0), dict(fs_extend=0.5), dict(gap=0), dict(gap_open=1),
                dict(nt_match=0.5), dict(gap_model="cubic")):
        with pytest.raises(ValueError):
            AlignParams.create(**bad)


def test_params_substitution_scores():
    p = AlignParams.create()
    assert p.s_aa("ATG", "ATG") == 50
    assert p.s_aa("CTT", "CTG") == p.s_aa("CTT", "CTT") == 40
    assert p.s_aa("TAA", "TAG") == 10
    assert p.s_an("A", "A") == 10 and p.s_an("A", "C") == -10
