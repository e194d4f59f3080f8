import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from echopart import (
    BFile,
    Family,
    PUBLISHED_MOD3_TERMS,
    PUBLISHED_MOD6_TERMS,
    compare_bfile,
    compare_published,
    direct_counts_upto,
    parse_bfile,
    read_bfile,
    remark_comparisons,
    render_bfile,
    write_bfile,
)

FIXTURES = Path(__file__).parent / "fixtures"


def test_render_format():
    assert render_bfile(BFile(offset=1, values=(0, 1))) == "1 0\n2 1\n"
    assert render_bfile(BFile(offset=-2, values=(5,))) == "-2 5\n"


def test_parse_basic():
    b = parse_bfile("0 1\n1 4\n2 9\n")
    assert b.offset == 0
    assert b.values == (1, 4, 9)
    assert b.terms() == [(0, 1), (1, 4), (2, 9)]


def test_parse_skips_comments_and_blanks():
    b = parse_bfile("# header\n\n3 7\n4 8\n# trailing\n")
    assert b.offset == 3
    assert b.values == (7, 8)


def test_parse_accepts_crlf():
    assert parse_bfile("1 2\r\n2 3\r\n") == parse_bfile("1 2\n2 3\n")


def test_parse_rejects_malformed_with_line_number():
    with pytest.raises(ValueError, match="line 2"):
        parse_bfile("1 2\n1  2\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_bfile("a b\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_bfile("# ok\n5 5\nnope\n")


def test_parse_rejects_non_contiguous_indices():
    with pytest.raises(ValueError, match="line 2.*non-contiguous"):
        parse_bfile("1 5\n3 6\n")


def test_parse_rejects_empty_input():
    with pytest.raises(ValueError):
        parse_bfile("# only a comment\n")
    with pytest.raises(ValueError):
        BFile(offset=0, values=())


def test_file_round_trip(tmp_path):
    b = BFile(offset=5, values=(1, -2, 3))
    path = tmp_path / "b.txt"
    write_bfile(b, path)
    assert path.read_bytes() == b"5 1\n6 -2\n7 3\n"
    assert read_bfile(path) == b


@given(
    offset=st.integers(min_value=-5, max_value=100),
    values=st.lists(st.integers(min_value=-(10**9), max_value=10**9), min_size=1, max_size=50),
)
@settings(max_examples=80)
def test_round_trip_property(offset, values):
    b = BFile(offset=offset, values=tuple(values))
    assert parse_bfile(render_bfile(b)) == b


def test_compare_bfile_full_match():
    coeffs = direct_counts_upto(Family.PLAIN, 80)
    b = read_bfile(FIXTURES / "b000065.txt")
    comparison = compare_bfile("fixture", b, coeffs)
    h1, h2 = comparison.hypotheses
    assert h1.label == "H1"
    assert h1.verdict == "full match"
    assert h1.covered == h1.total_terms == 41
    # the fixture lists zeros, so the nonzero pairing cannot line up
    assert h2.verdict != "full match"


def test_compare_bfile_skips_out_of_range():
    coeffs = direct_counts_upto(Family.PLAIN, 20)
    b = read_bfile(FIXTURES / "b000065.txt")
    h1 = compare_bfile("fixture", b, coeffs).hypotheses[0]
    assert h1.total_terms == 41
    assert h1.covered == 11  # indices 0..10 map to n = 0..20
    assert h1.verdict == "full match"


def test_compare_bfile_detects_divergence():
    coeffs = direct_counts_upto(Family.PLAIN, 20)
    b = BFile(offset=0, values=(0, 0, 1, 2, 5))
    h1 = compare_bfile("bad", b, coeffs).hypotheses[0]
    assert h1.verdict == "partial match (first divergence at term 4)"
    bad = h1.records[4]
    assert bad.n == 8 and bad.reference == 5 and bad.computed == 4


def test_compare_published_alignments():
    # coefficients with first nonzero at n=4: H1 walks 4, 6, 8, ...
    coeffs = [0, 0, 0, 0, 1, 0, 2, 0, 3, 0, 4]
    comparison = compare_published("toy", (1, 2, 3, 4), coeffs)
    h1, h2 = comparison.hypotheses
    assert [r.n for r in h1.records] == [4, 6, 8, 10]
    assert h1.verdict == "full match"
    assert [r.n for r in h2.records] == [4, 6, 8, 10]
    assert h2.verdict == "full match"


def test_compare_published_uncovered_terms():
    coeffs = [0, 0, 1]
    comparison = compare_published("toy", (1, 1, 1), coeffs)
    h1, h2 = comparison.hypotheses
    assert h1.covered == 1 and h1.total_terms == 3
    assert h2.covered == 1
    assert h1.verdict == "full match"


def test_compare_published_nothing_to_align():
    comparison = compare_published("toy", (1, 2), [0, 0, 0])
    for hyp in comparison.hypotheses:
        assert hyp.covered == 0
        assert hyp.verdict == "no match"


def test_published_term_lists():
    assert len(PUBLISHED_MOD3_TERMS) == 25
    assert len(PUBLISHED_MOD6_TERMS) == 25
    assert PUBLISHED_MOD3_TERMS[:10] == (1, 1, 1, 2, 2, 2, 3, 3, 4, 6)
    assert PUBLISHED_MOD6_TERMS[:6] == (1, 1, 1, 1, 1, 2)


def test_remark_comparisons_structure():
    seq1, seq2 = remark_comparisons()
    assert seq1.name == "Sequence 1 (mod3)"
    assert seq2.name == "Sequence 2 (mod6)"
    for comparison, reference, family in (
        (seq1, PUBLISHED_MOD3_TERMS, Family.MOD3),
        (seq2, PUBLISHED_MOD6_TERMS, Family.MOD6),
    ):
        coeffs = direct_counts_upto(family, 120)
        assert [h.label for h in comparison.hypotheses] == ["H1", "H2"]
        for hyp in comparison.hypotheses:
            assert hyp.covered == hyp.total_terms == 25
            for record in hyp.records:
                assert record.reference == reference[record.position]
                assert record.computed == coeffs[record.n]


def test_remark_comparisons_are_deterministic():
    a = [c.to_json_dict() for c in remark_comparisons()]
    b = [c.to_json_dict() for c in remark_comparisons()]
    assert json.dumps(a) == json.dumps(b)


def test_remark_verdicts_report_divergence_as_finding():
    """The published lists do not align perfectly under either hypothesis;
    the comparison must say exactly where, not hide it."""
    seq1, seq2 = remark_comparisons()
    assert seq1.hypotheses[0].verdict == "partial match (first divergence at term 1)"
    assert seq1.hypotheses[1].verdict == "partial match (first divergence at term 2)"
    assert seq2.hypotheses[0].verdict == "partial match (first divergence at term 4)"
    assert seq2.hypotheses[1].verdict == "partial match (first divergence at term 4)"
