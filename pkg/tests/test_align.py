"""Pairwise and three-way alignment against a brute-force oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexiforge.align import (
    align_pair,
    align_three_way,
    default_equivalences,
    format_alignment,
    read_alignment_dump,
    write_alignment_dump,
)
from lexiforge.errors import ParseError
from lexiforge.phoneset import default_phoneset

from oracle_align import LETTER_POOL, brute_best, random_pairs


def test_single_letter_matches_its_phone(equiv):
    got = align_pair(("p",), ("P",), equiv.letter_cmu)
    assert got.cost == 0
    assert got.columns == (("p", "P"),)


def test_identity_is_free(equiv):
    got = align_pair(("K", "AO", "L", "D"), ("K", "AO", "L", "D"), equiv.letter_cmu)
    assert got.cost == 0
    assert all(a == b for a, b in got.columns)


def test_called_pairwise(equiv):
    got = align_pair(("c", "a", "ll", "e", "d"), ("K", "AO", "L", "D"), equiv.letter_cmu)
    assert got.cost == 2
    assert got.columns == (
        ("c", "K"),
        ("a", "AO"),
        ("ll", "L"),
        ("e", None),
        ("d", "D"),
    )


def test_called_three_way(equiv):
    aw = align_three_way("called", ("K", "AO", "L", "D"), ("k", "o", "l", "d"), equiv)
    assert aw.word == "CALLED"
    assert aw.cost == 2
    rows = [(t.letter.text if t.letter else None, t.cmu, t.cls) for t in aw.columns]
    assert rows == [
        ("c", "K", "k"),
        ("a", "AO", "o"),
        ("ll", "L", "l"),
        ("e", None, None),
        ("d", "D", "d"),
    ]


def test_three_way_single_letter(equiv):
    # "a" vs AH is a paid substitution (vowel letters are not in the
    # equivalence table); AH vs ax is free via the merge pairs.
    aw = align_three_way("a", ("AH",), ("ax",), equiv)
    assert aw.cost == 1
    assert len(aw.columns) == 1
    assert aw.columns[0].cmu == "AH" and aw.columns[0].cls == "ax"


def test_three_way_preserves_phone_order(equiv):
    aw = align_three_way("doctor", ("D", "AA", "K", "T", "ER"), ("d", "aa", "k", "t", "a", "r"), equiv)
    cmu = [t.cmu for t in aw.columns if t.cmu is not None]
    cls = [t.cls for t in aw.columns if t.cls is not None]
    assert cmu == ["D", "AA", "K", "T", "ER"]
    assert cls == ["d", "aa", "k", "t", "a", "r"]


def _random_pairs(count, seed):
    ps = default_phoneset()
    equiv = default_equivalences().letter_cmu
    return random_pairs(count, seed, equiv, list(ps.inventory("cmu").members))


def test_matches_brute_force_oracle(equiv):
    # A slice of the larger sweep in the acceptance suite.
    for src, dst in _random_pairs(800, seed=7):
        want_cost, want_cols = brute_best(src, dst, equiv.letter_cmu)
        got = align_pair(src, dst, equiv.letter_cmu)
        assert got.cost == want_cost, (src, dst)
        assert got.columns == want_cols, (src, dst)


@given(
    st.lists(st.sampled_from(LETTER_POOL), min_size=1, max_size=6),
    st.lists(st.sampled_from(["K", "AO", "L", "D", "AH", "T", "S"]), min_size=1, max_size=6),
)
@settings(max_examples=150, deadline=None)
def test_cost_bounds_and_projection(src, dst):
    equiv = default_equivalences()
    got = align_pair(tuple(src), tuple(dst), equiv.letter_cmu)
    # cost never exceeds all-gaps and never goes negative
    assert 0 <= got.cost <= len(src) + len(dst)
    # projecting the columns back recovers both sequences in order
    assert [a for a, _ in got.columns if a is not None] == list(src)
    assert [b for _, b in got.columns if b is not None] == list(dst)
    # no column is a double gap
    assert all(a is not None or b is not None for a, b in got.columns)


def test_widening_equivalences_never_raises_cost(equiv):
    base = equiv.letter_cmu
    for src, dst in _random_pairs(120, seed=11):
        wider = set(base) | {(src[0], d) for d in dst}
        assert align_pair(src, dst, wider).cost <= align_pair(src, dst, base).cost


def test_empty_sequence_rejected(equiv):
    with pytest.raises(Exception):
        align_pair((), ("K",), equiv.letter_cmu)


def test_format_alignment():
    equiv = default_equivalences()
    aw = align_three_way("called", ("K", "AO", "L", "D"), ("k", "o", "l", "d"), equiv)
    assert format_alignment(aw) == "CALLED\tc|K|k a|AO|o ll|L|l e|_|_ d|D|d"


def test_dump_roundtrip(equiv):
    words = [
        align_three_way("called", ("K", "AO", "L", "D"), ("k", "o", "l", "d"), equiv),
        align_three_way("cited", ("S", "AY", "T", "AH", "D"), ("s", "ai", "t", "ee", "d"), equiv),
    ]
    back = read_alignment_dump(write_alignment_dump(words), equiv)
    assert [w.columns for w in back] == [w.columns for w in words]
    assert [w.cost for w in back] == [w.cost for w in words]


def test_dump_rejects_malformed_record(equiv):
    with pytest.raises(ParseError):
        read_alignment_dump("CALLED\tc|K\tstray-field\n", equiv)
    with pytest.raises(ParseError):
        read_alignment_dump("CALLED\tc|K|k|extra\n", equiv)
