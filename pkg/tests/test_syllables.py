"""Syllabification: nucleus counting, onset legality, position labels."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexiforge.errors import NoNucleus
from lexiforge.syllables import (
    END,
    INTERNAL,
    ONSETS,
    START,
    VOWELS,
    position_in_syllable,
    syllabify,
    to_brackets,
)

CONSONANTS = ["B", "CH", "D", "DH", "F", "G", "HH", "JH", "K", "L", "M",
              "N", "NG", "P", "R", "S", "SH", "T", "TH", "V", "W", "Y",
              "Z", "ZH"]


@pytest.mark.parametrize(
    "phones,brackets",
    [
        (("S", "AY", "T", "AH", "D"), "[S AY] [T AH D]"),
        (("K", "AO", "L", "D"), "[K AO L D]"),
        (("AH", "B", "AW", "T"), "[AH] [B AW T]"),
        (("D", "AA", "K", "T", "ER"), "[D AA K] [T ER]"),
        (("AH",), "[AH]"),
    ],
)
def test_examples(phones, brackets):
    assert to_brackets(syllabify(phones)) == brackets


def test_syllable_count_equals_vowel_count():
    phones = ("IH", "N", "T", "ER", "AE", "K", "SH", "AH", "N")
    pron = syllabify(phones)
    assert len(pron.boundaries) == sum(p in VOWELS for p in phones)


def test_boundaries_partition_phones():
    pron = syllabify(("S", "T", "EY", "SH", "AH", "N"))
    cuts = [b for b, _ in pron.boundaries] + [pron.boundaries[-1][1]]
    assert cuts[0] == 0 and cuts[-1] == len(pron.phones)
    assert all(a < b for a, b in pron.boundaries)


def test_onsets_are_whitelisted():
    # EXTRA-like cluster: K S T R between nuclei; S T R is the longest
    # whitelisted suffix so only K stays as the first syllable's coda.
    pron = syllabify(("EH", "K", "S", "T", "R", "AH"))
    assert to_brackets(pron) == "[EH K] [S T R AH]"
    for start, end in pron.boundaries[1:]:
        span = pron.phones[start:end]
        nuc = next(i for i, p in enumerate(span) if p in VOWELS)
        onset = tuple(span[:nuc])
        assert onset == () or onset in ONSETS


def test_vowel_free_flagged_by_default():
    pron = syllabify(("S", "T"))
    assert not pron.has_nucleus
    assert pron.boundaries == ((0, 2),)


def test_vowel_free_strict_raises():
    with pytest.raises(NoNucleus):
        syllabify(("S", "T"), strict=True)


def test_empty_sequence():
    pron = syllabify(())
    assert not pron.has_nucleus
    assert pron.boundaries == ()


def test_position_labels():
    pron = syllabify(("S", "AY", "T", "AH", "D"))  # [S AY][T AH D]
    assert position_in_syllable(pron, 0) == START
    assert position_in_syllable(pron, 1) == END
    assert position_in_syllable(pron, 2) == START
    assert position_in_syllable(pron, 3) == INTERNAL
    assert position_in_syllable(pron, 4) == END


def test_singleton_syllable_counts_as_end():
    pron = syllabify(("AH", "B", "AW", "T"))
    assert position_in_syllable(pron, 0) == END


def test_position_out_of_range():
    pron = syllabify(("AH",))
    with pytest.raises(IndexError):
        position_in_syllable(pron, 5)


PHONE = st.sampled_from(sorted(VOWELS) + CONSONANTS)


@given(st.lists(PHONE, min_size=1, max_size=14))
@settings(max_examples=300, deadline=None)
def test_conservation_property(phones):
    phones = tuple(phones)
    pron = syllabify(phones)
    assert pron.phones == phones
    nvowels = sum(p in VOWELS for p in phones)
    if nvowels == 0:
        assert not pron.has_nucleus
        return
    # one syllable per nucleus, contiguous cover, legal onsets
    assert len(pron.boundaries) == nvowels
    flat = []
    for k, (start, end) in enumerate(pron.boundaries):
        flat.extend(range(start, end))
        span = phones[start:end]
        assert sum(p in VOWELS for p in span) == 1
        # the whitelist governs cut placement, so it binds every
        # syllable except the first (which must absorb any initial
        # cluster the word happens to start with)
        if k > 0:
            nuc = next(i for i, p in enumerate(span) if p in VOWELS)
            onset = tuple(span[:nuc])
            assert onset == () or onset in ONSETS
    assert flat == list(range(len(phones)))
