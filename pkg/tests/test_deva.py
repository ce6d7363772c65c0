"""Devanagari to CLS conversion: schwa rules, matras, nukta, anusvara."""

import unicodedata

import pytest

from lexiforge.deva import (
    convert_word,
    default_akshara_map,
    devanagari_to_cls,
    load_akshara_map,
    translit_lexicon,
)
from lexiforge.errors import ConfigError, UnmappedCodepoint
from lexiforge.lexicon import TranslitPair
from lexiforge.phoneset import default_phoneset


@pytest.mark.parametrize(
    "text,phones",
    [
        ("स्कूल", ["s", "k", "uu", "l"]),      # virama kills the schwa
        ("की", ["k", "ii"]),                   # matra replaces it
        ("क", ["k"]),                          # word-final schwa dropped
        ("साइटेड", ["s", "aa", "i", "tx", "ee", "dx"]),
        ("हिंदी", ["h", "i", "mq", "d", "ii"]),  # anusvara
    ],
)
def test_conversion(text, phones):
    got, flagged = convert_word(text)
    assert got == phones
    assert not flagged


def test_medial_schwa_kept_and_flagged():
    phones, flagged = convert_word("डॉक्टर")
    assert phones == ["dx", "o", "k", "tx", "a", "r"]
    assert flagged


def test_nukta_combining_equals_precomposed():
    combining = "क़"  # ka + nukta
    precomposed = unicodedata.normalize("NFC", combining)
    assert convert_word(combining) == convert_word(precomposed) == (["q"], False)


def test_unmapped_codepoint_reports_offset():
    with pytest.raises(UnmappedCodepoint) as exc:
        convert_word("कQ")
    assert exc.value.char == "Q"
    assert exc.value.offset == 1
    assert "U+0051" in str(exc.value)


def test_multiword_string():
    phones = [p.label for p in devanagari_to_cls("की स्कूल")]
    assert phones == ["k", "ii", "s", "k", "uu", "l"]


def test_phones_belong_to_cls(phoneset):
    inv = phoneset.inventory("cls")
    for text in ["स्कूल", "साइटेड", "डॉक्टर", "हिंदी"]:
        phones, _ = convert_word(text)
        for p in phones:
            assert p in inv


def test_translit_lexicon_collects_notes():
    pairs = [
        TranslitPair("CITED", "साइटेड"),
        TranslitPair("DOCTOR", "डॉक्टर"),
    ]
    lex, notes = translit_lexicon(pairs)
    assert lex.lookup("cited").phones == ("s", "aa", "i", "tx", "ee", "dx")
    assert lex.lookup("doctor").phones == ("dx", "o", "k", "tx", "a", "r")
    assert notes == [("DOCTOR", "medial inherent schwa")]


def test_translit_lexicon_strict_vs_lenient():
    pairs = [TranslitPair("BAD", "कQ"), TranslitPair("GOOD", "की")]
    with pytest.raises(UnmappedCodepoint):
        translit_lexicon(pairs, strict=True)
    lex, notes = translit_lexicon(pairs, strict=False)
    assert "GOOD" in lex and "BAD" not in lex


def test_akshara_map_contents(phoneset):
    amap = default_akshara_map(phoneset)
    assert amap.consonants["क"] == "k"
    assert amap.matras["ी"] == "ii"
    assert amap.virama_chars == {"्"}


def test_akshara_map_rejects_unknown_phone():
    text = "[consonant]\nक zz99\n[sign]\n् virama\n"
    with pytest.raises(ConfigError) as exc:
        load_akshara_map(text, default_phoneset())
    assert "zz99" in str(exc.value)


def test_akshara_map_requires_virama():
    with pytest.raises(ConfigError):
        load_akshara_map("[consonant]\nक k\n", default_phoneset())
