"""Devanagari to CLS grapheme-to-phoneme conversion.

Covers exactly what transliteration ingestion needs: each consonant
carries an inherent schwa ``a`` that a virama suppresses and a matra
replaces, independent vowels emit directly, and the word-final inherent
schwa is dropped (a lone consonant letter therefore yields just the
consonant).  Medial schwa deletion needs morphology this tool does not
attempt; words where a medial inherent schwa was emitted are flagged so
a curator can respell the transliteration (schwas forced by a following
anusvara or visarga are real and not flagged).

>>> [str(p) for p in devanagari_to_cls("स्कूल")]
['s', 'k', 'uu', 'l']
"""

from __future__ import annotations

import logging
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .errors import ConfigError, InvariantError, UnmappedCodepoint
from .lexicon import Lexicon
from .phoneset import CLS, PhoneSymbol, data_path, default_phoneset

log = logging.getLogger(__name__)

VIRAMA = "VIRAMA"
NUKTA = "NUKTA"

_SECTIONS = ("consonant", "vowel", "matra", "sign", "nukta")
INHERENT = "a"


@dataclass(frozen=True)
class AksharaMap:
    """Per-category Devanagari -> CLS tables."""

    consonants: dict
    vowels: dict
    matras: dict
    signs: dict
    nukta: dict

    @property
    def virama_chars(self):
        return frozenset(c for c, v in self.signs.items() if v == VIRAMA)

    @property
    def nukta_chars(self):
        return frozenset(c for c, v in self.signs.items() if v == NUKTA)


def load_akshara_map(text, phoneset=None):
    """Parse akshara config; every emitted label must be a CLS phone."""
    if phoneset is None:
        phoneset = default_phoneset()
    tables = {name: {} for name in _SECTIONS}
    current = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip().lower()
            if name not in tables:
                raise ConfigError(f"line {lineno}: unknown section [{name}]")
            current = name
            continue
        if current is None:
            raise ConfigError(f"line {lineno}: content before any section header")
        fields = line.split()
        if len(fields) != 2:
            raise ConfigError(f"line {lineno}: expected character and label")
        char, label = fields
        if len(char) != 1:
            raise ConfigError(f"line {lineno}: key {char!r} is not a single character")
        if char in tables[current]:
            raise InvariantError(f"line {lineno}: duplicate mapping for {char!r}")
        is_control = current == "sign" and label in (VIRAMA, NUKTA)
        if not is_control and label not in phoneset.cls:
            raise InvariantError(
                f"line {lineno}: {label!r} is not a CLS phone"
            )
        tables[current][char] = label
    amap = AksharaMap(
        consonants=tables["consonant"],
        vowels=tables["vowel"],
        matras=tables["matra"],
        signs=tables["sign"],
        nukta=tables["nukta"],
    )
    if not amap.virama_chars:
        raise InvariantError("no virama defined in [sign]")
    if INHERENT not in phoneset.cls:
        raise InvariantError(f"inherent vowel {INHERENT!r} missing from CLS")
    return amap


@lru_cache(maxsize=None)
def _load_default(resolved):
    return load_akshara_map(Path(resolved).read_text(encoding="utf-8"))


def default_akshara_map(phoneset=None):
    if phoneset is not None:
        text = Path(str(data_path("akshara.cfg"))).read_text(encoding="utf-8")
        return load_akshara_map(text, phoneset)
    return _load_default(str(data_path("akshara.cfg")))


def convert_word(text, amap=None):
    """Convert one Devanagari word; returns (labels, medial_schwa_seen).

    Words are NFD-normalized first so precomposed nukta letters become
    base + combining nukta.  Offsets in errors refer to the normalized
    text.  Space-separated input is handled word by word.
    """
    if amap is None:
        amap = default_akshara_map()
    labels = []
    medial = False
    norm = unicodedata.normalize("NFD", text)
    for word_start, word in _words(norm):
        pending = None  # (char, label) of a consonant awaiting its vowel
        for i, ch in enumerate(word):
            offset = word_start + i
            if ch in amap.virama_chars:
                if pending is None:
                    raise UnmappedCodepoint(ch, offset, text)
                labels.append(pending[1])
                pending = None
            elif ch in amap.nukta_chars:
                if pending is None:
                    raise UnmappedCodepoint(ch, offset, text)
                base = pending[0]
                pending = (base, amap.nukta.get(base, pending[1]))
            elif ch in amap.consonants:
                if pending is not None:
                    labels.append(pending[1])
                    labels.append(INHERENT)
                    medial = True
                pending = (ch, amap.consonants[ch])
            elif ch in amap.matras:
                if pending is None:
                    raise UnmappedCodepoint(ch, offset, text)
                labels.append(pending[1])
                labels.append(amap.matras[ch])
                pending = None
            elif ch in amap.vowels:
                if pending is not None:
                    labels.append(pending[1])
                    labels.append(INHERENT)
                    medial = True
                labels.append(amap.vowels[ch])
                pending = None
            elif ch in amap.signs:
                if pending is not None:
                    labels.append(pending[1])
                    labels.append(INHERENT)
                    pending = None
                labels.append(amap.signs[ch])
            else:
                raise UnmappedCodepoint(ch, offset, text)
        if pending is not None:
            # word-final inherent schwa is deleted
            labels.append(pending[1])
    return labels, medial


def _words(text):
    start = 0
    for chunk in text.split(" "):
        if chunk:
            yield start, chunk
        start += len(chunk) + 1


def devanagari_to_cls(text, amap=None):
    """CLS phone symbols for a Devanagari string."""
    labels, _ = convert_word(text, amap)
    return [PhoneSymbol(label, CLS) for label in labels]


def translit_lexicon(pairs, amap=None, strict=True):
    """Build a CLS lexicon from (word, devanagari) pairs.

    Returns the lexicon and a list of (word, note) advisories: words with
    an emitted medial schwa, and in lenient mode words that were skipped
    because conversion failed.
    """
    if amap is None:
        amap = default_akshara_map()
    lex = Lexicon(CLS)
    notes = []
    for pair in pairs:
        try:
            labels, medial = convert_word(pair.devanagari, amap)
        except UnmappedCodepoint as exc:
            if strict:
                raise
            log.warning("skipping %s: %s", pair.word, exc)
            notes.append((pair.word, f"skipped: {exc}"))
            continue
        if not labels:
            notes.append((pair.word, "skipped: empty conversion"))
            continue
        lex.add(pair.word, labels)
        if medial:
            notes.append((pair.word, "medial inherent schwa"))
    return lex, notes
