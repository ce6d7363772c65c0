"""Pronunciation lexicon containers and file I/O.

Two inputs share this module: pronouncing dictionaries in the plain-text
CMU format and transliteration lists in a two or three column TSV.

Dictionary format, one entry per line:

    ;;; free-form comment
    ABOUT  AH0 B AW1 T
    ABOUT(2)  ER0 B AW1 T

The word is uppercased, a ``(n)`` suffix marks the n-th variant, and the
rest of the line is phones with optional stress digits.  Stress is
dropped at load time; nothing downstream uses it.

Transliteration lines are ``WORD<TAB>devanagari`` with an optional third
column carrying a free-form flag that is preserved verbatim.
"""

from __future__ import annotations

import logging
import re
from typing import NamedTuple

from .errors import EncodingError, ParseError, UnknownPhone
from .phoneset import CMU, default_phoneset

log = logging.getLogger(__name__)

_VARIANT_RE = re.compile(r"^(.*)\((\d+)\)$")

# Devanagari block plus the zero-width joiners that legitimately appear
# inside conjuncts.  Spaces separate words in multi-word values.
_DEVA_OK = re.compile(r"^[ऀ-ॿ‌‍ ]+$")


class PronEntry(NamedTuple):
    """One pronunciation of one word.

    phones are bare labels, all drawn from the inventory recorded on the
    owning Lexicon.  variant is 1-based; 1 is the primary pronunciation.
    """

    word: str
    phones: tuple[str, ...]
    variant: int = 1


class TranslitPair(NamedTuple):
    word: str
    devanagari: str
    flag: str | None = None


class Lexicon:
    """An ordered word -> pronunciations mapping.

    Entries keep insertion order per word; iteration yields entries for
    all words.  len() counts entries, not words.
    """

    def __init__(self, inventory=CMU):
        self.inventory = inventory
        self._by_word: dict[str, list[PronEntry]] = {}

    def add(self, word, phones, variant=None):
        word = word.upper()
        bucket = self._by_word.setdefault(word, [])
        if variant is None:
            variant = len(bucket) + 1
        entry = PronEntry(word, tuple(phones), variant)
        bucket.append(entry)
        return entry

    def lookup(self, word):
        """Primary pronunciation of a word, or None."""
        bucket = self._by_word.get(word.upper())
        return bucket[0] if bucket else None

    def entries(self, word):
        """All variants of a word, primary first; empty tuple if absent."""
        return tuple(self._by_word.get(word.upper(), ()))

    def words(self):
        return self._by_word.keys()

    def __contains__(self, word):
        return word.upper() in self._by_word

    def __iter__(self):
        for bucket in self._by_word.values():
            yield from bucket

    def __len__(self):
        return sum(len(b) for b in self._by_word.values())

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return (
            self.inventory == other.inventory
            and list(self) == list(other)
        )


def read_cmu_dict(text, phoneset=None, strict=True, path=None):
    """Parse CMU dictionary text into a Lexicon of stress-free phones.

    strict raises ParseError on the first malformed line or unknown
    phone; lenient mode skips such lines and logs each one.
    """
    if phoneset is None:
        phoneset = default_phoneset()
    lex = Lexicon(CMU)
    # Memoize raw -> stripped label; the same few stressed forms repeat
    # hundreds of thousands of times across a large dictionary.
    strip_cache = {}
    skipped = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith(";;;"):
            continue
        # The sphinx "dict" flavor annotates entries with trailing
        # "# ..." comments; drop them before tokenizing.
        pos = line.find(" #")
        if pos > 0:
            line = line[:pos].rstrip()
        fields = line.split()
        if len(fields) < 2:
            if strict:
                raise ParseError("entry has no phones", path, lineno)
            log.warning("%s:%d: skipping entry with no phones", path, lineno)
            skipped += 1
            continue
        headword = fields[0].upper()
        variant = None
        m = _VARIANT_RE.match(headword)
        if m:
            headword, variant = m.group(1), int(m.group(2))
        try:
            phones = []
            for raw in fields[1:]:
                if not strict:
                    raw = raw.upper()
                label = strip_cache.get(raw)
                if label is None:
                    label = phoneset.strip_stress(raw).label
                    strip_cache[raw] = label
                phones.append(label)
        except UnknownPhone as exc:
            if strict:
                raise ParseError(str(exc), path, lineno) from exc
            log.warning("%s:%d: skipping entry: %s", path, lineno, exc)
            skipped += 1
            continue
        lex.add(headword, phones, variant)
    if skipped:
        log.warning("skipped %d malformed dictionary lines", skipped)
    return lex


def write_lexicon(lexicon):
    """Serialize a Lexicon to canonical dictionary text.

    Words are sorted, variants keep their order and are renumbered
    sequentially, the second and later ones getting a ``(n)`` suffix.
    Parsing the output reproduces the lexicon exactly.
    """
    lines = []
    for word in sorted(lexicon.words()):
        for i, entry in enumerate(lexicon.entries(word), 1):
            head = word if i == 1 else f"{word}({i})"
            lines.append(f"{head}  {' '.join(entry.phones)}")
    return "\n".join(lines) + ("\n" if lines else "")


def read_translit_tsv(text, strict=True, path=None):
    """Parse transliteration TSV into a list of TranslitPair.

    The Devanagari column must contain only Devanagari codepoints (plus
    ZWJ/ZWNJ and spaces); offending lines raise EncodingError in strict
    mode and are skipped otherwise.
    """
    pairs = []
    skipped = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) not in (2, 3) or not fields[0].strip() or not fields[1].strip():
            if strict:
                raise ParseError(
                    "expected WORD<TAB>devanagari with optional flag", path, lineno
                )
            log.warning("%s:%d: skipping malformed transliteration line", path, lineno)
            skipped += 1
            continue
        word, deva = fields[0].strip().upper(), fields[1].strip()
        flag = fields[2].strip() if len(fields) == 3 and fields[2].strip() else None
        if not _DEVA_OK.match(deva):
            if strict:
                raise EncodingError(
                    f"non-Devanagari text in column 2: {deva!r}", path, lineno
                )
            log.warning("%s:%d: skipping non-Devanagari value %r", path, lineno, deva)
            skipped += 1
            continue
        pairs.append(TranslitPair(word, deva, flag))
    if skipped:
        log.warning("skipped %d malformed transliteration lines", skipped)
    return pairs
