"""Group a word's letters into the units that align against phones.

English orthography spells many single sounds with two letters, so
aligning raw characters against phones wastes most of the alignment
budget on spurious gaps.  The grouping here is a small fixed heuristic,
applied greedily left to right:

  1. one of the digraphs ph ch ng sh th er ow
  2. a doubled consonant (two identical letters, neither a vowel)
  3. a vowel followed by one of a e i o u y
  4. otherwise a single letter

Units never exceed two characters and concatenating them restores the
word exactly.

>>> [u.text for u in group_letters("called")]
['c', 'a', 'll', 'e', 'd']
>>> [u.text for u in group_letters("caller")]
['c', 'a', 'll', 'er']
>>> [u.text for u in group_letters("phoneme")]
['ph', 'o', 'n', 'e', 'm', 'e']
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import EmptyWord

DIGRAPHS = ("ph", "ch", "ng", "sh", "th", "er", "ow")
VOWELS = frozenset("aeiou")
_VOWEL_TAILS = frozenset("aeiouy")
_DIGRAPH_SET = frozenset(DIGRAPHS)


class LetterUnit(NamedTuple):
    """A maximal letter group with its [start, end) span in the word."""

    text: str
    start: int
    end: int


def group_letters(word):
    """Split a word into letter units.

    The word is lowercased first; units carry offsets into the original
    string.  Raises EmptyWord for an empty string.
    """
    if not word:
        raise EmptyWord("cannot group an empty word")
    lowered = word.lower()
    units = []
    i = 0
    n = len(lowered)
    while i < n:
        if i + 1 < n:
            a, b = lowered[i], lowered[i + 1]
            pair = a + b
            if (
                pair in _DIGRAPH_SET
                or (a == b and a not in VOWELS)
                or (a in VOWELS and b in _VOWEL_TAILS)
            ):
                units.append(LetterUnit(pair, i, i + 2))
                i += 2
                continue
        units.append(LetterUnit(lowered[i], i, i + 1))
        i += 1
    return units
