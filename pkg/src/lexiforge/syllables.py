"""Syllable boundaries for CMU phone sequences.

Maximal-onset parsing over an explicit onset whitelist: every vowel
phone is a nucleus, each inter-vowel consonant cluster is split so that
the longest whitelisted onset goes with the following nucleus, and the
word-initial/final consonant runs attach to the first/last syllable
outright.  This stands in for an external syllabifier, so the whitelist
below is the single place where English onset phonotactics live.

>>> s = syllabify(["S", "AY", "T", "AH", "D"])
>>> to_brackets(s)
'[S AY] [T AH D]'
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NoNucleus

# The 15 ARPAbet vowels.  ER is a nucleus (the r-colored vowel), which is
# why it never appears in the onset table.
VOWELS = frozenset(
    "AA AE AH AO AW AY EH ER EY IH IY OW OY UH UW".split()
)

CONSONANTS = frozenset(
    "B CH D DH F G HH JH K L M N NG P R S SH T TH V W Y Z ZH".split()
)

# Legal syllable onsets.  All single consonants are permitted; clusters
# follow standard English phonotactics (s-clusters, stop+liquid/glide,
# fricative+liquid/glide, and the s+stop+liquid/glide triples).
_ONSET_CLUSTERS = """
P L | P R | P Y
B L | B R | B Y
T R | T W | T Y
D R | D W | D Y
K L | K R | K W | K Y
G L | G R | G W
F L | F R | F Y
V Y
TH R | TH W
SH L | SH M | SH N | SH R | SH W
S F | S K | S L | S M | S N | S P | S T | S V | S W
HH Y | M Y
S K L | S K R | S K W | S K Y
S P L | S P R | S P Y
S T R | S T Y
"""

ONSETS = frozenset((c,) for c in CONSONANTS) | frozenset(
    tuple(cluster.split())
    for cluster in _ONSET_CLUSTERS.replace("\n", "|").split("|")
    if cluster.strip()
)

_MAX_ONSET = max(len(o) for o in ONSETS)


class SyllabifiedPron(NamedTuple):
    """Phones plus [start, end) index ranges, one per syllable.

    has_nucleus is False for vowel-free sequences, which are kept as a
    single pseudo-syllable so batch pipelines can flag and continue.
    """

    phones: tuple
    boundaries: tuple
    has_nucleus: bool = True


def syllabify(phones, strict=False):
    """Split a stress-free CMU phone sequence into syllables.

    A sequence without any vowel cannot be syllabified; by default it
    comes back flagged as one pseudo-syllable, with strict=True it
    raises NoNucleus instead.
    """
    phones = tuple(phones)
    nuclei = [i for i, p in enumerate(phones) if p in VOWELS]
    if not nuclei:
        if strict:
            raise NoNucleus(f"no vowel in {' '.join(phones) or '(empty)'}")
        bounds = ((0, len(phones)),) if phones else ()
        return SyllabifiedPron(phones, bounds, has_nucleus=False)

    # Cut points: one between each pair of adjacent nuclei.  The cluster
    # between them is split so its longest whitelisted suffix becomes the
    # next syllable's onset.
    cuts = [0]
    for left, right in zip(nuclei, nuclei[1:]):
        cluster_start, cluster_end = left + 1, right
        cut = cluster_end
        for k in range(min(_MAX_ONSET, cluster_end - cluster_start), 0, -1):
            if phones[cluster_end - k : cluster_end] in ONSETS:
                cut = cluster_end - k
                break
        cuts.append(cut)
    cuts.append(len(phones))
    boundaries = tuple(zip(cuts, cuts[1:]))
    return SyllabifiedPron(phones, boundaries)


START = "start"
END = "end"
INTERNAL = "internal"


def position_in_syllable(pron, index):
    """Position label of the phone at index: start, end or internal.

    A phone that is both first and last of its syllable counts as end.
    Raises IndexError for an index outside the sequence.
    """
    if not 0 <= index < len(pron.phones):
        raise IndexError(f"phone index {index} out of range")
    for start, end in pron.boundaries:
        if start <= index < end:
            if index == end - 1:
                return END
            if index == start:
                return START
            return INTERNAL
    raise IndexError(f"phone index {index} not covered by any syllable")


def to_brackets(pron):
    """Bracket notation used in dumps: one [ ... ] group per syllable."""
    return " ".join(
        "[" + " ".join(pron.phones[s:e]) + "]" for s, e in pron.boundaries
    )
