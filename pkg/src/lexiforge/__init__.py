"""Derive non-native (Indian) English pronunciation lexicons.

The pipeline: load a CMU-format dictionary, align each word's letters
with its phones, syllabify, apply context-sensitive substitution rules,
and map everything else into the merged CMU/CLS phone inventory.
Transliteration-derived CLS pronunciations feed the rule-derivation
side: three-way alignments and ambiguity clusters.
"""

from .align import (
    AlignedWord,
    EquivalenceSet,
    Triplet,
    align_lexicon,
    align_pair,
    align_three_way,
    default_equivalences,
    read_alignment_dump,
    write_alignment_dump,
)
from .analysis import (
    AmbiguityCluster,
    CoverageReport,
    coverage_stats,
    detect_ambiguities,
    select_words,
)
from .deva import devanagari_to_cls, load_akshara_map, translit_lexicon
from .errors import LexiforgeError
from .lexicon import Lexicon, PronEntry, read_cmu_dict, read_translit_tsv, write_lexicon
from .letters import LetterUnit, group_letters
from .phoneset import PhoneSymbol, Phoneset, default_phoneset, load_inventories
from .rules import (
    Rule,
    RuleMatch,
    RuleSet,
    apply_rules,
    default_rules,
    make_rule,
    match_rule,
    parse_rules,
    what_if,
)
from .syllables import SyllabifiedPron, position_in_syllable, syllabify

__version__ = "0.1.0"

__all__ = [
    "AlignedWord",
    "AmbiguityCluster",
    "CoverageReport",
    "EquivalenceSet",
    "LetterUnit",
    "Lexicon",
    "LexiforgeError",
    "PhoneSymbol",
    "Phoneset",
    "PronEntry",
    "Rule",
    "RuleMatch",
    "RuleSet",
    "SyllabifiedPron",
    "Triplet",
    "align_lexicon",
    "align_pair",
    "align_three_way",
    "apply_rules",
    "coverage_stats",
    "default_equivalences",
    "default_phoneset",
    "default_rules",
    "detect_ambiguities",
    "devanagari_to_cls",
    "group_letters",
    "load_akshara_map",
    "load_inventories",
    "make_rule",
    "match_rule",
    "parse_rules",
    "position_in_syllable",
    "read_alignment_dump",
    "read_cmu_dict",
    "read_translit_tsv",
    "select_words",
    "syllabify",
    "translit_lexicon",
    "what_if",
    "write_alignment_dump",
    "write_lexicon",
]
