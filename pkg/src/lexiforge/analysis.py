"""Corpus-level analyses: word selection, ambiguity clusters, coverage.

Everything here is a pure aggregation over other modules' outputs, so
results are deterministic for a given corpus regardless of how the
per-word work was scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .rules import apply_rules
from .syllables import position_in_syllable, syllabify


def select_words(lex, freq_list, top_k, exclude=()):
    """Words of the lexicon among the top_k most frequent, in frequency
    order, minus an exclusion set (e.g. Indian-origin proper nouns)."""
    excluded = {w.upper() for w in exclude}
    seen = set()
    out = []
    for raw in freq_list[:top_k]:
        word = raw.upper()
        if word in seen or word in excluded or word not in lex:
            continue
        seen.add(word)
        out.append(word)
    return out


class Occurrence(NamedTuple):
    """One ambiguous alignment column, with its conditioning context."""

    word: str
    letter: str | None
    position: str | None
    left: str | None
    right: str | None


@dataclass(frozen=True)
class AmbiguityCluster:
    """A CMU phone aligned to two or more CLS phones across the corpus.

    targets maps each CLS label to its occurrences; iteration order is
    by falling occurrence count (ties by label).
    """

    source_cmu: str
    targets: dict

    @property
    def total(self):
        return sum(len(v) for v in self.targets.values())


def detect_ambiguities(alignments):
    """Find CMU phones mapped to multiple CLS phones, with context tallies.

    Works on derivation-time alignments (CLS side present).  Clusters
    come back sorted by total occurrences, largest first.
    """
    seen: dict = {}
    for aligned in alignments:
        cols = aligned.columns
        cmu_seq = tuple(c.cmu for c in cols if c.cmu is not None)
        syll = syllabify(cmu_seq) if cmu_seq else None
        cmu_idx = 0
        for i, col in enumerate(cols):
            if col.cmu is None:
                continue
            if col.cls is not None:
                position = (
                    position_in_syllable(syll, cmu_idx) if syll.has_nucleus else None
                )
                occ = Occurrence(
                    word=aligned.word,
                    letter=col.letter.text if col.letter else None,
                    position=position,
                    left=_adjacent_letter(cols, i, -1),
                    right=_adjacent_letter(cols, i, +1),
                )
                seen.setdefault(col.cmu, {}).setdefault(col.cls, []).append(occ)
            cmu_idx += 1
    clusters = []
    for cmu, targets in seen.items():
        if len(targets) < 2:
            continue
        ordered = dict(
            sorted(targets.items(), key=lambda kv: (-len(kv[1]), kv[0]))
        )
        clusters.append(
            AmbiguityCluster(cmu, {k: tuple(v) for k, v in ordered.items()})
        )
    clusters.sort(key=lambda c: (-c.total, c.source_cmu))
    return clusters


def _adjacent_letter(cols, i, step):
    j = i + step
    while 0 <= j < len(cols):
        if cols[j].letter is not None:
            return cols[j].letter.text
        j += step
    return None


_GAP = "_"


def format_clusters(clusters):
    """Line-oriented cluster report: cluster, target and occ records."""
    lines = []
    for c in clusters:
        lines.append(f"cluster\t{c.source_cmu}\ttotal\t{c.total}")
        for cls, occs in c.targets.items():
            lines.append(f"target\t{c.source_cmu}\t{cls}\t{len(occs)}")
            for o in occs:
                lines.append(
                    "occ\t{}\t{}\t{}\t{}\t{}\t{}\t{}".format(
                        c.source_cmu,
                        cls,
                        o.word,
                        o.letter or _GAP,
                        o.position or _GAP,
                        o.left or _GAP,
                        o.right or _GAP,
                    )
                )
    return "\n".join(lines) + ("\n" if lines else "")


class CoverageRow(NamedTuple):
    rule_id: str
    kind: str
    family: str
    words_changed: int
    percent: float


FAMILIES = ("prefix", "suffix", "sequence", "syllable")


@dataclass(frozen=True)
class CoverageReport:
    """Words changed per rule, per family, and overall.

    A word counts as changed by a rule if any of its variants logged a
    match of that rule; the total counts each word once no matter how
    many rules touched it.  Percentages are against distinct words.
    """

    lexicon_words: int
    rows: tuple
    families: tuple
    total_words: int
    total_percent: float

    def to_tsv(self):
        """Canonical machine-readable serialization (stable bytes)."""
        lines = [f"lexicon_words\t{self.lexicon_words}"]
        for r in self.rows:
            lines.append(
                f"rule\t{r.rule_id}\t{r.kind}\t{r.family}"
                f"\t{r.words_changed}\t{r.percent:.3f}"
            )
        for name, words, pct in self.families:
            lines.append(f"family\t{name}\t{words}\t{pct:.3f}")
        lines.append(f"total\t{self.total_words}\t{self.total_percent:.3f}")
        return "\n".join(lines) + "\n"

    def to_table(self):
        """Aligned human-readable table."""
        header = ("rule", "kind", "family", "words", "%")
        body = [
            (r.rule_id, r.kind, r.family, str(r.words_changed), f"{r.percent:.3f}")
            for r in self.rows
        ]
        body += [
            (f"[{name}]", "", "", str(words), f"{pct:.3f}")
            for name, words, pct in self.families
        ]
        body.append(("TOTAL", "", "", str(self.total_words), f"{self.total_percent:.3f}"))
        widths = [
            max(len(row[i]) for row in [header] + body) for i in range(len(header))
        ]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        lines = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
        lines += [fmt.format(*row) for row in body]
        return "\n".join(lines) + "\n"


def coverage_stats(lex, rules, phoneset=None):
    """Apply a RuleSet to a lexicon and tally the match log.

    Only genuine corrections are counted; words whose output differs
    from the input solely through the default merge mapping do not
    appear in the log at all.
    """
    n_words = len(lex.words()) or 1
    _, matches = apply_rules(lex, rules, phoneset)
    per_rule: dict = {}
    per_family: dict = {name: set() for name in FAMILIES}
    total = set()
    by_id = {r.id: r for r in rules}
    for m in matches:
        per_rule.setdefault(m.rule_id, set()).add(m.word)
        per_family[by_id[m.rule_id].family].add(m.word)
        total.add(m.word)
    rows = tuple(
        CoverageRow(
            r.id,
            r.kind,
            r.family,
            len(per_rule.get(r.id, ())),
            100.0 * len(per_rule.get(r.id, ())) / n_words,
        )
        for r in rules
    )
    families = tuple(
        (name, len(per_family[name]), 100.0 * len(per_family[name]) / n_words)
        for name in FAMILIES
    )
    return CoverageReport(
        lexicon_words=len(lex.words()),
        rows=rows,
        families=families,
        total_words=len(total),
        total_percent=100.0 * len(total) / n_words,
    )
