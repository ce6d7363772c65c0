"""Context-sensitive substitution rules and their application.

Three rule families rewrite spans of the letter/CMU alignment:

  Syllable  one letter unit + one CMU phone + a position constraint
            (start/end/anywhere within the phone's syllable)
  Sequence  a run of letter units, where `*` matches any single unit and
            carries that unit's default-mapped phones into the target
  Affix     literal letters anchored at the word edge, with the exact
            CMU phone run underneath

Rules are matched against the letter/CMU alignment only; the CLS side
that guided rule derivation is not needed to apply them.  Application
order is Affix, then Sequence, then Syllable, file order within a kind,
and a column is rewritten at most once (the earliest claim wins).
Phones untouched by any rule fall through to their merged-inventory
default, so the output lexicon is always in the common inventory.

Rules file line formats (shlex quoting, `#` comments):

    SYLL  <id> <letter> <cmu> <target> <start|end|anywhere>
    SEQ   <id> <letter-pattern> "<cmu phones>" "<target phones>"
    AFFIX <id> <prefix|suffix> <letters> "<cmu phones>" "<target phones>"

Target labels may be written in CMU, CLS or common spelling; they are
normalized through the merge table when parsed.
"""

from __future__ import annotations

import logging
import shlex
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from .align import AlignedWord, Triplet, align_pair, default_equivalences
from .errors import ArityMismatch, ParseError, RuleError, UnknownPhone
from .lexicon import Lexicon
from .letters import group_letters
from .phoneset import COMMON, data_path, default_phoneset
from .syllables import position_in_syllable, syllabify

log = logging.getLogger(__name__)

SYLLABLE = "syllable"
SEQUENCE = "sequence"
AFFIX = "affix"
KINDS = (SYLLABLE, SEQUENCE, AFFIX)

PREFIX = "prefix"
SUFFIX = "suffix"
POSITIONS = ("start", "end", "anywhere")

WILDCARD = "*"

_LINE_KINDS = {"SYLL": SYLLABLE, "SEQ": SEQUENCE, "AFFIX": AFFIX}
_LINE_WORDS = {SYLLABLE: "SYLL", SEQUENCE: "SEQ", AFFIX: "AFFIX"}


@dataclass(frozen=True)
class Rule:
    id: str
    kind: str
    letter_pattern: tuple
    source_phones: tuple
    target_phones: tuple
    position: str | None = None
    affix_side: str | None = None

    @property
    def family(self):
        """Reporting bucket: prefix, suffix, sequence or syllable."""
        return self.affix_side if self.kind == AFFIX else self.kind

    @cached_property
    def letters(self):
        return "".join(self.letter_pattern)


class RuleMatch(NamedTuple):
    """One accepted rewrite: columns [start, end) of the aligned word."""

    rule_id: str
    word: str
    start: int
    end: int
    before: tuple
    after: tuple


def format_match(m):
    """Match log line: word, rule, default phones, rewritten phones."""
    return f"{m.word}\t{m.rule_id}\t{' '.join(m.before)}\t{' '.join(m.after)}"


class RuleSet:
    """Ordered rule collection with unique ids."""

    def __init__(self, rules=()):
        rules = tuple(rules)
        seen = set()
        for rule in rules:
            if rule.id in seen:
                raise ParseError(f"duplicate rule id {rule.id!r}")
            seen.add(rule.id)
        self.rules = rules
        self._by_id = {r.id: r for r in rules}

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def get(self, rule_id):
        return self._by_id.get(rule_id)

    def in_application_order(self):
        """Affix rules first, then sequence, then syllable; file order
        within each kind."""
        order = {AFFIX: 0, SEQUENCE: 1, SYLLABLE: 2}
        return sorted(self.rules, key=lambda r: order[r.kind])

    def with_rule(self, rule):
        return RuleSet(self.rules + (rule,))

    def without(self, rule_id):
        if rule_id not in self._by_id:
            raise KeyError(rule_id)
        return RuleSet(tuple(r for r in self.rules if r.id != rule_id))


def _parse_letter_pattern(text, allow_wildcards):
    """Split a pattern like `*ul` into unit tokens (*, u, l).

    Literal chunks are segmented with the same grouping used on words,
    so a pattern is expressed in exactly the units it will meet.
    """
    if not text:
        raise ParseError("empty letter pattern")
    tokens = []
    i = 0
    while i < len(text):
        if text[i] == WILDCARD:
            if not allow_wildcards:
                raise ParseError(f"wildcard not allowed in {text!r}")
            tokens.append(WILDCARD)
            i += 1
            continue
        j = i
        while j < len(text) and text[j] != WILDCARD:
            j += 1
        chunk = text[i:j]
        if not all(c.isalpha() or c in "'-." for c in chunk):
            raise ParseError(f"letter pattern {text!r} has non-letter characters")
        tokens.extend(u.text for u in group_letters(chunk))
        i = j
    return tuple(tokens)


def make_rule(
    rule_id,
    kind,
    letter_pattern,
    source_phones,
    target_phones,
    position=None,
    affix_side=None,
    phoneset=None,
):
    """Validate and normalize one rule; the single constructor used by
    both the file parser and the HTTP API so error messages agree.

    letter_pattern is a string (pattern syntax for sequence rules, a
    literal for the others); phones may be strings or token sequences.
    """
    if phoneset is None:
        phoneset = default_phoneset()
    if not rule_id or any(c.isspace() for c in rule_id):
        raise ParseError(f"bad rule id {rule_id!r}")
    if kind not in KINDS:
        raise ParseError(f"unknown rule kind {kind!r}")

    if isinstance(source_phones, str):
        source_phones = source_phones.split()
    if isinstance(target_phones, str):
        target_phones = target_phones.split()
    if not source_phones or not target_phones:
        raise ParseError("source and target phones must be non-empty")

    source = tuple(phoneset.strip_stress(p).label for p in source_phones)
    target = []
    for tok in target_phones:
        if tok == WILDCARD:
            if kind != SEQUENCE:
                raise ParseError("wildcard targets are only valid in sequence rules")
            target.append(WILDCARD)
        else:
            target.append(phoneset.common_label(tok))
    target = tuple(target)

    pattern = _parse_letter_pattern(
        letter_pattern.lower(), allow_wildcards=kind == SEQUENCE
    )

    if kind == SYLLABLE:
        if len(pattern) != 1:
            raise ParseError(
                f"syllable rule letter {letter_pattern!r} is not a single unit"
            )
        if len(source) != 1 or len(target) != 1:
            raise ParseError("syllable rules take one source and one target phone")
        if position not in POSITIONS:
            raise ParseError(f"bad syllable position {position!r}")
        affix_side = None
    elif kind == SEQUENCE:
        wild_letters = sum(1 for t in pattern if t == WILDCARD)
        wild_target = sum(1 for t in target if t == WILDCARD)
        if wild_letters != wild_target:
            raise ArityMismatch(
                f"{wild_letters} wildcard unit(s) vs {wild_target} wildcard target(s)"
            )
        if len(pattern) == wild_letters:
            raise ParseError("sequence pattern needs at least one literal unit")
        position = None
        affix_side = None
    else:
        if WILDCARD in pattern:
            raise ParseError("affix letters must be literal")
        if affix_side not in (PREFIX, SUFFIX):
            raise ParseError(f"bad affix side {affix_side!r}")
        position = None

    return Rule(
        id=rule_id,
        kind=kind,
        letter_pattern=pattern,
        source_phones=source,
        target_phones=target,
        position=position,
        affix_side=affix_side,
    )


def parse_rules(text, phoneset=None, path=None):
    """Parse a rules file into a RuleSet."""
    if phoneset is None:
        phoneset = default_phoneset()
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        try:
            fields = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise ParseError(str(exc), path, lineno) from exc
        if not fields:
            continue
        head = fields[0].upper()
        if head not in _LINE_KINDS:
            raise ParseError(f"unknown rule kind {fields[0]!r}", path, lineno)
        kind = _LINE_KINDS[head]
        try:
            if kind == SYLLABLE:
                if len(fields) != 6:
                    raise ParseError("SYLL takes id, letter, cmu, target, position")
                rule = make_rule(
                    fields[1], kind, fields[2], fields[3], fields[4],
                    position=fields[5].lower(), phoneset=phoneset,
                )
            elif kind == SEQUENCE:
                if len(fields) != 5:
                    raise ParseError("SEQ takes id, letter pattern, cmu, target")
                rule = make_rule(
                    fields[1], kind, fields[2], fields[3], fields[4],
                    phoneset=phoneset,
                )
            else:
                if len(fields) != 6:
                    raise ParseError("AFFIX takes id, side, letters, cmu, target")
                rule = make_rule(
                    fields[1], kind, fields[3], fields[4], fields[5],
                    affix_side=fields[2].lower(), phoneset=phoneset,
                )
        except ParseError as exc:
            # UnknownPhone and ArityMismatch pass through untouched; only
            # structural errors get the file position attached here.
            if exc.lineno is not None:
                raise
            raise ParseError(str(exc), path, lineno) from exc
        rules.append(rule)
    return RuleSet(rules)


def serialize_rules(ruleset):
    """Rules file text that parses back to an equal RuleSet."""
    lines = []
    for r in ruleset:
        src = " ".join(r.source_phones)
        tgt = " ".join(r.target_phones)
        if r.kind == SYLLABLE:
            lines.append(
                f"SYLL {r.id} {r.letter_pattern[0]} {src} {tgt} {r.position}"
            )
        elif r.kind == SEQUENCE:
            pat = "".join(r.letter_pattern)
            lines.append(f'SEQ {r.id} {pat} "{src}" "{tgt}"')
        else:
            lines.append(f'AFFIX {r.id} {r.affix_side} {r.letters} "{src}" "{tgt}"')
    return "\n".join(lines) + ("\n" if lines else "")


@lru_cache(maxsize=None)
def _load_default(resolved):
    from pathlib import Path

    return parse_rules(Path(resolved).read_text(encoding="utf-8"), path=resolved)


def default_rules():
    """The packaged rule file (or the LEXIFORGE_CONFIG override)."""
    return _load_default(str(data_path("rules.default")))


# -- matching ---------------------------------------------------------------


class _WordView:
    """Per-word indexes shared by all rule kinds.

    Column ownership: unit i owns its own column plus any phone-only
    columns up to the next unit's column; leading phone-only columns
    belong to the first unit.  Spans of letter ranges therefore cover
    every column exactly once.
    """

    def __init__(self, aligned, syll, phoneset):
        self.aligned = aligned
        self.syll = syll
        self.phoneset = phoneset
        cols = aligned.columns
        self.ncols = len(cols)
        self.units = []
        self.unit_cols = []
        self.cmu_pos = [None] * self.ncols  # index into the phone sequence
        k = 0
        for i, col in enumerate(cols):
            if col.letter is not None:
                self.units.append(col.letter)
                self.unit_cols.append(i)
            if col.cmu is not None:
                self.cmu_pos[i] = k
                k += 1
        n = len(self.units)
        self.starts = [0] * n
        self.ends = [0] * n
        for u in range(n):
            self.starts[u] = 0 if u == 0 else self.unit_cols[u]
            self.ends[u] = self.unit_cols[u + 1] if u + 1 < n else self.ncols
        self._suffix_map = None
        self._prefix_map = None

    def suffix_starts(self):
        """Map of every tail unit concatenation to its first unit index."""
        if self._suffix_map is None:
            m = {}
            tail = ""
            for u in range(len(self.units) - 1, -1, -1):
                tail = self.units[u].text + tail
                m[tail] = u
            self._suffix_map = m
        return self._suffix_map

    def prefix_ends(self):
        """Map of every head unit concatenation to its last unit index."""
        if self._prefix_map is None:
            m = {}
            head = ""
            for u, unit in enumerate(self.units):
                head += unit.text
                m[head] = u
            self._prefix_map = m
        return self._prefix_map

    def phones_in(self, start, end):
        return tuple(
            col.cmu for col in self.aligned.columns[start:end] if col.cmu is not None
        )

    def defaults_in(self, start, end):
        common = self.phoneset.common_label
        return tuple(
            common(col.cmu)
            for col in self.aligned.columns[start:end]
            if col.cmu is not None
        )

    def position_of_col(self, i):
        pos = self.cmu_pos[i]
        if pos is None:
            return None
        return position_in_syllable(self.syll, pos)


def _match_syllable(rule, view):
    out = []
    pat = rule.letter_pattern[0]
    src = rule.source_phones[0]
    tgt = rule.target_phones
    for i, col in enumerate(view.aligned.columns):
        if col.letter is None or col.cmu is None:
            continue
        if col.letter.text != pat or col.cmu != src:
            continue
        if rule.position != "anywhere" and view.position_of_col(i) != rule.position:
            continue
        before = (view.phoneset.common_label(col.cmu),)
        if before == tgt:
            continue
        out.append(RuleMatch(rule.id, view.aligned.word, i, i + 1, before, tgt))
    return out


def _match_sequence(rule, view):
    # A window of consecutive letter units fits the pattern when literals
    # match unit texts and each * binds one unit.  The source phones are
    # checked against every CMU phone in the window's column span except
    # those sitting in a wildcard's own letter column: inserted phones that
    # share no letter (e.g. the glide Y of "u" in AMBULANCE) count as
    # evidence, while the wildcard's own phone passes through to the target.
    out = []
    pattern = rule.letter_pattern
    k = len(pattern)
    n = len(view.units)
    u = 0
    while u + k <= n:
        literal_ok = True
        for off, tok in enumerate(pattern):
            if tok != WILDCARD and view.units[u + off].text != tok:
                literal_ok = False
                break
        if literal_ok:
            start = view.starts[u]
            end = view.ends[u + k - 1]
            wild_units = [
                u + off for off, tok in enumerate(pattern) if tok == WILDCARD
            ]
            wild_cols = {view.unit_cols[w] for w in wild_units}
            evidence = tuple(
                col.cmu
                for i, col in enumerate(view.aligned.columns[start:end], start)
                if col.cmu is not None and i not in wild_cols
            )
            if evidence == rule.source_phones:
                common = view.phoneset.common_label
                after = []
                wi = iter(wild_units)
                for tok in rule.target_phones:
                    if tok == WILDCARD:
                        cmu = view.aligned.columns[view.unit_cols[next(wi)]].cmu
                        if cmu is not None:
                            after.append(common(cmu))
                    else:
                        after.append(tok)
                before = view.defaults_in(start, end)
                after = tuple(after)
                if before != after:
                    out.append(
                        RuleMatch(rule.id, view.aligned.word, start, end, before, after)
                    )
                    u += k
                    continue
        u += 1
    return out


def _match_affix(rule, view):
    # The literal must equal a whole-unit concatenation at the word edge;
    # a suffix ending mid-unit (e.g. "on" against the "io|n" of STATION)
    # does not count.
    if rule.affix_side == SUFFIX:
        u = view.suffix_starts().get(rule.letters)
        if u is None:
            return []
        span = (view.starts[u], view.ncols)
    else:
        u = view.prefix_ends().get(rule.letters)
        if u is None:
            return []
        span = (0, view.ends[u])
    if view.phones_in(*span) != rule.source_phones:
        return []
    before = view.defaults_in(*span)
    if before == rule.target_phones:
        return []
    return [
        RuleMatch(
            rule.id, view.aligned.word, span[0], span[1], before, rule.target_phones
        )
    ]


_MATCHERS = {SYLLABLE: _match_syllable, SEQUENCE: _match_sequence, AFFIX: _match_affix}


def match_rule(rule, aligned, syll, phoneset=None):
    """All matches of one rule against one aligned word.

    aligned and syll must describe the same CMU phone sequence.  Matches
    never overlap each other and never report a rewrite that equals the
    default mapping.
    """
    if phoneset is None:
        phoneset = default_phoneset()
    view = _WordView(aligned, syll, phoneset)
    return _MATCHERS[rule.kind](rule, view)


def _aligned_for_application(word, phones, equiv):
    """Letter/CMU alignment wrapped as AlignedWord with an empty CLS side."""
    units = group_letters(word)
    pair = align_pair([u.text for u in units], phones, equiv.letter_cmu)
    unit_iter = iter(units)
    cols = tuple(
        Triplet(next(unit_iter) if s is not None else None, d, None)
        for s, d in pair.columns
    )
    return AlignedWord(word.upper(), cols, pair.cost)


def _plan_rules(ordered):
    """Preprocess an application-ordered rule list for per-word matching.

    Affix rules only ever fire when their literal equals one of the
    word's boundary concatenations, so they are indexed by that literal
    and probed from the word side; everything else keeps the plain scan.
    The sequence number ties candidates back into file-order priority.
    """
    suffix_index = {}
    prefix_index = {}
    rest = []
    for seq, rule in enumerate(ordered):
        if rule.kind == AFFIX:
            index = suffix_index if rule.affix_side == SUFFIX else prefix_index
            index.setdefault(rule.letters, []).append((seq, rule))
        else:
            rest.append(rule)
    return suffix_index, prefix_index, rest


def _apply_entry(entry, plan, phoneset, equiv, by_word):
    """Transform one entry: (phones, matches, nucleus_flag)."""
    aligned = by_word.get(entry.word)
    if aligned is not None and tuple(
        c.cmu for c in aligned.columns if c.cmu is not None
    ) == entry.phones:
        aligned = AlignedWord(
            aligned.word,
            tuple(Triplet(c.letter, c.cmu, None) for c in aligned.columns),
            aligned.cost,
        )
    else:
        aligned = _aligned_for_application(entry.word.lower(), entry.phones, equiv)
    syll = syllabify(entry.phones)
    view = _WordView(aligned, syll, phoneset)
    claimed = [False] * view.ncols
    accepted = {}
    matches = []
    suffix_index, prefix_index, rest = plan
    candidates = []
    for text in view.suffix_starts():
        candidates.extend(suffix_index.get(text, ()))
    for text in view.prefix_ends():
        candidates.extend(prefix_index.get(text, ()))
    candidates.sort()
    for rule in [r for _, r in candidates] + rest:
        for m in _MATCHERS[rule.kind](rule, view):
            if any(claimed[m.start : m.end]):
                continue
            for i in range(m.start, m.end):
                claimed[i] = True
            accepted[m.start] = m
            matches.append(m)
    phones = []
    i = 0
    common = phoneset.common_label
    cols = aligned.columns
    while i < view.ncols:
        m = accepted.get(i)
        if m is not None:
            phones.extend(m.after)
            i = m.end
            continue
        cmu = cols[i].cmu
        if cmu is not None:
            phones.append(common(cmu))
        i += 1
    return phones, matches, not syll.has_nucleus


# Shared with forked workers; fork inherits it copy-on-write so nothing
# larger than the result lists ever crosses a process boundary.
_FORK_STATE = None


def _apply_span(span):
    entries, plan, phoneset, equiv, by_word = _FORK_STATE
    lo, hi = span
    return [
        _apply_entry(e, plan, phoneset, equiv, by_word) for e in entries[lo:hi]
    ]


def apply_rules(lex, rules, phoneset=None, equiv=None, translits=None, jobs=1):
    """Transform a CMU lexicon into the merged inventory under a RuleSet.

    Returns (new lexicon, match log).  translits may carry derivation
    alignments keyed by word; their letter/CMU legs are reused instead
    of being recomputed.  Nucleus-free pronunciations are processed with
    a single pseudo-syllable and logged, never fatal.  jobs > 1 forks
    worker processes over word ranges; output order is identical.
    """
    if phoneset is None:
        phoneset = default_phoneset()
    if equiv is None:
        equiv = default_equivalences(phoneset)
    ordered = rules.in_application_order() if isinstance(rules, RuleSet) else list(rules)
    plan = _plan_rules(ordered)
    if translits is None:
        by_word = {}
    elif hasattr(translits, "get"):
        by_word = translits
    else:
        by_word = {a.word: a for a in translits}
    entries = list(lex)
    results = None
    if jobs > 1 and len(entries) > 1:
        import multiprocessing

        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            log.debug("fork unavailable, applying serially")
        else:
            global _FORK_STATE
            step = max(1, (len(entries) + jobs - 1) // jobs)
            spans = [
                (lo, min(lo + step, len(entries)))
                for lo in range(0, len(entries), step)
            ]
            _FORK_STATE = (entries, plan, phoneset, equiv, by_word)
            try:
                with ctx.Pool(len(spans)) as pool:
                    chunks = pool.map(_apply_span, spans)
            finally:
                _FORK_STATE = None
            results = [item for chunk in chunks for item in chunk]
    if results is None:
        results = [
            _apply_entry(e, plan, phoneset, equiv, by_word) for e in entries
        ]
    out = Lexicon(COMMON)
    match_log = []
    flagged = 0
    for entry, (phones, matches, no_nucleus) in zip(entries, results):
        out.add(entry.word, phones, entry.variant)
        match_log.extend(matches)
        if no_nucleus:
            flagged += 1
            log.debug("%s: no vowel nucleus, single pseudo-syllable", entry.word)
    if flagged:
        log.warning("%d entries had no vowel nucleus", flagged)
    return out, match_log


class WhatIfReport(NamedTuple):
    """Effect of adding one draft rule on top of a baseline RuleSet."""

    changed: tuple  # (word, variant, before phones, after phones)
    words_changed: int
    entries_changed: int


def what_if(lex_slice, draft, baseline, phoneset=None):
    """Diff pronunciations under baseline vs baseline + draft.

    Pure computation; the draft is appended after its kind's existing
    rules, exactly as accepting it into the file would place it.
    """
    if phoneset is None:
        phoneset = default_phoneset()
    if baseline.get(draft.id) is not None and baseline.get(draft.id) != draft:
        raise ParseError(f"rule id {draft.id!r} already in use")
    base_lex, _ = apply_rules(lex_slice, baseline, phoneset)
    if baseline.get(draft.id) == draft:
        trial = baseline
    else:
        trial = baseline.with_rule(draft)
    new_lex, _ = apply_rules(lex_slice, trial, phoneset)
    changed = []
    words = set()
    for before, after in zip(base_lex, new_lex):
        if before.phones != after.phones:
            changed.append(
                (before.word, before.variant, before.phones, after.phones)
            )
            words.add(before.word)
    return WhatIfReport(tuple(changed), len(words), len(changed))
