"""Letter-phone and phone-phone alignment.

Words are aligned twice: letter units against CMU phones, and CMU phones
against CLS phones.  Joining the two on the shared CMU side yields the
three-way triplet view that rule derivation works from.

Both alignments use the same Needleman-Wunsch style dynamic program over
a 0/1 cost model: substituting a pair costs 0 when the pair is declared
equivalent or the tokens match case-insensitively, 1 otherwise; a gap on
either side costs 1.  Ties are resolved deterministically: fewer gap
columns win, then gaps are pushed as far left as possible, and where a
source-side and a destination-side gap are still interchangeable the
source-side gap comes first.  The same total order is easy to state
declaratively, so tests can check the DP against exhaustive enumeration.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import EmptySequence, ParseError
from .letters import LetterUnit, group_letters
from .phoneset import default_phoneset

# Letter unit <-> CMU anchors given substitution cost 0.  Single letters
# that simply spell their phone (p/P, s/S ...) are listed for clarity even
# though case-insensitive comparison already covers them.  Doubled
# consonant units also anchor to the single phone: spellings like "ll"
# for /L/ are exactly why the units exist, and without these pairs the
# DP has no reason to keep, say, (ll, L) together in CALLED.
DEFAULT_LETTER_CMU = (
    ("p", "P"), ("b", "B"), ("t", "T"), ("d", "D"), ("k", "K"),
    ("c", "K"), ("g", "G"), ("f", "F"), ("ph", "F"), ("v", "V"),
    ("s", "S"), ("z", "Z"), ("m", "M"), ("n", "N"), ("l", "L"),
    ("r", "R"), ("h", "HH"), ("w", "W"), ("y", "Y"), ("j", "JH"),
    ("sh", "SH"), ("ch", "CH"), ("th", "TH"), ("ng", "NG"), ("er", "ER"),
    ("bb", "B"), ("cc", "K"), ("dd", "D"), ("ff", "F"), ("gg", "G"),
    ("kk", "K"), ("ll", "L"), ("mm", "M"), ("nn", "N"), ("pp", "P"),
    ("rr", "R"), ("ss", "S"), ("tt", "T"), ("zz", "Z"),
)


class EquivalenceSet(NamedTuple):
    """Zero-cost substitution pairs for the two alignment passes."""

    letter_cmu: frozenset
    cmu_cls: frozenset


class PairAlignment(NamedTuple):
    """Columns of (src, dst) tokens, None marking a gap, plus total cost."""

    columns: tuple
    cost: int


class Triplet(NamedTuple):
    """One column of the three-way alignment; None fields are gaps."""

    letter: LetterUnit | None
    cmu: str | None
    cls: str | None


class AlignedWord(NamedTuple):
    word: str
    columns: tuple
    cost: int


def default_equivalences(phoneset=None):
    """The shipped equivalence set.

    The CMU/CLS side mirrors the phoneset merge table: labels folded into
    one common phone are exactly the pairs that should align for free.
    """
    if phoneset is None:
        phoneset = default_phoneset()
    return EquivalenceSet(
        letter_cmu=frozenset(DEFAULT_LETTER_CMU),
        cmu_cls=frozenset(phoneset.merge_pairs),
    )


def align_pair(src, dst, equiv):
    """Minimum-cost monotone alignment of two token sequences.

    equiv is a set of (src token, dst token) pairs substitutable at cost
    0; case-insensitively equal tokens are always free.  Returns a
    PairAlignment whose columns are (src, dst) tuples with None for gaps.
    Raises EmptySequence if either sequence is empty.

    Among equal-cost alignments the result has the fewest gap columns;
    among those, gaps sit leftmost; a source gap precedes a destination
    gap when both placements remain interchangeable.
    """
    src = tuple(src)
    dst = tuple(dst)
    if not src or not dst:
        raise EmptySequence("align_pair needs non-empty sequences")
    m, n = len(src), len(dst)
    src_low = [t.lower() for t in src]
    dst_low = [t.lower() for t in dst]

    def sub_cost(i, j):
        if src_low[i] == dst_low[j] or (src[i], dst[j]) in equiv:
            return 0
        return 1

    # Cell values pack (cost, gap count) into one int so comparisons stay
    # cheap; the factor is exact because gaps never exceed m + n.
    factor = m + n + 1
    gap = factor + 1  # cost 1, one gap
    width = n + 1
    cells = [0] * ((m + 1) * width)
    for j in range(1, n + 1):
        cells[j] = j * gap
    for i in range(1, m + 1):
        row = i * width
        prev_row = row - width
        cells[row] = i * gap
        for j in range(1, n + 1):
            best = cells[prev_row + j - 1] + sub_cost(i - 1, j - 1) * factor
            up = cells[prev_row + j] + gap
            if up < best:
                best = up
            left = cells[row + j - 1] + gap
            if left < best:
                best = left
            cells[row + j] = best

    # Backtrace builds columns right to left, greedily taking the move
    # with the smallest column key (substitution, then destination gap,
    # then source gap) among those on a cost-and-gap-optimal path.  That
    # realizes the documented tie order.
    columns = []
    i, j = m, n
    while i > 0 or j > 0:
        here = cells[i * width + j]
        if (
            i > 0
            and j > 0
            and cells[(i - 1) * width + j - 1] + sub_cost(i - 1, j - 1) * factor == here
        ):
            columns.append((src[i - 1], dst[j - 1]))
            i -= 1
            j -= 1
        elif j > 0 and cells[i * width + j - 1] + gap == here:
            columns.append((None, dst[j - 1]))
            j -= 1
        else:
            columns.append((src[i - 1], None))
            i -= 1
    columns.reverse()
    total = cells[m * width + n]
    return PairAlignment(tuple(columns), total // factor)


def _phone_labels(pron):
    """Accept a PronEntry or a plain sequence of labels."""
    phones = getattr(pron, "phones", pron)
    return tuple(phones)


def align_three_way(word, cmu, cls, equiv=None):
    """Compose the two pairwise alignments into triplet columns.

    cmu and cls may be PronEntry values or label sequences.  The CMU side
    is the pivot: each CMU phone appears in exactly one column, carrying
    whatever letter unit and CLS phone aligned to it.  Letter-only and
    CLS-only gap columns are kept (silent letters matter to rules); at
    the same CMU juncture letter-only columns come first.
    """
    if equiv is None:
        equiv = default_equivalences()
    units = group_letters(word)
    cmu_phones = _phone_labels(cmu)
    cls_phones = _phone_labels(cls)
    pair_lc = align_pair([u.text for u in units], cmu_phones, equiv.letter_cmu)
    pair_cc = align_pair(cmu_phones, cls_phones, equiv.cmu_cls)

    # Walk both alignments in step, keyed by how many CMU phones each has
    # consumed.  Emit letter-only columns, then CLS-only columns, then the
    # joint column for the next CMU phone.
    triplets = []
    unit_iter = iter(units)
    lc = iter(pair_lc.columns)
    cc = iter(pair_cc.columns)
    lc_col = next(lc, None)
    cc_col = next(cc, None)
    while True:
        while lc_col is not None and lc_col[1] is None:
            triplets.append(Triplet(next(unit_iter), None, None))
            lc_col = next(lc, None)
        while cc_col is not None and cc_col[0] is None:
            triplets.append(Triplet(None, None, cc_col[1]))
            cc_col = next(cc, None)
        if lc_col is None and cc_col is None:
            break
        # Both columns consume the same next CMU phone.
        letter = next(unit_iter) if lc_col[0] is not None else None
        triplets.append(Triplet(letter, lc_col[1], cc_col[1]))
        lc_col = next(lc, None)
        cc_col = next(cc, None)
    return AlignedWord(word.upper(), tuple(triplets), pair_lc.cost + pair_cc.cost)


def align_lexicon(cmu_lex, cls_lex, equiv=None, all_variants=False):
    """Three-way alignments for every word present in both lexicons.

    Uses the primary CLS pronunciation throughout; by default only the
    primary CMU variant is aligned.  Output is ordered by word (variants
    in order within a word), so the result is deterministic however the
    per-word work is scheduled.
    """
    if equiv is None:
        equiv = default_equivalences()
    out = []
    for word in sorted(cmu_lex.words()):
        cls_entry = cls_lex.lookup(word)
        if cls_entry is None:
            continue
        entries = cmu_lex.entries(word)
        if not all_variants:
            entries = entries[:1]
        for entry in entries:
            out.append(align_three_way(word.lower(), entry, cls_entry, equiv))
    return out


# -- dump serialization ----------------------------------------------------

GAP_MARK = "_"


def format_alignment(aligned):
    """One dump record: WORD<TAB>letter|cmu|cls columns, gaps as `_`."""
    cols = " ".join(
        "|".join(
            (
                col.letter.text if col.letter else GAP_MARK,
                col.cmu or GAP_MARK,
                col.cls or GAP_MARK,
            )
        )
        for col in aligned.columns
    )
    return f"{aligned.word}\t{cols}"


def write_alignment_dump(alignments):
    return "".join(format_alignment(a) + "\n" for a in alignments)


def parse_alignment_record(line, equiv=None):
    """Rebuild an AlignedWord from a dump record.

    Letter spans are recomputed by tiling the units in order; the cost is
    re-derived from the columns under the given (default) equivalences,
    which reproduces what the aligner computed.
    """
    if equiv is None:
        equiv = default_equivalences()
    word, _, rest = line.rstrip("\n").partition("\t")
    triplets = []
    offset = 0
    cost = 0
    for colspec in rest.split():
        parts = colspec.split("|")
        if len(parts) != 3:
            raise ParseError(f"bad alignment column {colspec!r}")
        letter_text, cmu, cls = (p if p != GAP_MARK else None for p in parts)
        unit = None
        if letter_text is not None:
            unit = LetterUnit(letter_text, offset, offset + len(letter_text))
            offset += len(letter_text)
        if unit is None and cmu is None and cls is None:
            raise ParseError("all-gap alignment column")
        triplets.append(Triplet(unit, cmu, cls))
        # letters <-> cmu leg
        if unit is not None and cmu is not None:
            low = unit.text.lower()
            if low != cmu.lower() and (unit.text, cmu) not in equiv.letter_cmu:
                cost += 1
        elif cmu is None and unit is not None:
            cost += 1
        elif cmu is not None and unit is None:
            cost += 1
        # cmu <-> cls leg
        if cmu is not None and cls is not None:
            if cmu.lower() != cls.lower() and (cmu, cls) not in equiv.cmu_cls:
                cost += 1
        elif (cmu is None) != (cls is None):
            cost += 1
    return AlignedWord(word, tuple(triplets), cost)


def read_alignment_dump(text, equiv=None, path=None):
    if equiv is None:
        equiv = default_equivalences()
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append(parse_alignment_record(line, equiv))
        except ParseError as exc:
            raise ParseError(str(exc), path=path, lineno=lineno) from None
    return out
