"""Phone inventories and the merged common label set.

Three inventories are in play.  The source dictionary is written in the
39-phone CMU set (uppercase ARPAbet, stress digits on vowels).  Target
pronunciations use the 59-phone common label set (CLS, lowercase) shared
by Indian language speech corpora.  A merge table declares which CMU and
CLS labels denote the same sound; folding those pairs gives the reduced
common inventory every derived lexicon is written in.  With the shipped
configuration that is 39 + 59 - 25 = 73 phones.

The two source inventories must not share label spellings (the shipped
ones cannot, CMU is uppercase and CLS lowercase), so a bare label string
identifies its inventory unambiguously.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import ConfigError, InvariantError, UnknownPhone

# Structural requirements on any loaded configuration.  The label sets are
# editable, the shape is not: downstream reports and rules assume these
# exact inventory sizes.
CMU_SIZE = 39
CLS_SIZE = 59
MERGE_SIZE = 25

CMU = "cmu"
CLS = "cls"
COMMON = "common"

_STRESS_RE = re.compile(r"^([A-Z]{1,2})([0-2])?$")

# Environment variable naming a directory whose phoneset.cfg, akshara.cfg
# and rules.default override the packaged ones.
CONFIG_ENV = "LEXIFORGE_CONFIG"


@dataclass(frozen=True)
class PhoneSymbol:
    """One phone label tagged with the inventory it belongs to."""

    label: str
    inventory: str

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class PhoneInventory:
    """An ordered, duplicate-free collection of phone labels."""

    name: str
    members: tuple[str, ...]

    def __contains__(self, label):
        return label in self._index

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def _index(self):
        # frozen dataclass, so cache on first use via __dict__ poke
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = frozenset(self.members)
            self.__dict__["_index_cache"] = idx
        return idx


class Phoneset:
    """The loaded inventories plus the merge table.

    One instance is built at startup and threaded through everything that
    interprets phone labels.  All lookups are plain dict reads so the
    per-phone helpers are safe to call in tight loops.
    """

    def __init__(self, cmu_labels, cls_labels, merge_pairs):
        cmu_labels = tuple(cmu_labels)
        cls_labels = tuple(cls_labels)
        merge_pairs = tuple((a, b) for a, b in merge_pairs)
        _check_inventory(CMU, cmu_labels, CMU_SIZE)
        _check_inventory(CLS, cls_labels, CLS_SIZE)
        overlap = set(cmu_labels) & set(cls_labels)
        if overlap:
            raise InvariantError(
                f"labels appear in both inventories: {sorted(overlap)}"
            )
        if len(merge_pairs) != MERGE_SIZE:
            raise InvariantError(
                f"merge table has {len(merge_pairs)} pairs, expected {MERGE_SIZE}"
            )
        cmu_set = frozenset(cmu_labels)
        cls_set = frozenset(cls_labels)
        seen_cmu, seen_cls = set(), set()
        for cmu_label, cls_label in merge_pairs:
            if cmu_label not in cmu_set:
                raise InvariantError(f"merge refers to unknown CMU phone {cmu_label!r}")
            if cls_label not in cls_set:
                raise InvariantError(f"merge refers to unknown CLS phone {cls_label!r}")
            if cmu_label in seen_cmu:
                raise InvariantError(f"CMU phone {cmu_label!r} merged twice")
            if cls_label in seen_cls:
                raise InvariantError(f"CLS phone {cls_label!r} merged twice")
            seen_cmu.add(cmu_label)
            seen_cls.add(cls_label)

        self.cmu = PhoneInventory(CMU, cmu_labels)
        self.cls = PhoneInventory(CLS, cls_labels)
        self.merge_pairs = merge_pairs

        # Canonical label of a merged pair is the CLS spelling; everything
        # else keeps its own label.  CLS labels therefore map to themselves
        # and the common inventory is all of CLS plus the unmerged CMU rest.
        fold = {cmu_label: cls_label for cmu_label, cls_label in merge_pairs}
        self._common_of = {label: label for label in cls_labels}
        for label in cmu_labels:
            self._common_of[label] = fold.get(label, label)
        common = tuple(cls_labels) + tuple(
            label for label in cmu_labels if label not in fold
        )
        self.common = PhoneInventory(COMMON, common)
        for label in common:
            self._common_of.setdefault(label, label)

    # -- per-phone helpers ------------------------------------------------

    def strip_stress(self, raw):
        """Drop the trailing stress digit of a raw dictionary phone.

        >>> ps = default_phoneset()
        >>> ps.strip_stress("AY1").label
        'AY'

        Raises UnknownPhone when the remainder is not a CMU phone.
        """
        m = _STRESS_RE.match(raw)
        if m is None or m.group(1) not in self.cmu:
            raise UnknownPhone(raw, CMU)
        return PhoneSymbol(m.group(1), CMU)

    def common_label(self, label):
        """Canonical common-set spelling of a CMU, CLS or common label."""
        try:
            return self._common_of[label]
        except KeyError:
            raise UnknownPhone(label) from None

    def to_common(self, phone):
        """Map a phone into the merged inventory.

        Accepts a PhoneSymbol or a bare label string.  Idempotent: phones
        already in the common inventory come back unchanged.
        """
        label = phone.label if isinstance(phone, PhoneSymbol) else phone
        return PhoneSymbol(self.common_label(label), COMMON)

    def inventory(self, name):
        try:
            return {CMU: self.cmu, CLS: self.cls, COMMON: self.common}[name]
        except KeyError:
            raise ConfigError(f"no inventory named {name!r}") from None


def _check_inventory(name, labels, expected):
    if len(labels) != expected:
        raise InvariantError(
            f"[{name}] lists {len(labels)} phones, expected {expected}"
        )
    seen = set()
    for label in labels:
        if label in seen:
            raise InvariantError(f"duplicate phone {label!r} in [{name}]")
        seen.add(label)


def load_inventories(text):
    """Parse a phoneset configuration and return a Phoneset.

    The format has three sections.  [cmu] and [cls] list labels separated
    by arbitrary whitespace; [merge] has one CMU/CLS pair per line.  Full
    line comments start with '#'.
    """
    sections = {"cmu": [], "cls": [], "merge": []}
    current = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip().lower()
            if name not in sections:
                raise ConfigError(f"line {lineno}: unknown section [{name}]")
            current = name
            continue
        if current is None:
            raise ConfigError(f"line {lineno}: content before any section header")
        if current == "merge":
            fields = line.split()
            if len(fields) != 2:
                raise ConfigError(
                    f"line {lineno}: merge lines take exactly two labels"
                )
            sections["merge"].append((fields[0], fields[1]))
        else:
            sections[current].extend(line.split())
    for name in ("cmu", "cls", "merge"):
        if not sections[name]:
            raise ConfigError(f"missing or empty section [{name}]")
    return Phoneset(sections["cmu"], sections["cls"], sections["merge"])


def data_path(filename):
    """Resolve a bundled data file, honoring the config override directory."""
    override = os.environ.get(CONFIG_ENV)
    if override:
        candidate = Path(override) / filename
        if candidate.is_file():
            return candidate
    return Path(str(resources.files(__package__) / "data" / filename))


@lru_cache(maxsize=None)
def _load_default(resolved_path):
    return load_inventories(Path(resolved_path).read_text(encoding="utf-8"))


def default_phoneset():
    """The packaged phoneset, or the override named by LEXIFORGE_CONFIG."""
    return _load_default(str(data_path("phoneset.cfg")))
