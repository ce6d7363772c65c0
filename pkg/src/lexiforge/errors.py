"""Exception hierarchy shared across the toolkit.

Everything raised on purpose derives from LexiforgeError so callers can
catch one type at the CLI/service boundary and turn it into a clean
message instead of a traceback.
"""


class LexiforgeError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(LexiforgeError):
    """A configuration file could not be parsed."""


class InvariantError(ConfigError):
    """A configuration parsed but violates a structural requirement,
    e.g. wrong inventory size or a duplicated label."""


class UnknownPhone(LexiforgeError):
    """A phone label does not belong to the inventory it was used with."""

    def __init__(self, label, inventory=None):
        self.label = label
        self.inventory = inventory
        where = f" in inventory '{inventory}'" if inventory else ""
        super().__init__(f"unknown phone {label!r}{where}")


class ParseError(LexiforgeError):
    """An input file has a malformed line.  Carries enough position
    information to point the user at the offending text."""

    def __init__(self, message, path=None, lineno=None):
        self.path = path
        self.lineno = lineno
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if lineno is not None:
                prefix += f"{lineno}:"
            prefix += " "
        elif lineno is not None:
            prefix = f"line {lineno}: "
        super().__init__(prefix + message)


class EncodingError(ParseError):
    """A transliteration entry contains text outside the expected script."""


class UnmappedCodepoint(LexiforgeError):
    """A Devanagari character has no entry in the akshara map."""

    def __init__(self, char, offset, word=None):
        self.char = char
        self.offset = offset
        self.word = word
        where = f" in {word!r}" if word else ""
        super().__init__(
            f"no mapping for {char!r} (U+{ord(char):04X}) at offset {offset}{where}"
        )


class EmptyWord(LexiforgeError):
    """A word with no letters was passed where letters are required."""


class EmptySequence(LexiforgeError):
    """An empty token sequence was passed to an operation that needs
    at least one token on each side."""


class NoNucleus(LexiforgeError):
    """A pronunciation contains no vowel, so it cannot be syllabified.
    Pipelines normally flag and continue; strict callers raise this."""


class ArityMismatch(LexiforgeError):
    """Wildcard counts on the two sides of a rewrite rule disagree."""


class RuleError(LexiforgeError):
    """A substitution rule is malformed or refers to unknown symbols."""
