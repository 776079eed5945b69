"""Exception types shared across the package."""


class LyricsmithError(Exception):
    """Base class for all package errors."""


class UnresolvableWord(LyricsmithError):
    """A word could not be phonemized and the orthographic fallback is disabled."""


class NoNucleus(LyricsmithError):
    """A phoneme sequence contains no vowel nucleus, so no rhyme key exists."""


class UnknownWord(LyricsmithError):
    """A rhyme lookup was made for a word that cannot be keyed."""


class ParseError(LyricsmithError):
    """A corpus record is malformed."""


class EmptyCorpus(LyricsmithError):
    """An operation requires at least one song / line and got none."""


class MalformedRow(LyricsmithError):
    """A dataset TSV row does not have exactly two tab-separated fields."""


class InsufficientRhymes(LyricsmithError):
    """No rhyme bucket is large enough to sample a rhyme-list example from."""


class BackendUnavailable(LyricsmithError):
    """A generation backend could not be reached or failed."""


class MalformedResponse(LyricsmithError):
    """A remote backend answered with a payload that violates the wire contract."""


class LengthMismatch(LyricsmithError):
    """Paired metric inputs have different lengths."""
