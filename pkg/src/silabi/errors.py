"""Exception types shared across the toolkit.

Everything raised on bad *data* derives from SilabiError so callers can
distinguish data problems from usage errors (ValueError) and I/O failures
(OSError). The CLI maps these three families to distinct exit codes.
"""


class SilabiError(Exception):
    """Base class for data errors raised by this package."""


class MalformedEntry(SilabiError):
    """An inventory entry violates the syllable shape or alphabet rules."""


class PlaceholderInData(SilabiError):
    """An override inventory file contains the '-' placeholder."""


class MalformedModelFile(SilabiError):
    """A merge table or wordpiece vocabulary file cannot be parsed."""


class IdOutOfRange(SilabiError):
    """A token id falls outside the vocabulary range."""


class EmptyCorpus(SilabiError):
    """An operation that needs training data received none."""
