"""Exception hierarchy shared by all channels.

Every operational failure carries a stable ``code`` string so the CLI
can report machine-readable error names on the diagnostic stream.
"""

from __future__ import annotations


class StegoError(Exception):
    """Base class for all embed/extract failures."""

    code = "E_STEGO"


class PartialByteError(StegoError):
    """Bit count is not a multiple of eight where whole bytes are required."""

    code = "E_PARTIAL_BYTE"


class TooLongError(StegoError):
    """Payload too long for the 32-bit length prefix."""

    code = "E_TOO_LONG"


class TruncatedError(StegoError):
    """Fewer carrier bits available than the declared length."""

    code = "E_TRUNCATED"


class NoHeaderError(StegoError):
    """Length header (prefix, header element, or stego comment) missing."""

    code = "E_NO_HEADER"


class CapacityError(StegoError):
    """Payload does not fit in the cover's candidate sites."""

    code = "E_CAPACITY"


class NotAlphaError(StegoError):
    """Case transform applied to a non-letter."""

    code = "E_NOT_ALPHA"


class UnterminatedTagError(StegoError):
    """Document ends inside an open tag construct.

    ``offset`` is the position of the ``<`` that opened the construct.
    ``partial`` holds the scan result collected up to that point (an
    ``html_channel.ScanResult``), so callers that can tolerate a ragged
    tail, such as capacity reporting, still get the usable sites.
    """

    code = "E_UNTERMINATED_TAG"

    def __init__(self, message: str, offset: int, partial=None):
        super().__init__(message)
        self.offset = offset
        self.partial = partial


class UnterminatedStringError(StegoError):
    code = "E_UNTERMINATED_STRING"

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class UnterminatedCommentError(StegoError):
    code = "E_UNTERMINATED_COMMENT"

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class AmbiguousCoverError(StegoError):
    """A candidate variable already ends with the bit-carrier underscore."""

    code = "E_AMBIGUOUS_COVER"


class CollisionError(StegoError):
    """A rename would collide with an existing visible identifier."""

    code = "E_COLLISION"
