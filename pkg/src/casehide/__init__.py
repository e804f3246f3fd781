"""Hide secret bit payloads in the letter-case channel of HTML and source code.

Channels:

* ``html_channel``     - case-flips tag and attribute-name letters.
* ``caseless_channel`` - case-flips keywords/identifiers of
  case-insensitive languages (Pascal, Basic, custom profiles).
* ``ident_channel``    - renames local/static variables of C-like
  sources with a trailing underscore per 1-bit.

``bitcodec`` holds the bit/byte plumbing, ``analysis`` the histogram
and invariance reporting, ``cli`` the command-line front end.
"""

from casehide import analysis, bitcodec, caseless_channel, html_channel, ident_channel
from casehide.errors import (
    AmbiguousCoverError,
    CapacityError,
    CollisionError,
    NoHeaderError,
    NotAlphaError,
    PartialByteError,
    StegoError,
    TooLongError,
    TruncatedError,
    UnterminatedCommentError,
    UnterminatedStringError,
    UnterminatedTagError,
)
from casehide.kernels import BACKEND as KERNEL_BACKEND
from casehide.model import CandidateSite, LengthMode, Strategy

__version__ = "0.1.0"

__all__ = [
    "analysis",
    "bitcodec",
    "caseless_channel",
    "html_channel",
    "ident_channel",
    "CandidateSite",
    "LengthMode",
    "Strategy",
    "KERNEL_BACKEND",
    "StegoError",
    "AmbiguousCoverError",
    "CapacityError",
    "CollisionError",
    "NoHeaderError",
    "NotAlphaError",
    "PartialByteError",
    "TooLongError",
    "TruncatedError",
    "UnterminatedCommentError",
    "UnterminatedStringError",
    "UnterminatedTagError",
]
