"""Shared domain types: sites, tokens, modes, strategies."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

# CandidateSite.kind values.
TAG_NAME = "tag-name"
ATTR_NAME = "attr-name"
KEYWORD_LETTER = "keyword"
IDENTIFIER_LETTER = "identifier"


@dataclass(frozen=True, slots=True)
class CandidateSite:
    """One letter position that can carry a single bit via its case."""

    offset: int
    char: int
    kind: str


class LengthMode(enum.Enum):
    """Where the HTML channel stores the embedded bit count."""

    IN_BAND = "inband"
    HEADER_TAG = "header-tag"


class Strategy(enum.Enum):
    """Site-selection variant for source-code case channels."""

    ALL = "all"
    FIRST_CHAR = "first-char"
    KEYWORDS_ONLY = "keywords"
    IDENTIFIERS_ONLY = "identifiers"


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    STRING = "string"
    NUMBER = "number"
    COMMENT = "comment"
    DIRECTIVE = "directive"
    WHITESPACE = "whitespace"
    PUNCT = "punct"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    start: int
    end: int
    text: bytes


def to_lower_byte(c: int) -> int:
    return c + 32 if 65 <= c <= 90 else c


def to_upper_byte(c: int) -> int:
    return c - 32 if 97 <= c <= 122 else c


def apply_case_bits(document: bytes, sites: Sequence[CandidateSite], bits: Sequence[int]) -> bytes:
    """Return a copy of ``document`` where site ``i`` carries ``bits[i]``.

    Bit 0 forces lowercase, bit 1 forces uppercase; sites beyond the
    message are left untouched.
    """
    out = bytearray(document)
    for site, bit in zip(sites, bits):
        c = out[site.offset]
        out[site.offset] = to_upper_byte(c) if bit else to_lower_byte(c)
    return bytes(out)
