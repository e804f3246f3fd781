"""Case-channel steganography for case-insensitive programming languages.

Interpreters for languages such as Pascal or Basic ignore the letter
case of keywords and identifiers, so those letters can carry hidden
bits exactly like HTML tag text.  String literals, numbers and comments
are never touched: their content is program data.  Four site-selection
strategies are supported (every letter, first letter per word, keyword
letters only, identifier letters only); the strategy and language
profile act as shared secrets and are not recorded in the stego file.

The payload is always framed in-band: the first 32 channel bits are a
big-endian payload bit count.

Profile file format (one directive per line, ``#`` starts a comment):

    name <identifier>
    keyword <word>            # repeated; matched case-insensitively
    comment <open> <close>    # block comment delimiters, repeatable
    linecomment <prefix>      # runs to end of line, repeatable
    string <quote>            # quote char; doubling the quote escapes it
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from casehide import bitcodec
from casehide.errors import (
    CapacityError,
    UnterminatedCommentError,
    UnterminatedStringError,
)
from casehide.model import (
    IDENTIFIER_LETTER,
    KEYWORD_LETTER,
    CandidateSite,
    Strategy,
    Token,
    TokenKind,
    apply_case_bits,
)

BUILTIN_PROFILES = ("pascal", "basic")


@dataclass(frozen=True)
class LanguageProfile:
    """Lexical surface of one case-insensitive language."""

    name: str
    keywords: frozenset[str]
    block_comments: tuple[tuple[bytes, bytes], ...] = ()
    line_comments: tuple[bytes, ...] = ()
    string_quotes: tuple[int, ...] = ()


def parse_profile(text: str, name: str = "custom") -> LanguageProfile:
    keywords: set[str] = set()
    block: list[tuple[bytes, bytes]] = []
    line: list[bytes] = []
    quotes: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        directive, args = fields[0], fields[1:]
        if directive == "name" and len(args) == 1:
            name = args[0]
        elif directive == "keyword" and len(args) == 1:
            keywords.add(args[0].lower())
        elif directive == "comment" and len(args) == 2:
            block.append((args[0].encode("ascii"), args[1].encode("ascii")))
        elif directive == "linecomment" and len(args) == 1:
            line.append(args[0].encode("ascii"))
        elif directive == "string" and len(args) == 1 and len(args[0]) == 1:
            quotes.append(ord(args[0]))
        else:
            raise ValueError(f"profile line {lineno}: cannot parse {raw!r}")
    return LanguageProfile(name, frozenset(keywords), tuple(block), tuple(line), tuple(quotes))


def load_profile(spec: str) -> LanguageProfile:
    """Load a built-in profile by name or a custom one from a file path."""
    if spec in BUILTIN_PROFILES:
        text = (resources.files("casehide") / "profiles" / f"{spec}.profile").read_text("ascii")
        return parse_profile(text, name=spec)
    path = Path(spec)
    return parse_profile(path.read_text("ascii"), name=path.stem)


def _is_word_start(c: int) -> bool:
    return 65 <= c <= 90 or 97 <= c <= 122 or c == 0x5F


def _is_word_char(c: int) -> bool:
    return 65 <= c <= 90 or 97 <= c <= 122 or 48 <= c <= 57 or c == 0x5F


def _is_space(c: int) -> bool:
    return c in (0x20, 0x09, 0x0A, 0x0D, 0x0B, 0x0C)


def tokenize(source: bytes, profile: LanguageProfile) -> list[Token]:
    """Split a source file into a gapless, ordered token tiling."""
    tokens: list[Token] = []
    n = len(source)
    i = 0
    # Longest-first so e.g. a "(*" opener wins over a "(" punct.
    line_comments = sorted(profile.line_comments, key=len, reverse=True)
    block_comments = sorted(profile.block_comments, key=lambda p: len(p[0]), reverse=True)
    while i < n:
        start = i
        c = source[i]
        if _is_space(c):
            while i < n and _is_space(source[i]):
                i += 1
            tokens.append(Token(TokenKind.WHITESPACE, start, i, source[start:i]))
            continue
        matched = False
        for prefix in line_comments:
            if source.startswith(prefix, i):
                end = source.find(b"\n", i)
                i = n if end < 0 else end
                tokens.append(Token(TokenKind.COMMENT, start, i, source[start:i]))
                matched = True
                break
        if matched:
            continue
        for opener, closer in block_comments:
            if source.startswith(opener, i):
                end = source.find(closer, i + len(opener))
                if end < 0:
                    raise UnterminatedCommentError(
                        f"comment opened at offset {start} never closes", start
                    )
                i = end + len(closer)
                tokens.append(Token(TokenKind.COMMENT, start, i, source[start:i]))
                matched = True
                break
        if matched:
            continue
        if c in profile.string_quotes:
            i += 1
            while True:
                end = source.find(bytes([c]), i)
                if end < 0:
                    raise UnterminatedStringError(
                        f"string opened at offset {start} never closes", start
                    )
                if end + 1 < n and source[end + 1] == c:  # doubled quote escape
                    i = end + 2
                    continue
                i = end + 1
                break
            tokens.append(Token(TokenKind.STRING, start, i, source[start:i]))
            continue
        if _is_word_start(c):
            while i < n and _is_word_char(source[i]):
                i += 1
            text = source[start:i]
            kind = (
                TokenKind.KEYWORD
                if text.decode("ascii", "replace").lower() in profile.keywords
                else TokenKind.IDENTIFIER
            )
            tokens.append(Token(kind, start, i, text))
            continue
        if 48 <= c <= 57:
            while i < n and 48 <= source[i] <= 57:
                i += 1
            if i + 1 < n and source[i] == 0x2E and 48 <= source[i + 1] <= 57:
                i += 1
                while i < n and 48 <= source[i] <= 57:
                    i += 1
            if i < n and source[i] in (0x65, 0x45):  # e / E exponent
                j = i + 1
                if j < n and source[j] in (0x2B, 0x2D):
                    j += 1
                if j < n and 48 <= source[j] <= 57:
                    i = j
                    while i < n and 48 <= source[i] <= 57:
                        i += 1
            tokens.append(Token(TokenKind.NUMBER, start, i, source[start:i]))
            continue
        i += 1
        tokens.append(Token(TokenKind.PUNCT, start, i, source[start:i]))
    return tokens


def candidate_sites(tokens: list[Token], strategy: Strategy) -> list[CandidateSite]:
    """Select the letters that carry bits under the given strategy."""
    if strategy is Strategy.KEYWORDS_ONLY:
        wanted = (TokenKind.KEYWORD,)
    elif strategy is Strategy.IDENTIFIERS_ONLY:
        wanted = (TokenKind.IDENTIFIER,)
    else:
        wanted = (TokenKind.KEYWORD, TokenKind.IDENTIFIER)
    first_only = strategy is Strategy.FIRST_CHAR
    kind_name = {TokenKind.KEYWORD: KEYWORD_LETTER, TokenKind.IDENTIFIER: IDENTIFIER_LETTER}
    sites: list[CandidateSite] = []
    for tok in tokens:
        if tok.kind not in wanted:
            continue
        for pos, c in enumerate(tok.text):
            if 65 <= c <= 90 or 97 <= c <= 122:
                sites.append(CandidateSite(tok.start + pos, c, kind_name[tok.kind]))
                if first_only:
                    break
    return sites


def _sites_for(source: bytes, profile: LanguageProfile, strategy: Strategy):
    return candidate_sites(tokenize(source, profile), strategy)


def capacity(source: bytes, profile: LanguageProfile, strategy: Strategy = Strategy.ALL) -> int:
    """Maximum payload bits after the 32-bit in-band length prefix."""
    return max(0, len(_sites_for(source, profile, strategy)) - bitcodec.LENGTH_PREFIX_BITS)


def embed_bits(
    source: bytes,
    bits,
    profile: LanguageProfile,
    strategy: Strategy = Strategy.ALL,
    key: bytes | None = None,
) -> bytes:
    sites = _sites_for(source, profile, strategy)
    message = bitcodec.xor_transform(bits, key) if key else [1 if b else 0 for b in bits]
    channel_bits = bitcodec.frame(message)
    if len(channel_bits) > len(sites):
        raise CapacityError(
            f"framed payload needs {len(channel_bits)} sites, source has {len(sites)}"
        )
    return apply_case_bits(source, sites, channel_bits)


def extract_bits(
    stego: bytes,
    profile: LanguageProfile,
    strategy: Strategy = Strategy.ALL,
    key: bytes | None = None,
) -> bitcodec.Bits:
    sites = _sites_for(stego, profile, strategy)
    raw = [1 if 65 <= s.char <= 90 else 0 for s in sites]
    payload = bitcodec.unframe(raw)
    return bitcodec.xor_transform(payload, key) if key else payload


def embed(
    source: bytes,
    payload: bytes,
    profile: LanguageProfile,
    strategy: Strategy = Strategy.ALL,
    key: bytes | None = None,
) -> bytes:
    return embed_bits(source, bitcodec.bytes_to_bits(payload), profile, strategy, key)


def extract(
    stego: bytes,
    profile: LanguageProfile,
    strategy: Strategy = Strategy.ALL,
    key: bytes | None = None,
) -> bytes:
    return bitcodec.bits_to_bytes(extract_bits(stego, profile, strategy, key))
