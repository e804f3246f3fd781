"""Case-channel steganography for HTML documents.

Browsers ignore the letter case of markup, so every tag-name or
attribute-name letter can carry one hidden bit: lowercase encodes 0,
uppercase encodes 1.  Attribute values are never touched (file names
and the like can be case-sensitive), nor are comments, declarations,
processing instructions, or any text outside tags, so the rendered page
is unchanged byte-for-byte.

Two ways of recording the payload length are supported:

* ``LengthMode.IN_BAND`` (default): the first 32 channel bits are a
  big-endian length prefix; nothing visible is added to the document.
* ``LengthMode.HEADER_TAG``: a literal ``<Header k>`` element is
  inserted after the first ``<head>`` tag (or at the start of the
  document), and all channel bits carry payload.  The header element's
  own letters are never candidate sites.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from casehide import bitcodec, kernels
from casehide.errors import (
    CapacityError,
    NoHeaderError,
    NotAlphaError,
    TruncatedError,
    UnterminatedTagError,
)
from casehide.model import (
    ATTR_NAME,
    TAG_NAME,
    CandidateSite,
    LengthMode,
    apply_case_bits,
    to_lower_byte,
    to_upper_byte,
)

# Distance between the ASCII codes of a letter's two cases ('a' - 'A').
CASE_OFFSET = 32

_KIND_NAMES = {kernels.KIND_TAG_NAME: TAG_NAME, kernels.KIND_ATTR_NAME: ATTR_NAME}

_SPACE_CLASS = rb"[ \t\n\r\x0b\x0c]"
_HEADER_SHAPE = re.compile(
    rb"<[hH][eE][aA][dD][eE][rR]" + _SPACE_CLASS + rb"+([0-9]+)" + _SPACE_CLASS + rb"*>"
)


@dataclass(slots=True)
class ScanResult:
    """Candidate sites of a document, in document order."""

    document: bytes
    sites: list[CandidateSite]

    def apply(self, bits) -> bytes:
        """Rewrite the document so site ``i`` carries ``bits[i]``."""
        return apply_case_bits(self.document, self.sites, bits)


def scan(document: bytes) -> ScanResult:
    """Find every embeddable letter inside the document's tags.

    Raises UnterminatedTagError when the document ends inside an open
    construct; the exception carries the partial result.
    """
    pairs, err = kernels.scan_sites(document)
    result = ScanResult(
        document,
        [CandidateSite(off, document[off], _KIND_NAMES[kind]) for off, kind in pairs],
    )
    if err >= 0:
        raise UnterminatedTagError(
            f"document ends inside the construct opened at offset {err}", err, result
        )
    return result


def _scan_lenient(document: bytes) -> ScanResult:
    try:
        return scan(document)
    except UnterminatedTagError as exc:
        return exc.partial


def capacity(document: bytes, mode: LengthMode = LengthMode.IN_BAND) -> int:
    """Maximum payload bits the document can carry in the given mode."""
    n = len(_scan_lenient(document).sites)
    if mode is LengthMode.IN_BAND:
        return max(0, n - bitcodec.LENGTH_PREFIX_BITS)
    return n


def stego_char(c: str, bit: int) -> str:
    """Carry one bit in one letter: 0 forces lowercase, 1 forces uppercase."""
    if len(c) != 1 or not c.isascii() or not c.isalpha():
        raise NotAlphaError(f"{c!r} is not an ASCII letter")
    b = ord(c)
    return chr(to_upper_byte(b) if bit else to_lower_byte(b))


def embed_bits(
    cover: bytes,
    bits,
    mode: LengthMode = LengthMode.IN_BAND,
    key: bytes | None = None,
) -> bytes:
    """Hide a bit sequence in the cover's case channel."""
    result = scan(cover)
    message = bitcodec.xor_transform(bits, key) if key else [1 if b else 0 for b in bits]
    if mode is LengthMode.IN_BAND:
        channel_bits = bitcodec.frame(message)
        if len(channel_bits) > len(result.sites):
            raise CapacityError(
                f"framed payload needs {len(channel_bits)} sites, cover has {len(result.sites)}"
            )
        return result.apply(channel_bits)
    if len(message) > len(result.sites):
        raise CapacityError(
            f"payload needs {len(message)} sites, cover has {len(result.sites)}"
        )
    stego = result.apply(message)
    return insert_header(stego, len(message))


def extract_bits(
    stego: bytes,
    mode: LengthMode = LengthMode.IN_BAND,
    key: bytes | None = None,
) -> bitcodec.Bits:
    """Recover the bit sequence hidden by embed_bits."""
    if mode is LengthMode.IN_BAND:
        sites = scan(stego).sites
        raw = [1 if 65 <= s.char <= 90 else 0 for s in sites]
        payload = bitcodec.unframe(raw)
    else:
        k = read_header(stego)
        sites = scan(stego).sites
        if len(sites) < k:
            raise TruncatedError(f"header declares {k} bits but only {len(sites)} sites exist")
        payload = [1 if 65 <= s.char <= 90 else 0 for s in sites[:k]]
    return bitcodec.xor_transform(payload, key) if key else payload


def embed(
    cover: bytes,
    payload: bytes,
    mode: LengthMode = LengthMode.IN_BAND,
    key: bytes | None = None,
) -> bytes:
    """Hide a byte payload; see embed_bits for the bit-level form."""
    return embed_bits(cover, bitcodec.bytes_to_bits(payload), mode, key)


def extract(
    stego: bytes,
    mode: LengthMode = LengthMode.IN_BAND,
    key: bytes | None = None,
) -> bytes:
    """Recover the byte payload hidden by embed."""
    return bitcodec.bits_to_bytes(extract_bits(stego, mode, key))


# --- <Header k> element handling -------------------------------------------

_PLAIN = 0
_EQ = 1
_VUNQ = 2
_VDQ = 3
_VSQ = 4

_WS = frozenset(b" \t\n\r\x0b\x0c")


def _iter_tags(data: bytes):
    """Yield (start, end, lowercased_name, is_end_tag) for each ordinary tag.

    Follows the same closing rules as the site scanner (quoted values may
    contain ``>``; unquoted ones may not).  Iteration simply stops at an
    unterminated construct.
    """
    find = data.find
    n = len(data)
    i = 0
    while True:
        lt = find(b"<", i)
        if lt < 0:
            return
        nxt = data[lt + 1] if lt + 1 < n else -1
        if nxt == 0x21:  # <!-- ... --> or <!...>
            if data[lt + 2 : lt + 4] == b"--":
                end = find(b"-->", lt + 4)
                if end < 0:
                    return
                i = end + 3
            else:
                end = find(b">", lt + 2)
                if end < 0:
                    return
                i = end + 1
            continue
        if nxt == 0x3F:  # <?...>
            end = find(b">", lt + 2)
            if end < 0:
                return
            i = end + 1
            continue
        i = lt + 1
        is_end = False
        if i < n and data[i] == 0x2F:
            is_end = True
            i += 1
        name = bytearray()
        in_name = True
        state = _PLAIN
        closed = False
        while i < n:
            c = data[i]
            if state == _VDQ:
                end = find(b'"', i)
                if end < 0:
                    return
                i = end + 1
                state = _PLAIN
                continue
            if state == _VSQ:
                end = find(b"'", i)
                if end < 0:
                    return
                i = end + 1
                state = _PLAIN
                continue
            if state == _VUNQ:
                if c == 0x3E:
                    closed = True
                    break
                if c in _WS:
                    state = _PLAIN
                i += 1
                continue
            # _PLAIN and _EQ
            if c == 0x3E:
                closed = True
                break
            if c == 0x22:
                state = _VDQ
                in_name = False
            elif c == 0x27:
                state = _VSQ
                in_name = False
            elif state == _EQ:
                if c not in _WS:
                    state = _VUNQ
                in_name = False
            elif c == 0x3D:
                state = _EQ
                in_name = False
            elif c in _WS or c == 0x2F:
                in_name = False
            elif in_name and len(name) < 8:
                name.append(c | 0x20 if 65 <= c <= 90 else c)
            i += 1
        if not closed:
            return
        yield lt, i + 1, bytes(name), is_end
        i += 1


def _find_header_element(document: bytes) -> tuple[int, int, int] | None:
    """Locate the first length-header element; returns (start, end, k)."""
    for start, end, name, is_end in _iter_tags(document):
        if is_end or name != b"header":
            continue
        m = _HEADER_SHAPE.fullmatch(document, start, end)
        if m:
            return start, end, int(m.group(1))
    return None


def insert_header(document: bytes, k: int) -> bytes:
    """Insert ``<Header k>`` after the first ``<head ...>`` tag, else at the start."""
    pos = 0
    for start, end, name, is_end in _iter_tags(document):
        if not is_end and name == b"head":
            pos = end
            break
    element = b"<Header %d>" % k
    return document[:pos] + element + document[pos:]


def read_header(document: bytes) -> int:
    """Read the bit count from the first ``<Header k>`` element."""
    found = _find_header_element(document)
    if found is None:
        raise NoHeaderError("no <Header k> element in document")
    return found[2]
