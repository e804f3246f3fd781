"""Pure-Python reference kernels for the per-byte hot loops.

``casehide.kernels`` prefers the compiled twin (``casehide._speedups``)
and falls back to this module.  The two implementations must stay
behaviourally identical; ``tests/test_kernels.py`` checks them against
each other on random inputs.
"""

from __future__ import annotations

BACKEND_NAME = "python"

KIND_TAG_NAME = 0
KIND_ATTR_NAME = 1

# In-tag machine states.
_NAME = 0
_BETWEEN = 1
_ATTR = 2
_EQ = 3
_VAL_DQ = 4
_VAL_SQ = 5
_VAL_UNQ = 6

_SPACE = frozenset(b" \t\n\r\x0b\x0c")

_LT = 0x3C
_GT = 0x3E
_SLASH = 0x2F
_EQUALS = 0x3D
_DQUOTE = 0x22
_SQUOTE = 0x27
_BANG = 0x21
_QMARK = 0x3F


def _is_alpha(c: int) -> bool:
    return 65 <= c <= 90 or 97 <= c <= 122


def scan_sites(data: bytes) -> tuple[list[tuple[int, int]], int]:
    """Collect (offset, kind) pairs for every embeddable letter in ``data``.

    Letters of tag names and attribute names inside ordinary tags are
    sites; attribute values, comments, ``<!...>`` declarations,
    ``<?...>`` instructions and text outside tags are not.  A tag whose
    name folds to ``header`` carrying exactly one bare all-digit token
    is a length-header element and contributes no sites.

    Returns ``(sites, err)`` where ``err`` is -1 for a clean scan or the
    offset of the ``<`` opening the construct the document ends inside
    (sites collected up to that point are still returned).
    """
    sites: list[tuple[int, int]] = []
    append = sites.append
    find = data.find
    n = len(data)
    i = 0
    while True:
        lt = find(b"<", i)
        if lt < 0:
            return sites, -1
        nxt = data[lt + 1] if lt + 1 < n else -1
        if nxt == _BANG:
            if data[lt + 2 : lt + 4] == b"--":
                end = find(b"-->", lt + 4)
                if end < 0:
                    return sites, lt
                i = end + 3
            else:
                end = find(b">", lt + 2)
                if end < 0:
                    return sites, lt
                i = end + 1
            continue
        if nxt == _QMARK:
            end = find(b">", lt + 2)
            if end < 0:
                return sites, lt
            i = end + 1
            continue

        # Ordinary tag: walk it with the in-tag machine.
        i = lt + 1
        is_end_tag = False
        if i < n and data[i] == _SLASH:
            is_end_tag = True
            i += 1
        tag_site_start = len(sites)
        name = bytearray()
        token_count = 0
        token_plain = False  # last token started as a bare (unquoted, non-value) token
        token_digits = False  # ... and consists only of digits so far
        state = _NAME
        closed = False
        while i < n:
            c = data[i]
            if state == _NAME:
                if c == _GT:
                    closed = True
                    break
                if c in _SPACE:
                    state = _BETWEEN
                elif c == _SLASH:
                    state = _BETWEEN
                elif c == _EQUALS:
                    state = _EQ
                elif c == _DQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == _SQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_SQ
                else:
                    if _is_alpha(c):
                        append((i, KIND_TAG_NAME))
                        if len(name) < 8:
                            name.append(c | 0x20)
                    elif len(name) < 8:
                        name.append(c)
            elif state == _BETWEEN:
                if c == _GT:
                    closed = True
                    break
                if c in _SPACE or c == _SLASH:
                    pass
                elif c == _EQUALS:
                    state = _EQ
                elif c == _DQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == _SQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_SQ
                else:
                    token_count += 1
                    token_plain = True
                    token_digits = 0x30 <= c <= 0x39
                    if _is_alpha(c):
                        append((i, KIND_ATTR_NAME))
                    state = _ATTR
            elif state == _ATTR:
                if c == _GT:
                    closed = True
                    break
                if c in _SPACE or c == _SLASH:
                    state = _BETWEEN
                elif c == _EQUALS:
                    state = _EQ
                elif c == _DQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == _SQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_SQ
                else:
                    if _is_alpha(c):
                        append((i, KIND_ATTR_NAME))
                        token_digits = False
                    elif not 0x30 <= c <= 0x39:
                        token_digits = False
            elif state == _EQ:
                if c == _GT:
                    closed = True
                    break
                if c in _SPACE:
                    pass
                elif c == _DQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == _SQUOTE:
                    token_count += 1
                    token_plain = False
                    state = _VAL_SQ
                else:
                    token_count += 1
                    token_plain = False
                    state = _VAL_UNQ
            elif state == _VAL_DQ:
                end = find(b'"', i)
                if end < 0:
                    i = n
                    break
                i = end
                state = _BETWEEN
            elif state == _VAL_SQ:
                end = find(b"'", i)
                if end < 0:
                    i = n
                    break
                i = end
                state = _BETWEEN
            else:  # _VAL_UNQ
                if c == _GT:
                    closed = True
                    break
                if c in _SPACE:
                    state = _BETWEEN
            i += 1
        if not closed:
            return sites, lt
        if (
            not is_end_tag
            and token_count == 1
            and token_plain
            and token_digits
            and bytes(name) == b"header"
        ):
            del sites[tag_site_start:]
        i += 1


def byte_histogram(data: bytes) -> list[int]:
    """Count occurrences of each byte value 0..255."""
    counts = [0] * 256
    for c in data:
        counts[c] += 1
    return counts
