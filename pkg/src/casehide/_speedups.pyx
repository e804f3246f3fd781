# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of casehide._kernels_py.

Same contract, same outputs, typed per-byte loops.  The pure module is
the reference; keep the two in lockstep (tests/test_kernels.py compares
them on random inputs).
"""

BACKEND_NAME = "c"

KIND_TAG_NAME = 0
KIND_ATTR_NAME = 1

cdef enum:
    _NAME = 0
    _BETWEEN = 1
    _ATTR = 2
    _EQ = 3
    _VAL_DQ = 4
    _VAL_SQ = 5
    _VAL_UNQ = 6


cdef inline bint _is_alpha(unsigned char c) noexcept:
    return (65 <= c <= 90) or (97 <= c <= 122)


cdef inline bint _is_space(unsigned char c) noexcept:
    return c == 0x20 or c == 0x09 or c == 0x0A or c == 0x0D or c == 0x0B or c == 0x0C


def scan_sites(bytes data):
    """See casehide._kernels_py.scan_sites."""
    cdef const unsigned char* buf = data
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t i = 0, lt, tag_site_start
    cdef int state
    cdef unsigned char c, nxt
    cdef bint is_end_tag, closed, token_plain, token_digits
    cdef unsigned char name[8]
    cdef int name_len
    cdef long token_count
    sites = []
    append = sites.append

    while True:
        # text between constructs
        while i < n and buf[i] != 0x3C:  # '<'
            i += 1
        if i >= n:
            return sites, -1
        lt = i
        nxt = buf[lt + 1] if lt + 1 < n else 0
        if lt + 1 >= n:
            # '<' at end of input: treat as an open ordinary tag
            return sites, lt
        if nxt == 0x21:  # '!'
            if lt + 3 < n and buf[lt + 2] == 0x2D and buf[lt + 3] == 0x2D:
                i = lt + 4
                while True:
                    if i + 2 >= n:
                        return sites, lt
                    if buf[i] == 0x2D and buf[i + 1] == 0x2D and buf[i + 2] == 0x3E:
                        i += 3
                        break
                    i += 1
                continue
            i = lt + 2
            while i < n and buf[i] != 0x3E:
                i += 1
            if i >= n:
                return sites, lt
            i += 1
            continue
        if nxt == 0x3F:  # '?'
            i = lt + 2
            while i < n and buf[i] != 0x3E:
                i += 1
            if i >= n:
                return sites, lt
            i += 1
            continue

        i = lt + 1
        is_end_tag = False
        if i < n and buf[i] == 0x2F:
            is_end_tag = True
            i += 1
        tag_site_start = len(sites)
        name_len = 0
        token_count = 0
        token_plain = False
        token_digits = False
        state = _NAME
        closed = False
        while i < n:
            c = buf[i]
            if state == _NAME:
                if c == 0x3E:
                    closed = True
                    break
                if _is_space(c) or c == 0x2F:
                    state = _BETWEEN
                elif c == 0x3D:
                    state = _EQ
                elif c == 0x22:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == 0x27:
                    token_count += 1
                    token_plain = False
                    state = _VAL_SQ
                else:
                    if _is_alpha(c):
                        append((i, KIND_TAG_NAME))
                        if name_len < 8:
                            name[name_len] = c | 0x20
                            name_len += 1
                    elif name_len < 8:
                        name[name_len] = c
                        name_len += 1
            elif state == _BETWEEN:
                if c == 0x3E:
                    closed = True
                    break
                if _is_space(c) or c == 0x2F:
                    pass
                elif c == 0x3D:
                    state = _EQ
                elif c == 0x22:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == 0x27:
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
                if c == 0x3E:
                    closed = True
                    break
                if _is_space(c) or c == 0x2F:
                    state = _BETWEEN
                elif c == 0x3D:
                    state = _EQ
                elif c == 0x22:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == 0x27:
                    token_count += 1
                    token_plain = False
                    state = _VAL_SQ
                else:
                    if _is_alpha(c):
                        append((i, KIND_ATTR_NAME))
                        token_digits = False
                    elif not (0x30 <= c <= 0x39):
                        token_digits = False
            elif state == _EQ:
                if c == 0x3E:
                    closed = True
                    break
                if _is_space(c):
                    pass
                elif c == 0x22:
                    token_count += 1
                    token_plain = False
                    state = _VAL_DQ
                elif c == 0x27:
                    token_count += 1
                    token_plain = False
                    state = _VAL_SQ
                else:
                    token_count += 1
                    token_plain = False
                    state = _VAL_UNQ
            elif state == _VAL_DQ:
                if c == 0x22:
                    state = _BETWEEN
            elif state == _VAL_SQ:
                if c == 0x27:
                    state = _BETWEEN
            else:  # _VAL_UNQ
                if c == 0x3E:
                    closed = True
                    break
                if _is_space(c):
                    state = _BETWEEN
            i += 1
        if not closed:
            return sites, lt
        if (
            not is_end_tag
            and token_count == 1
            and token_plain
            and token_digits
            and name_len == 6
            and name[0] == 0x68  # h
            and name[1] == 0x65  # e
            and name[2] == 0x61  # a
            and name[3] == 0x64  # d
            and name[4] == 0x65  # e
            and name[5] == 0x72  # r
        ):
            del sites[tag_site_start:]
        i += 1


def byte_histogram(bytes data):
    """See casehide._kernels_py.byte_histogram."""
    cdef const unsigned char* buf = data
    cdef Py_ssize_t n = len(data)
    cdef Py_ssize_t i
    cdef long counts[256]
    for i in range(256):
        counts[i] = 0
    for i in range(n):
        counts[buf[i]] += 1
    return [counts[i] for i in range(256)]
