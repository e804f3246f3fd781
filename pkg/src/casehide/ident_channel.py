"""Underscore-rename steganography for case-sensitive C-like sources.

Case flipping would change program meaning here, so the carrier is the
variable name itself: each local or static variable encodes one bit in
declaration order, bit 1 appending a single underscore to the name at
its declaration and every use, bit 0 leaving it untouched.  Function
names, parameters, extern declarations, macros and anything inside
preprocessor lines are never renamed.  The payload bit count is
recorded in a ``/* stego:k=N */`` comment on the first line.

The declaration finder is a heuristic over a single-file C subset:
constructs it does not recognise (typedef'd declarators, K&R parameter
lists, conditional-compilation tricks) simply yield fewer candidates;
they are never renamed incorrectly.  Covers whose candidate variables
already end with an underscore are rejected outright, since extraction
could not tell a pre-existing underscore from an appended one.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from casehide import bitcodec
from casehide.errors import (
    AmbiguousCoverError,
    CapacityError,
    CollisionError,
    NoHeaderError,
    TruncatedError,
    UnterminatedCommentError,
    UnterminatedStringError,
)
from casehide.model import Token, TokenKind

STEGO_COMMENT_TEMPLATE = b"/* stego:k=%d */\n"
_STEGO_COMMENT = re.compile(rb"/\* stego:k=([0-9]+) \*/")

C_KEYWORDS = frozenset(
    """auto break case char const continue default do double else enum extern
    float for goto if inline int long register restrict return short signed
    sizeof static struct switch typedef union unsigned void volatile while
    _Bool _Complex _Imaginary""".split()
)

_TYPE_OR_STORAGE = frozenset(
    """auto char const double enum extern float inline int long register
    restrict short signed static struct typedef union unsigned void volatile
    _Bool _Complex _Imaginary""".split()
)

_QUALIFIERS = frozenset("const volatile restrict".split())

# Maximal-munch multi-character operators; '->' in particular must be a
# single token so member access can be told apart from comparisons.
_OPERATORS = [
    b"<<=", b">>=", b"...",
    b"->", b"++", b"--", b"<<", b">>", b"<=", b">=", b"==", b"!=",
    b"&&", b"||", b"+=", b"-=", b"*=", b"/=", b"%=", b"&=", b"|=", b"^=", b"##",
]

_WORD = re.compile(rb"[A-Za-z_][A-Za-z0-9_]*")


def match_identifier(text: bytes | str) -> bool:
    """Strict identifier automaton: one start char, then one or more
    continuation chars, so single-character names are rejected (the
    lexer itself accepts them)."""
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError:
            return False
    state = 0
    for c in text:
        if state == 0:
            if 65 <= c <= 90 or 97 <= c <= 122 or c == 0x5F:
                state = 1
            else:
                return False
        else:
            if 65 <= c <= 90 or 97 <= c <= 122 or 48 <= c <= 57 or c == 0x5F:
                state = 2
            else:
                return False
    return state == 2


def _is_space(c: int) -> bool:
    return c in (0x20, 0x09, 0x0A, 0x0D, 0x0B, 0x0C)


def _line_start(source: bytes, i: int) -> bool:
    j = i - 1
    while j >= 0 and source[j] in (0x20, 0x09):
        j -= 1
    return j < 0 or source[j] == 0x0A


def lex(source: bytes) -> list[Token]:
    """Tile a C-like source file into tokens.

    Preprocessor lines (``#`` first on the line, backslash continuations
    honoured) become single DIRECTIVE tokens; string and character
    literals honour backslash escapes; numbers follow the permissive
    preprocessing-number rule.
    """
    tokens: list[Token] = []
    n = len(source)
    i = 0
    while i < n:
        start = i
        c = source[i]
        if _is_space(c):
            while i < n and _is_space(source[i]):
                i += 1
            tokens.append(Token(TokenKind.WHITESPACE, start, i, source[start:i]))
            continue
        if c == 0x23 and _line_start(source, i):  # '#'
            while i < n:
                end = source.find(b"\n", i)
                if end < 0:
                    i = n
                    break
                if end > 0 and source[end - 1] == 0x5C:  # line continuation
                    i = end + 1
                    continue
                i = end
                break
            tokens.append(Token(TokenKind.DIRECTIVE, start, i, source[start:i]))
            continue
        if c == 0x2F and i + 1 < n:
            nxt = source[i + 1]
            if nxt == 0x2F:
                end = source.find(b"\n", i)
                i = n if end < 0 else end
                tokens.append(Token(TokenKind.COMMENT, start, i, source[start:i]))
                continue
            if nxt == 0x2A:
                end = source.find(b"*/", i + 2)
                if end < 0:
                    raise UnterminatedCommentError(
                        f"comment opened at offset {start} never closes", start
                    )
                i = end + 2
                tokens.append(Token(TokenKind.COMMENT, start, i, source[start:i]))
                continue
        if c in (0x22, 0x27):  # string or char literal
            i += 1
            while True:
                if i >= n:
                    raise UnterminatedStringError(
                        f"literal opened at offset {start} never closes", start
                    )
                d = source[i]
                if d == 0x5C:  # backslash escape
                    i += 2
                    continue
                i += 1
                if d == c:
                    break
            tokens.append(Token(TokenKind.STRING, start, i, source[start:i]))
            continue
        if 65 <= c <= 90 or 97 <= c <= 122 or c == 0x5F:
            while i < n and (
                65 <= source[i] <= 90
                or 97 <= source[i] <= 122
                or 48 <= source[i] <= 57
                or source[i] == 0x5F
            ):
                i += 1
            text = source[start:i]
            kind = TokenKind.KEYWORD if text.decode("ascii") in C_KEYWORDS else TokenKind.IDENTIFIER
            tokens.append(Token(kind, start, i, text))
            continue
        if 48 <= c <= 57 or (
            c == 0x2E and i + 1 < n and 48 <= source[i + 1] <= 57
        ):
            # Preprocessing number: digits, letters, underscores, dots,
            # and exponent signs after e/E/p/P.
            i += 1
            while i < n:
                d = source[i]
                if (
                    48 <= d <= 57
                    or 65 <= d <= 90
                    or 97 <= d <= 122
                    or d in (0x5F, 0x2E)
                ):
                    i += 1
                elif d in (0x2B, 0x2D) and source[i - 1] in (0x65, 0x45, 0x70, 0x50):
                    i += 1
                else:
                    break
            tokens.append(Token(TokenKind.NUMBER, start, i, source[start:i]))
            continue
        for op in _OPERATORS:
            if source.startswith(op, i):
                i += len(op)
                tokens.append(Token(TokenKind.PUNCT, start, i, source[start:i]))
                break
        else:
            i += 1
            tokens.append(Token(TokenKind.PUNCT, start, i, source[start:i]))
    return tokens


class SymbolKind(enum.Enum):
    LOCAL_VAR = "local"
    STATIC_VAR = "static"
    FUNCTION = "function"
    PARAMETER = "parameter"
    EXTERN = "extern"
    MACRO = "macro"
    OTHER = "other"


@dataclass
class Symbol:
    name: str
    scope_id: int
    kind: SymbolKind
    decl_offset: int
    occurrences: list[tuple[int, int]] = field(default_factory=list)
    rename: str | None = None


class SymbolTable:
    """Maps (name, scope id) to the symbol declared there."""

    def __init__(self):
        self.entries: dict[tuple[str, int], Symbol] = {}

    def add(self, sym: Symbol) -> None:
        self.entries[(sym.name, sym.scope_id)] = sym


@dataclass(frozen=True)
class CandidateVar:
    symbol: Symbol
    declaration_offset: int
    ordinal: int


def _directive_words(tokens: list[Token]) -> set[str]:
    words: set[str] = set()
    for tok in tokens:
        if tok.kind is TokenKind.DIRECTIVE:
            for m in _WORD.finditer(tok.text):
                words.add(m.group(0).decode("ascii"))
    return words


class _Walker:
    """Single pass over the significant tokens, building the symbol table.

    Every identifier is either a declaration site (registered into the
    current scope) or a use (resolved innermost-first against the scope
    stack); unresolvable uses are ignored.  The walk is defensive: on
    anything outside the recognised subset it skips tokens rather than
    guessing, which can only lose candidates.
    """

    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.n = len(toks)
        self.symtab = SymbolTable()
        self.candidates: list[Symbol] = []
        self.next_scope_id = 1
        self.scopes: list[tuple[int, dict[str, Symbol]]] = [(0, {})]

    # -- scope helpers -----------------------------------------------------

    def push_scope(self) -> None:
        self.scopes.append((self.next_scope_id, {}))
        self.next_scope_id += 1

    def pop_scope(self) -> None:
        self.scopes.pop()

    def at_file_scope(self) -> bool:
        return len(self.scopes) == 1

    def register(self, tok: Token, kind: SymbolKind) -> Symbol:
        scope_id, bindings = self.scopes[-1]
        name = tok.text.decode("ascii")
        sym = Symbol(name, scope_id, kind, tok.start, [(tok.start, tok.end)])
        bindings[name] = sym
        self.symtab.add(sym)
        if kind in (SymbolKind.LOCAL_VAR, SymbolKind.STATIC_VAR):
            self.candidates.append(sym)
        return sym

    def record_use(self, idx: int) -> None:
        tok = self.toks[idx]
        if idx > 0:
            prev = self.toks[idx - 1]
            if prev.kind is TokenKind.PUNCT and prev.text in (b".", b"->"):
                return  # member access, its own namespace
        name = tok.text.decode("ascii")
        for _, bindings in reversed(self.scopes):
            sym = bindings.get(name)
            if sym is not None:
                sym.occurrences.append((tok.start, tok.end))
                return

    # -- token helpers -----------------------------------------------------

    def kw(self, i: int) -> str | None:
        if i < self.n and self.toks[i].kind is TokenKind.KEYWORD:
            return self.toks[i].text.decode("ascii")
        return None

    def punct(self, i: int) -> bytes | None:
        if i < self.n and self.toks[i].kind is TokenKind.PUNCT:
            return self.toks[i].text
        return None

    def is_ident(self, i: int) -> bool:
        return i < self.n and self.toks[i].kind is TokenKind.IDENTIFIER

    # -- expression consumption --------------------------------------------

    def consume_expr(self, i: int, stop: frozenset[bytes], consume_stop: bool = True) -> int:
        """Record uses until one of ``stop`` appears at bracket depth 0.

        Never consumes a ``}`` that would close the surrounding block.
        """
        depth = 0
        while i < self.n:
            tok = self.toks[i]
            if tok.kind is TokenKind.PUNCT:
                t = tok.text
                if depth == 0 and t in stop:
                    return i + 1 if consume_stop else i
                if t in (b"(", b"[", b"{"):
                    depth += 1
                elif t in (b")", b"]", b"}"):
                    if depth == 0:
                        return i  # underflow: leave closer for the caller
                    depth -= 1
            elif tok.kind is TokenKind.IDENTIFIER:
                self.record_use(i)
            i += 1
        return i

    # -- statements ----------------------------------------------------------

    def parse_statement(self, i: int) -> int:
        if i >= self.n:
            return i
        begin = i
        tok = self.toks[i]
        if tok.kind is TokenKind.DIRECTIVE:
            return i + 1
        if tok.kind is TokenKind.PUNCT:
            if tok.text == b"{":
                self.push_scope()
                i += 1
                while i < self.n and self.punct(i) != b"}":
                    i = self.advance(i, self.parse_statement(i))
                self.pop_scope()
                return min(i + 1, self.n)
            if tok.text == b";":
                return i + 1
            return self.consume_expr(i, frozenset((b";",)))
        if tok.kind is TokenKind.KEYWORD:
            w = tok.text.decode("ascii")
            if w in _TYPE_OR_STORAGE:
                return self.parse_declaration(i)
            if w == "for":
                return self.parse_for(i)
            if w in ("if", "while", "switch"):
                i += 1
                if self.punct(i) == b"(":
                    i = self.consume_expr(i + 1, frozenset((b")",)))
                if i < self.n and self.punct(i) != b"}":
                    i = self.advance(begin, self.parse_statement(i))
                if w == "if" and self.kw(i) == "else":
                    i = self.advance(begin, self.parse_statement(i + 1))
                return i
            if w == "do":
                i = self.advance(begin, self.parse_statement(i + 1))
                if self.kw(i) == "while":
                    i += 1
                    if self.punct(i) == b"(":
                        i = self.consume_expr(i + 1, frozenset((b")",)))
                    if self.punct(i) == b";":
                        i += 1
                return i
            if w == "else":
                return self.advance(begin, self.parse_statement(i + 1))
            if w == "goto":
                i += 1
                if self.is_ident(i):
                    i += 1  # label name, its own namespace: not a use
                return self.consume_expr(i, frozenset((b";",)))
            if w in ("case", "default"):
                return self.consume_expr(i + 1, frozenset((b":",)))
            return self.consume_expr(i + 1, frozenset((b";",)))
        if (
            tok.kind is TokenKind.IDENTIFIER
            and self.punct(i + 1) == b":"
        ):
            return i + 2  # goto label definition
        return self.consume_expr(i, frozenset((b";",)))

    def advance(self, before: int, after: int) -> int:
        return after if after > before else before + 1

    def parse_for(self, i: int) -> int:
        begin = i
        i += 1
        if self.punct(i) != b"(":
            return self.consume_expr(i, frozenset((b";",)))
        self.push_scope()  # loop variable scope spans header + body
        i += 1
        lead = self.kw(i)
        if lead is not None and lead in _TYPE_OR_STORAGE:
            i = self.parse_declaration(i)
        else:
            i = self.consume_expr(i, frozenset((b";",)))
        i = self.consume_expr(i, frozenset((b";",)))
        i = self.consume_expr(i, frozenset((b")",)))
        if i < self.n and self.punct(i) != b"}":
            i = self.advance(begin, self.parse_statement(i))
        self.pop_scope()
        return self.advance(begin, i)

    # -- declarations --------------------------------------------------------

    def parse_declaration(self, i: int, member: bool = False) -> int:
        storage: set[str] = set()
        while True:
            w = self.kw(i)
            if w is None or w not in _TYPE_OR_STORAGE:
                break
            storage.add(w)
            i += 1
            if w in ("struct", "union", "enum"):
                if self.is_ident(i):
                    i += 1  # tag name, separate namespace
                if self.punct(i) == b"{":
                    if w == "enum":
                        i = self.parse_enum_body(i)
                    else:
                        i = self.parse_member_block(i)
        return self.parse_declarators(i, storage, member)

    def parse_declarators(self, i: int, storage: set[str], member: bool) -> int:
        while i < self.n:
            tok = self.toks[i]
            if tok.kind is TokenKind.PUNCT and tok.text == b";":
                return i + 1
            if tok.kind is TokenKind.PUNCT and tok.text == b",":
                i += 1
                continue
            if tok.kind is TokenKind.PUNCT and tok.text == b"*":
                i += 1
                continue
            kw = self.kw(i)
            if kw is not None and kw in _QUALIFIERS:
                i += 1
                continue
            name_idx = -1
            if tok.kind is TokenKind.PUNCT and tok.text == b"(":
                name_idx, i = self.parse_group_declarator(i)
            elif tok.kind is TokenKind.IDENTIFIER:
                name_idx = i
                i += 1
            else:
                i += 1  # outside the subset: skip defensively
                continue
            is_func = False
            while i < self.n:
                p = self.punct(i)
                if p == b"(":
                    is_func = True
                    self.push_scope()  # parameters live in the body scope
                    i = self.parse_param_list(i)
                    if self.punct(i) == b"{":
                        if name_idx >= 0:
                            self.register(self.toks[name_idx], SymbolKind.FUNCTION)
                            name_idx = -1
                        i += 1
                        while i < self.n and self.punct(i) != b"}":
                            i = self.advance(i, self.parse_statement(i))
                        self.pop_scope()
                        return min(i + 1, self.n)
                    self.pop_scope()  # prototype: parameter names are irrelevant
                elif p == b"[":
                    i = self.consume_expr(i + 1, frozenset((b"]",)))
                elif p in (b"=", b":"):
                    i = self.consume_expr(i + 1, frozenset((b",", b";")), consume_stop=False)
                else:
                    break
            if name_idx >= 0:
                self.register_declarator(self.toks[name_idx], storage, member, is_func)
        return i

    def register_declarator(
        self, tok: Token, storage: set[str], member: bool, is_func: bool
    ) -> None:
        if member or "typedef" in storage:
            kind = SymbolKind.OTHER
        elif is_func:
            kind = SymbolKind.FUNCTION
        elif "extern" in storage:
            kind = SymbolKind.EXTERN
        elif self.at_file_scope():
            # Plain globals have external linkage, so they are excluded
            # just like explicit extern declarations.
            kind = SymbolKind.STATIC_VAR if "static" in storage else SymbolKind.EXTERN
        else:
            kind = SymbolKind.STATIC_VAR if "static" in storage else SymbolKind.LOCAL_VAR
        self.register(tok, kind)

    def parse_group_declarator(self, i: int) -> tuple[int, int]:
        """Parenthesised declarator like ``(*fp)``: first identifier is the name."""
        depth = 0
        name_idx = -1
        while i < self.n:
            tok = self.toks[i]
            if tok.kind is TokenKind.PUNCT:
                if tok.text == b"(":
                    depth += 1
                elif tok.text == b")":
                    depth -= 1
                    if depth == 0:
                        return name_idx, i + 1
            elif tok.kind is TokenKind.IDENTIFIER:
                if name_idx < 0:
                    name_idx = i
                else:
                    self.record_use(i)
            i += 1
        return name_idx, i

    def parse_param_list(self, i: int) -> int:
        """Register parameter names into the current (body) scope."""
        depth = 1
        i += 1
        name_taken = False
        after_tag_kw = False
        while i < self.n:
            tok = self.toks[i]
            if tok.kind is TokenKind.PUNCT:
                t = tok.text
                if t == b"(":
                    depth += 1
                elif t == b")":
                    depth -= 1
                    if depth == 0:
                        return i + 1
                elif t == b"," and depth == 1:
                    name_taken = False
                elif t == b"[":
                    i = self.consume_expr(i + 1, frozenset((b"]",)))
                    continue
                after_tag_kw = False
            elif tok.kind is TokenKind.KEYWORD:
                after_tag_kw = tok.text in (b"struct", b"union", b"enum")
            elif tok.kind is TokenKind.IDENTIFIER:
                if after_tag_kw:
                    after_tag_kw = False  # type tag, not a name
                elif not name_taken:
                    self.register(tok, SymbolKind.PARAMETER)
                    name_taken = True
                else:
                    self.record_use(i)
            i += 1
        return i

    def parse_member_block(self, i: int) -> int:
        self.push_scope()
        i += 1
        while i < self.n and self.punct(i) != b"}":
            w = self.kw(i)
            if w is not None and w in _TYPE_OR_STORAGE:
                i = self.advance(i, self.parse_declaration(i, member=True))
            else:
                i += 1
        self.pop_scope()
        return min(i + 1, self.n)

    def parse_enum_body(self, i: int) -> int:
        i += 1
        while i < self.n and self.punct(i) != b"}":
            if self.is_ident(i):
                self.register(self.toks[i], SymbolKind.OTHER)  # enum constant
                i += 1
                if self.punct(i) == b"=":
                    i = self.consume_expr(i + 1, frozenset((b",",)), consume_stop=False)
                if self.punct(i) == b",":
                    i += 1
            else:
                i += 1
        return min(i + 1, self.n)

    def run(self) -> None:
        i = 0
        while i < self.n:
            i = self.advance(i, self.parse_statement(i))


def find_candidates(
    tokens: list[Token], strip_trailing_underscore: bool = False
) -> tuple[SymbolTable, list[CandidateVar]]:
    """Locate the bit-carrying variables, in declaration order.

    ``strip_trailing_underscore`` re-runs the analysis as the extractor
    must: candidate names are considered with one trailing underscore
    removed, so a stego file resolves to the same candidate set as its
    cover.
    """
    significant = [
        t for t in tokens if t.kind not in (TokenKind.WHITESPACE, TokenKind.COMMENT)
    ]
    walker = _Walker(significant)
    walker.run()
    banned = _directive_words(tokens)

    def effective_name(sym: Symbol) -> str:
        if strip_trailing_underscore and sym.name.endswith("_"):
            return sym.name[:-1]
        return sym.name

    for sym in walker.candidates:
        if effective_name(sym).endswith("_"):
            raise AmbiguousCoverError(
                f"variable {sym.name!r} (offset {sym.decl_offset}) already ends with '_'"
            )
    kept = [sym for sym in walker.candidates if effective_name(sym) not in banned]
    candidates = [
        CandidateVar(sym, sym.decl_offset, ordinal) for ordinal, sym in enumerate(kept)
    ]
    return walker.symtab, candidates


def capacity(source: bytes) -> int:
    """Payload bits the source can carry: one per candidate variable."""
    return len(find_candidates(lex(source))[1])


def _all_identifier_names(tokens: list[Token]) -> set[str]:
    names = {
        t.text.decode("ascii") for t in tokens if t.kind is TokenKind.IDENTIFIER
    }
    return names | _directive_words(tokens)


def embed_bits(source: bytes, bits, key: bytes | None = None) -> bytes:
    tokens = lex(source)
    _, candidates = find_candidates(tokens)
    message = bitcodec.xor_transform(bits, key) if key else [1 if b else 0 for b in bits]
    if len(message) > len(candidates):
        raise CapacityError(
            f"payload needs {len(message)} candidate variables, source has {len(candidates)}"
        )
    visible = _all_identifier_names(tokens)
    edits: list[tuple[int, int, bytes]] = []
    for bit, cand in zip(message, candidates):
        if not bit:
            continue
        sym = cand.symbol
        renamed = sym.name + "_"
        if renamed in visible:
            raise CollisionError(
                f"renaming {sym.name!r} to {renamed!r} collides with an existing identifier"
            )
        sym.rename = renamed
        new_text = renamed.encode("ascii")
        edits.extend((s, e, new_text) for s, e in sym.occurrences)
    edits.sort()
    out = bytearray()
    pos = 0
    for s, e, text in edits:
        out += source[pos:s]
        out += text
        pos = e
    out += source[pos:]
    return STEGO_COMMENT_TEMPLATE % len(bits) + bytes(out)


def extract_bits(stego: bytes, key: bytes | None = None) -> bitcodec.Bits:
    tokens = lex(stego)
    significant = [
        t for t in tokens if t.kind is not TokenKind.WHITESPACE
    ]
    if not significant or significant[0].kind is not TokenKind.COMMENT:
        raise NoHeaderError("stego comment missing from first line")
    m = _STEGO_COMMENT.fullmatch(significant[0].text)
    if m is None:
        raise NoHeaderError("stego comment malformed")
    declared = int(m.group(1))
    _, candidates = find_candidates(tokens, strip_trailing_underscore=True)
    if len(candidates) < declared:
        raise TruncatedError(
            f"stego comment declares {declared} bits but only "
            f"{len(candidates)} candidate variables exist"
        )
    payload = [
        1 if cand.symbol.name.endswith("_") else 0 for cand in candidates[:declared]
    ]
    return bitcodec.xor_transform(payload, key) if key else payload


def embed(source: bytes, payload: bytes, key: bytes | None = None) -> bytes:
    return embed_bits(source, bitcodec.bytes_to_bits(payload), key)


def extract(stego: bytes, key: bytes | None = None) -> bytes:
    return bitcodec.bits_to_bytes(extract_bits(stego, key))
