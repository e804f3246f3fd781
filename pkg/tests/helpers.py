"""Shared test utilities: corpus generators and fixture access.

The generators are deterministic given a seeded random.Random so test
failures reproduce exactly.
"""

from __future__ import annotations

import random
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"

HTML_FIXTURES = sorted((FIXTURES / "html").glob("*.html"))
C_FIXTURES = sorted((FIXTURES / "c").glob("*.c"))

_TAGS = [
    "div", "p", "span", "a", "em", "strong", "ul", "li", "table", "tr",
    "td", "th", "h1", "h2", "h3", "section", "article", "nav", "footer",
    "main", "aside", "b", "i", "code", "pre", "blockquote", "label",
]
_VOID_TAGS = ["br", "hr", "img", "input", "meta", "link"]
_ATTRS = ["id", "class", "href", "src", "title", "name", "value", "lang",
          "align", "width", "height", "data-kind", "rel", "type"]
_WORDS = [
    "lorem", "ipsum", "dolor", "amet", "tide", "pool", "Granite", "ledge",
    "mussel", "anemone", "Kelp", "swell", "9am", "2009", "offshore",
]


def _mixed_case(rng: random.Random, word: str) -> str:
    roll = rng.random()
    if roll < 0.6:
        return word
    if roll < 0.8:
        return word.upper()
    return "".join(c.upper() if rng.random() < 0.4 else c for c in word)


def _attr(rng: random.Random) -> str:
    name = _mixed_case(rng, rng.choice(_ATTRS))
    roll = rng.random()
    if roll < 0.15:
        return name  # boolean attribute, no value
    value = rng.choice(_WORDS + ["x.html", "34", "main top", "a-b_c"])
    quote = rng.random()
    if quote < 0.45:
        return f'{name}="{value}"'
    if quote < 0.7:
        return f"{name}='{value}'"
    return f"{name}={value.split()[0]}"  # unquoted values cannot hold spaces


def random_html(rng: random.Random, min_tags: int = 10, max_tags: int = 60) -> bytes:
    """Deterministic HTML-ish tag soup that scans cleanly."""
    parts: list[str] = []
    if rng.random() < 0.5:
        parts.append("<!DOCTYPE html>")
    if rng.random() < 0.4:
        parts.append("<html><head><title>t</title></head><body>")
    for _ in range(rng.randint(min_tags, max_tags)):
        roll = rng.random()
        if roll < 0.08:
            parts.append(f"<!-- {rng.choice(_WORDS)} {rng.choice(_WORDS)} -->")
        elif roll < 0.12:
            parts.append(f"<{_mixed_case(rng, rng.choice(_VOID_TAGS))}"
                         + (" " + _attr(rng) if rng.random() < 0.5 else "")
                         + ("/>" if rng.random() < 0.5 else ">"))
        else:
            tag = rng.choice(_TAGS)
            attrs = " ".join(_attr(rng) for _ in range(rng.randint(0, 3)))
            opening = _mixed_case(rng, tag) + (" " + attrs if attrs else "")
            text = " ".join(rng.choice(_WORDS) for _ in range(rng.randint(0, 6)))
            if rng.random() < 0.1:
                text += " &amp; more "
            if rng.random() < 0.05:
                text += " 3 > 2 "
            parts.append(f"<{opening}>{text}</{_mixed_case(rng, tag)}>")
        if rng.random() < 0.3:
            parts.append("\n")
    return "".join(parts).encode("utf-8")


_PASCAL_NAMES = [
    "alpha", "beta", "gamma", "delta", "counter", "total", "index", "limit",
    "value", "result", "scale", "offset", "weight", "sample", "buffer",
]


def random_pascal(rng: random.Random, min_stmts: int = 12, max_stmts: int = 40) -> bytes:
    """Deterministic Pascal-ish source with plenty of keywords and identifiers.

    Every site-selection strategy needs at least the 32 length-prefix
    sites, so the generator tops the program up until keywords, word
    count, and identifiers each clear that bar comfortably.
    """
    names = rng.sample(_PASCAL_NAMES, rng.randint(6, 10))
    keyword_letters = 0
    identifier_letters = 0
    word_count = 0

    def track(keywords: tuple[str, ...] = (), identifiers: tuple[str, ...] = ()):
        nonlocal keyword_letters, identifier_letters, word_count
        keyword_letters += sum(len(w) for w in keywords)
        identifier_letters += sum(len(w) for w in identifiers)
        word_count += len(keywords) + len(identifiers)

    prog_name = f"{rng.choice(_PASCAL_NAMES)}{rng.randint(1, 99)}"
    lines = [f"program {_mixed_case(rng, prog_name)};"]
    track(("program",), (prog_name,))
    if rng.random() < 0.5:
        lines.append(f"const tuning = {rng.randint(1, 500)};")
        track(("const",), ("tuning",))
    decls = ", ".join(_mixed_case(rng, n) for n in names[:4])
    lines.append(f"var {decls}: integer;")
    track(("var",), tuple(names[:4]) + ("integer",))
    lines.append(f"var {_mixed_case(rng, names[4])}: string;")
    track(("var",), (names[4], "string"))
    if rng.random() < 0.4:
        lines.append("{ scratch values for the demo run }")
    lines.append("begin")
    track(("begin",))

    def statement() -> str:
        roll = rng.random()
        a, b = rng.choice(names[:4]), rng.choice(names[:4])
        if roll < 0.3:
            track(identifiers=(a, b))
            return f"  {_mixed_case(rng, a)} := {_mixed_case(rng, b)} + {rng.randint(0, 99)};"
        if roll < 0.45:
            track(("if", "then"), (a, b))
            return (
                f"  if {_mixed_case(rng, a)} > {rng.randint(1, 9)} then"
                f" {_mixed_case(rng, b)} := {rng.randint(0, 9)};"
            )
        if roll < 0.6:
            track(("while", "do"), (a, a, a))
            return (
                f"  while {_mixed_case(rng, a)} < {rng.randint(10, 50)} do"
                f" {_mixed_case(rng, a)} := {_mixed_case(rng, a)} + 1;"
            )
        if roll < 0.7:
            track(identifiers=("writeln", a))
            word = rng.choice(_WORDS).replace("'", "''")
            return f"  writeln('{word}: ', {_mixed_case(rng, a)});"
        if roll < 0.76:
            return f"  {{ {rng.choice(_WORDS)} {rng.choice(_WORDS)} }}"
        if roll < 0.82:
            return f"  (* adjust {rng.choice(_WORDS)} *)"
        if roll < 0.88:
            return f"  // note {rng.choice(_WORDS)}"
        track(("for", "to", "do"), (a, b, b))
        return (
            f"  for {_mixed_case(rng, a)} := 1 to {rng.randint(2, 20)} do"
            f" {_mixed_case(rng, b)} := {_mixed_case(rng, b)} * 2;"
        )

    for _ in range(rng.randint(min_stmts, max_stmts)):
        lines.append(statement())
    while keyword_letters < 48 or identifier_letters < 48 or word_count < 48:
        a = rng.choice(names[:4])
        track(("while", "do"), (a, a, a))
        lines.append(
            f"  while {_mixed_case(rng, a)} < {rng.randint(10, 50)} do"
            f" {_mixed_case(rng, a)} := {_mixed_case(rng, a)} + 1;"
        )
    lines.append("end.")
    track(("end",))
    return "\n".join(lines).encode("utf-8")


def random_payload(rng: random.Random, capacity_bits: int) -> bytes:
    """Random payload bytes fitting the given bit capacity."""
    max_bytes = max(0, capacity_bits // 8)
    return bytes(rng.randint(0, 255) for _ in range(rng.randint(0, max_bytes)))
