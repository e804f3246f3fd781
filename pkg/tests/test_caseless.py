import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import helpers
from casehide import caseless_channel as cc
from casehide.errors import (
    CapacityError,
    NoHeaderError,
    UnterminatedCommentError,
    UnterminatedStringError,
)
from casehide.model import Strategy, TokenKind

PASCAL = cc.load_profile("pascal")
BASIC = cc.load_profile("basic")


def significant(tokens):
    return [t for t in tokens if t.kind not in (TokenKind.WHITESPACE, TokenKind.PUNCT)]


def test_tokenize_pascal_statement():
    toks = significant(cc.tokenize(b"begin x := 'hi' end.", PASCAL))
    assert [(t.kind, t.text) for t in toks] == [
        (TokenKind.KEYWORD, b"begin"),
        (TokenKind.IDENTIFIER, b"x"),
        (TokenKind.STRING, b"'hi'"),
        (TokenKind.KEYWORD, b"end"),
    ]


def test_tokenize_brace_comment():
    toks = cc.tokenize(b"{comment}", PASCAL)
    assert len(toks) == 1 and toks[0].kind is TokenKind.COMMENT


def test_keyword_match_is_case_insensitive():
    toks = cc.tokenize(b"BEGIN", PASCAL)
    assert toks[0].kind is TokenKind.KEYWORD


def test_tokenize_star_comment_and_line_comment():
    toks = cc.tokenize(b"(* a *) // rest\nx", PASCAL)
    kinds = [t.kind for t in toks]
    assert kinds == [
        TokenKind.COMMENT,
        TokenKind.WHITESPACE,
        TokenKind.COMMENT,
        TokenKind.WHITESPACE,
        TokenKind.IDENTIFIER,
    ]


def test_doubled_quote_escape():
    toks = cc.tokenize(b"'it''s fine' rest", PASCAL)
    assert toks[0].kind is TokenKind.STRING
    assert toks[0].text == b"'it''s fine'"


def test_number_tokens():
    toks = [t for t in cc.tokenize(b"1.5e3 42 1..5", PASCAL) if t.kind is TokenKind.NUMBER]
    assert [t.text for t in toks] == [b"1.5e3", b"42", b"1", b"5"]


def test_unterminated_string_and_comment():
    with pytest.raises(UnterminatedStringError) as e1:
        cc.tokenize(b"x := 'oops", PASCAL)
    assert e1.value.offset == 5
    with pytest.raises(UnterminatedCommentError) as e2:
        cc.tokenize(b"begin { oops", PASCAL)
    assert e2.value.offset == 6


@given(st.binary(max_size=300))
def test_tokens_tile_document(source):
    try:
        tokens = cc.tokenize(source, PASCAL)
    except (UnterminatedStringError, UnterminatedCommentError):
        return
    pos = 0
    for tok in tokens:
        assert tok.start == pos
        assert source[tok.start : tok.end] == tok.text
        pos = tok.end
    assert pos == len(source)


def test_candidate_site_counts_per_strategy():
    tokens = cc.tokenize(b"begin x end", PASCAL)
    counts = {
        Strategy.KEYWORDS_ONLY: 8,
        Strategy.IDENTIFIERS_ONLY: 1,
        Strategy.FIRST_CHAR: 3,
        Strategy.ALL: 9,
    }
    for strategy, expected in counts.items():
        sites = cc.candidate_sites(tokens, strategy)
        assert len(sites) == expected, strategy


def test_first_char_sites_are_word_initials():
    tokens = cc.tokenize(b"begin counter end", PASCAL)
    sites = cc.candidate_sites(tokens, Strategy.FIRST_CHAR)
    assert [chr(s.char) for s in sites] == ["b", "c", "e"]


def test_first_char_skips_leading_underscore():
    tokens = cc.tokenize(b"_tmp", PASCAL)
    sites = cc.candidate_sites(tokens, Strategy.FIRST_CHAR)
    assert [chr(s.char) for s in sites] == ["t"]


def test_string_and_comment_letters_never_sites():
    src = b"begin s := 'Hello'; { Note } end."
    for strategy in Strategy:
        for site in cc.candidate_sites(cc.tokenize(src, PASCAL), strategy):
            assert not (12 <= site.offset <= 18 or 20 <= site.offset <= 27)


_SOURCE = b"""program demo;
var alpha, beta, gamma, index: integer;
begin
  alpha := 10;
  beta := alpha * 2;
  gamma := alpha + beta;
  for index := 1 to 8 do
  begin
    if gamma > beta then
      gamma := gamma - 1
    else
      beta := beta + alpha;
    while alpha < gamma do
      alpha := alpha + 2;
  end;
  repeat
    gamma := gamma div 2;
  until gamma < beta;
  case alpha of
    1: writeln('one');
    2: writeln('two');
  end;
  writeln('total: ', gamma);
end.
"""


@pytest.mark.parametrize("strategy", list(Strategy))
def test_roundtrip_each_strategy(strategy):
    payload = b"ok"
    assert len(payload) * 8 <= cc.capacity(_SOURCE, PASCAL, strategy)
    stego = cc.embed(_SOURCE, payload, PASCAL, strategy)
    assert cc.extract(stego, PASCAL, strategy) == payload
    assert stego.lower() == _SOURCE.lower()


def test_token_structure_preserved():
    stego = cc.embed(_SOURCE, b"Zq", PASCAL, Strategy.ALL, key=b"\x9c")
    before = cc.tokenize(_SOURCE, PASCAL)
    after = cc.tokenize(stego, PASCAL)
    assert [(t.kind, t.start, t.end) for t in before] == [
        (t.kind, t.start, t.end) for t in after
    ]
    for old, new in zip(before, after):
        assert old.text.lower() == new.text.lower()
        if old.kind in (TokenKind.STRING, TokenKind.NUMBER, TokenKind.COMMENT):
            assert old.text == new.text


def test_capacity_error():
    with pytest.raises(CapacityError):
        cc.embed(b"begin end.", b"way too large", PASCAL)


def test_extract_needs_32_sites():
    with pytest.raises(NoHeaderError):
        cc.extract(b"begin x end", PASCAL)


def test_basic_profile_roundtrip():
    src = b"""DIM total AS INTEGER
DIM step AS INTEGER
LET total = 0
FOR step = 1 TO 10
  LET total = total + step
NEXT step
PRINT "total is"; total  ' final tally
"""
    payload = b"b"
    assert len(payload) * 8 <= cc.capacity(src, BASIC, Strategy.ALL)
    stego = cc.embed(src, payload, BASIC, Strategy.ALL)
    assert cc.extract(stego, BASIC, Strategy.ALL) == payload
    # the quoted string and the apostrophe comment survive untouched
    assert b'"total is"' in stego
    assert b"' final tally" in stego


def test_custom_profile_file(tmp_path):
    profile_file = tmp_path / "tiny.profile"
    profile_file.write_text(
        "# toy language\nname tiny\nkeyword loop\nkeyword stop\n"
        "comment [ ]\nlinecomment !\nstring `\n"
    )
    profile = cc.load_profile(str(profile_file))
    assert profile.name == "tiny"
    src = b"loop counter beta gamma delta stop [skip] !note\n`str` loop alpha stop"
    stego = cc.embed_bits(src, [1, 0, 1], profile, Strategy.ALL)
    assert cc.extract_bits(stego, profile, Strategy.ALL) == [1, 0, 1]


def test_profile_parse_error():
    with pytest.raises(ValueError):
        cc.parse_profile("keyword a b\n")


def test_randomized_roundtrips_all_strategies():
    rng = random.Random(4242)
    for trial in range(40):
        source = helpers.random_pascal(rng)
        strategy = list(Strategy)[trial % 4]
        key = b"\x33" if trial % 3 == 0 else None
        payload = helpers.random_payload(rng, cc.capacity(source, PASCAL, strategy))
        stego = cc.embed(source, payload, PASCAL, strategy, key)
        assert cc.extract(stego, PASCAL, strategy, key) == payload
        assert stego.lower() == source.lower()
