from casehide import analysis, caseless_channel, html_channel, ident_channel
from casehide.model import LengthMode, Strategy


def test_histogram_basics():
    counts = analysis.histogram(b"aA")
    assert counts[97] == 1 and counts[65] == 1
    assert sum(counts) == 2
    assert analysis.histogram(b"") == [0] * 256


def test_histogram_sums_to_length():
    doc = bytes(range(256)) * 3
    assert sum(analysis.histogram(doc)) == len(doc)


def test_compare_histograms_case_only_change():
    comparison = analysis.compare_histograms(
        analysis.histogram(b"abcABC"), analysis.histogram(b"ABCabc")
    )
    assert comparison.case_only
    assert comparison.mismatched_letters == []
    assert any(d for d in comparison.byte_deltas) is False  # same multiset here


def test_compare_histograms_flags_real_change():
    comparison = analysis.compare_histograms(
        analysis.histogram(b"aaa"), analysis.histogram(b"aab")
    )
    assert not comparison.case_only
    assert comparison.mismatched_letters == ["a", "b"]
    assert comparison.folded_letter_deltas["a"] == -1
    assert comparison.folded_letter_deltas["b"] == 1


def test_compare_histograms_flip_shows_byte_deltas_only():
    comparison = analysis.compare_histograms(
        analysis.histogram(b"aa"), analysis.histogram(b"aA")
    )
    assert comparison.case_only
    assert comparison.byte_deltas[ord("a")] == -1
    assert comparison.byte_deltas[ord("A")] == 1


_COVER = (
    b'<html><head><title>t</title></head><body class="block">'
    b'<div id="main"><p title="x">words</p><a href="a.html">go</a></div>'
    b"</body></html>"
)


def test_invariance_html_inband():
    stego = html_channel.embed(_COVER, b"hi")
    report = analysis.verify_invariance(_COVER, stego, "html", LengthMode.IN_BAND)
    assert report.ok and bool(report)


def test_invariance_html_header_tag():
    stego = html_channel.embed(_COVER, b"hi", LengthMode.HEADER_TAG)
    assert not analysis.verify_invariance(_COVER, stego, "html", LengthMode.IN_BAND).ok
    assert analysis.verify_invariance(_COVER, stego, "html", LengthMode.HEADER_TAG).ok


def test_invariance_caseless():
    profile = caseless_channel.load_profile("pascal")
    src = (
        b"program t; var alpha, beta, gamma: integer; begin "
        b"alpha := 1; beta := alpha; gamma := beta; end."
    )
    stego = caseless_channel.embed(src, b"q", profile, Strategy.ALL)
    assert analysis.verify_invariance(src, stego, "caseless").ok


def test_invariance_ident_zero_bits_only():
    src = b"int main(){ int var; int other; var = other = 1; return var; }"
    zero = ident_channel.embed_bits(src, [0, 0])
    assert analysis.verify_invariance(src, zero, "ident").ok
    # an actual rename adds bytes: honestly reported as a difference
    one = ident_channel.embed_bits(src, [1, 0])
    report = analysis.verify_invariance(src, one, "ident")
    assert not report.ok
    assert report.first_diff is not None


def test_invariance_reports_divergence_offset():
    report = analysis.verify_invariance(b"<b>same</b>", b"<b>sAmX</b>", "html")
    assert not report.ok
    assert report.first_diff == 6  # the X, after case folding hides the A flip
