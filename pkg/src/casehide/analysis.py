"""Capacity and distortion reporting: histograms and invariance checks.

A case-only channel cannot change the case-folded content of a
document, so (a) the per-letter case-folded counts of cover and stego
must match exactly, and (b) lowercasing both documents must yield
identical bytes once channel-inserted artifacts (the ``<Header k>``
element or the ident channel's stego comment) are removed.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass, field

from casehide import html_channel, kernels
from casehide.model import LengthMode

Histogram = list[int]

_STEGO_COMMENT = re.compile(rb"/\* stego:k=([0-9]+) \*/\n?")


def histogram(document: bytes) -> Histogram:
    """Per-byte-value occurrence counts (256 entries)."""
    return kernels.byte_histogram(document)


@dataclass(slots=True)
class HistogramComparison:
    cover: Histogram
    stego: Histogram
    byte_deltas: list[int] = field(init=False)
    folded_letter_deltas: dict[str, int] = field(init=False)
    mismatched_letters: list[str] = field(init=False)

    def __post_init__(self):
        self.byte_deltas = [s - c for c, s in zip(self.cover, self.stego)]
        self.folded_letter_deltas = {}
        for letter in string.ascii_lowercase:
            lo, up = ord(letter), ord(letter) - 32
            folded_cover = self.cover[lo] + self.cover[up]
            folded_stego = self.stego[lo] + self.stego[up]
            self.folded_letter_deltas[letter] = folded_stego - folded_cover
        self.mismatched_letters = [
            letter for letter, d in self.folded_letter_deltas.items() if d
        ]

    @property
    def case_only(self) -> bool:
        """True when every letter pair's case-folded count is conserved."""
        return not self.mismatched_letters


def compare_histograms(cover: Histogram, stego: Histogram) -> HistogramComparison:
    """Per-byte deltas plus case-folded letter-pair conservation flags."""
    return HistogramComparison(cover, stego)


@dataclass(slots=True)
class InvarianceReport:
    ok: bool
    first_diff: int | None
    note: str

    def __bool__(self) -> bool:
        return self.ok


def _strip_artifacts(stego: bytes, channel: str, mode: LengthMode | None) -> bytes:
    if channel == "html" and mode is LengthMode.HEADER_TAG:
        found = html_channel._find_header_element(stego)
        if found is not None:
            start, end, _ = found
            return stego[:start] + stego[end:]
    elif channel == "ident":
        m = _STEGO_COMMENT.match(stego)
        if m:
            return stego[m.end() :]
    return stego


def verify_invariance(
    cover: bytes,
    stego: bytes,
    channel: str,
    mode: LengthMode | None = None,
) -> InvarianceReport:
    """Check that the stego document is a case-only rewrite of the cover.

    Channel-inserted artifacts are removed from the stego side before
    comparison.  Returns a report with the first divergent offset (in
    post-removal coordinates) when the check fails.
    """
    a = cover.lower()
    b = _strip_artifacts(stego, channel, mode).lower()
    if a == b:
        return InvarianceReport(True, None, "case-folded documents identical")
    limit = min(len(a), len(b))
    for i in range(limit):
        if a[i] != b[i]:
            return InvarianceReport(
                False,
                i,
                f"case-folded documents differ at offset {i}: "
                f"cover {a[i:i + 8]!r} vs stego {b[i:i + 8]!r}",
            )
    return InvarianceReport(
        False, limit, f"case-folded lengths differ: cover {len(a)}, stego {len(b)}"
    )
