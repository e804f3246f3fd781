"""Bit-level plumbing: byte/bit conversion, length framing, toy XOR masking.

Bits are plain ``list[int]`` values holding 0s and 1s, MSB-first within
each source byte.  The XOR keystream is NOT encryption; it is a
convenience obfuscation only and must never be relied on for secrecy.
"""

from __future__ import annotations

from typing import Sequence

from casehide.errors import NoHeaderError, PartialByteError, TooLongError, TruncatedError

Bits = list[int]

LENGTH_PREFIX_BITS = 32
MAX_PAYLOAD_BITS = 2**32 - 1


def bytes_to_bits(payload: bytes) -> Bits:
    """Expand bytes to bits, MSB first, bytes in input order."""
    bits: Bits = []
    append = bits.append
    for byte in payload:
        for shift in range(7, -1, -1):
            append((byte >> shift) & 1)
    return bits


def bits_to_bytes(bits: Sequence[int]) -> bytes:
    """Pack bits (MSB first) back into bytes; inverse of bytes_to_bits."""
    if len(bits) % 8:
        raise PartialByteError(f"bit count {len(bits)} is not a multiple of 8")
    out = bytearray()
    acc = 0
    for i, bit in enumerate(bits):
        acc = (acc << 1) | (1 if bit else 0)
        if i % 8 == 7:
            out.append(acc)
            acc = 0
    return bytes(out)


def frame(payload: Sequence[int]) -> Bits:
    """Prefix ``payload`` with its bit count as 32 big-endian bits."""
    k = len(payload)
    if k > MAX_PAYLOAD_BITS:
        raise TooLongError(f"payload of {k} bits exceeds the 32-bit length prefix")
    prefix = [(k >> shift) & 1 for shift in range(31, -1, -1)]
    return prefix + [1 if b else 0 for b in payload]


def unframe(bits: Sequence[int]) -> Bits:
    """Read the 32-bit length prefix and return exactly that many payload bits.

    Trailing bits beyond the declared length are ignored.
    """
    if len(bits) < LENGTH_PREFIX_BITS:
        raise NoHeaderError(
            f"{len(bits)} bits available, need {LENGTH_PREFIX_BITS} for the length prefix"
        )
    k = 0
    for bit in bits[:LENGTH_PREFIX_BITS]:
        k = (k << 1) | (1 if bit else 0)
    body = bits[LENGTH_PREFIX_BITS:]
    if len(body) < k:
        raise TruncatedError(f"length prefix declares {k} bits but only {len(body)} follow")
    return [1 if b else 0 for b in body[:k]]


def xor_transform(bits: Sequence[int], key: bytes) -> Bits:
    """XOR ``bits`` with the key bytes expanded to a repeating MSB-first bitstream.

    Involution: applying the same key twice restores the input.
    """
    if not key:
        raise ValueError("XOR key must contain at least one byte")
    keystream = bytes_to_bits(key)
    n = len(keystream)
    return [(1 if b else 0) ^ keystream[i % n] for i, b in enumerate(bits)]
