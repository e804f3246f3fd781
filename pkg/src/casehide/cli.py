"""Command-line front end: embed, extract, capacity, analyze.

stdout carries only artifact data (stego documents, payload bytes,
reports); diagnostics and errors go to stderr.  Exit codes: 0 success,
1 operation failure (the error code name is printed), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from casehide import analysis, caseless_channel, html_channel, ident_channel
from casehide.errors import StegoError
from casehide.model import LengthMode, Strategy

_CHANNELS = ("html", "caseless", "ident")


def _add_io_options(sub: argparse.ArgumentParser, output: bool = True) -> None:
    sub.add_argument("--in", dest="infile", metavar="PATH", help="input document (default: stdin)")
    if output:
        sub.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    sub.add_argument("--key", metavar="HEX", help="optional XOR key as hex bytes (toy masking, not encryption)")


def _add_channel_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--channel", required=True, choices=_CHANNELS)
    sub.add_argument(
        "--mode",
        choices=[m.value for m in LengthMode],
        help="html only: where the bit count is stored (default inband)",
    )
    sub.add_argument(
        "--strategy",
        choices=[s.value for s in Strategy],
        help="caseless only: site selection variant (default all)",
    )
    sub.add_argument(
        "--profile",
        metavar="NAME|PATH",
        help="caseless only: built-in profile name (pascal, basic) or profile file",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casehide",
        description="Hide and recover bit payloads in the letter-case channel "
        "of HTML documents and program source code.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_embed = subs.add_parser("embed", help="hide a payload in a cover document")
    _add_channel_options(p_embed)
    _add_io_options(p_embed)
    payload = p_embed.add_mutually_exclusive_group(required=True)
    payload.add_argument("--payload", metavar="PATH", help="payload file")
    payload.add_argument("--payload-text", metavar="TEXT", help="payload as a literal string")

    p_extract = subs.add_parser("extract", help="recover the payload from a stego document")
    _add_channel_options(p_extract)
    _add_io_options(p_extract)

    p_capacity = subs.add_parser("capacity", help="print payload capacity in bits")
    _add_channel_options(p_capacity)
    _add_io_options(p_capacity, output=False)

    p_analyze = subs.add_parser("analyze", help="histogram and invariance report for a cover/stego pair")
    _add_channel_options(p_analyze)
    p_analyze.add_argument("--stego", metavar="PATH", required=True, help="stego document to compare")
    _add_io_options(p_analyze)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.channel != "html" and args.mode is not None:
        parser.error("--mode is only valid with --channel html")
    if args.channel != "caseless":
        if args.strategy is not None:
            parser.error("--strategy is only valid with --channel caseless")
        if args.profile is not None:
            parser.error("--profile is only valid with --channel caseless")


def _read(path: str | None) -> bytes:
    if path is None:
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path: str | None, data: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _key_bytes(parser: argparse.ArgumentParser, args: argparse.Namespace) -> bytes | None:
    if args.key is None:
        return None
    try:
        key = bytes.fromhex(args.key)
    except ValueError:
        parser.error(f"--key {args.key!r} is not valid hex")
    if not key:
        parser.error("--key must contain at least one byte")
    return key


def _channel_setup(parser, args):
    mode = LengthMode(args.mode) if args.mode else LengthMode.IN_BAND
    strategy = Strategy(args.strategy) if args.strategy else Strategy.ALL
    profile = None
    if args.channel == "caseless":
        try:
            profile = caseless_channel.load_profile(args.profile or "pascal")
        except (OSError, ValueError, UnicodeDecodeError) as exc:
            parser.error(f"cannot load profile: {exc}")
    return mode, strategy, profile


def _capacity_of(args, document, mode, strategy, profile) -> int:
    if args.channel == "html":
        return html_channel.capacity(document, mode)
    if args.channel == "caseless":
        return caseless_channel.capacity(document, profile, strategy)
    return ident_channel.capacity(document)


def _cmd_embed(parser, args) -> int:
    mode, strategy, profile = _channel_setup(parser, args)
    key = _key_bytes(parser, args)
    cover = _read(args.infile)
    if args.payload is not None:
        payload = _read(args.payload)
    else:
        payload = args.payload_text.encode("utf-8")
    if args.channel == "html":
        stego = html_channel.embed(cover, payload, mode, key)
    elif args.channel == "caseless":
        stego = caseless_channel.embed(cover, payload, profile, strategy, key)
    else:
        stego = ident_channel.embed(cover, payload, key)
    _write(args.out, stego)
    cap = _capacity_of(args, cover, mode, strategy, profile)
    print(f"bits-used={len(payload) * 8} capacity={cap}", file=sys.stderr)
    return 0


def _cmd_extract(parser, args) -> int:
    mode, strategy, profile = _channel_setup(parser, args)
    key = _key_bytes(parser, args)
    stego = _read(args.infile)
    if args.channel == "html":
        payload = html_channel.extract(stego, mode, key)
    elif args.channel == "caseless":
        payload = caseless_channel.extract(stego, profile, strategy, key)
    else:
        payload = ident_channel.extract(stego, key)
    _write(args.out, payload)
    return 0


def _cmd_capacity(parser, args) -> int:
    mode, strategy, profile = _channel_setup(parser, args)
    document = _read(args.infile)
    print(_capacity_of(args, document, mode, strategy, profile))
    return 0


def _cmd_analyze(parser, args) -> int:
    mode, strategy, profile = _channel_setup(parser, args)
    cover = _read(args.infile)
    stego = _read(args.stego)
    hc = analysis.histogram(cover)
    hs = analysis.histogram(stego)
    comparison = analysis.compare_histograms(hc, hs)
    lines = ["# byte\tcover\tstego\tdelta"]
    for value in range(256):
        lines.append(f"{value}\t{hc[value]}\t{hs[value]}\t{hs[value] - hc[value]}")
    mism = ",".join(comparison.mismatched_letters) or "none"
    invariance = analysis.verify_invariance(cover, stego, args.channel, mode)
    lines.append(f"# total-bytes\tcover={sum(hc)}\tstego={sum(hs)}")
    lines.append(f"# nonzero-byte-deltas={sum(1 for d in comparison.byte_deltas if d)}")
    lines.append(f"# folded-letter-mismatches={mism}")
    lines.append(f"# case-fold-invariance={'ok' if invariance.ok else 'FAIL: ' + invariance.note}")
    _write(args.out, ("\n".join(lines) + "\n").encode("utf-8"))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    commands = {
        "embed": _cmd_embed,
        "extract": _cmd_extract,
        "capacity": _cmd_capacity,
        "analyze": _cmd_analyze,
    }
    try:
        return commands[args.command](parser, args)
    except StegoError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
