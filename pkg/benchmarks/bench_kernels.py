#!/usr/bin/env python3
"""Benchmark the compiled scan/histogram kernels against the pure-Python twins.

Usage:  python benchmarks/bench_kernels.py [--size-mb 8] [--repeats 5]

Builds a deterministic synthetic HTML document, then times each backend
on the two hot kernels.  The compiled backend requires the extension
(`python setup.py build_ext --inplace` or a regular install).
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from casehide import _kernels_py  # noqa: E402

try:
    from casehide import _speedups
except ImportError:
    _speedups = None


def synthetic_document(target_bytes: int) -> bytes:
    rng = random.Random(7)
    tags = ["div", "p", "span", "a", "table", "td", "li", "h2", "section"]
    words = ["lorem", "ipsum", "tide", "pool", "granite", "ledge", "swell"]
    parts = ["<!DOCTYPE html><html><head><title>bench</title></head><body>"]
    size = len(parts[0])
    while size < target_bytes:
        tag = rng.choice(tags)
        attr = f' class="{rng.choice(words)}" id={rng.choice(words)}{rng.randint(0, 99)}'
        text = " ".join(rng.choice(words) for _ in range(rng.randint(2, 12)))
        chunk = f"<{tag}{attr}>{text}</{tag}>\n"
        parts.append(chunk)
        size += len(chunk)
    parts.append("</body></html>")
    return "".join(parts).encode()


def best_of(fn, arg, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size-mb", type=float, default=8.0)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    doc = synthetic_document(int(args.size_mb * 1024 * 1024))
    mb = len(doc) / 1024 / 1024
    print(f"document: {mb:.1f} MiB synthetic HTML, best of {args.repeats} runs\n")

    backends = [("python", _kernels_py)]
    if _speedups is not None:
        assert _speedups.scan_sites(doc) == _kernels_py.scan_sites(doc)
        assert _speedups.byte_histogram(doc) == _kernels_py.byte_histogram(doc)
        backends.append(("c", _speedups))
    else:
        print("compiled extension not built; showing pure-Python timings only")
        print("build it with: python setup.py build_ext --inplace\n")

    results: dict[tuple[str, str], float] = {}
    for kernel_name, getter in (
        ("scan_sites", lambda m: m.scan_sites),
        ("byte_histogram", lambda m: m.byte_histogram),
    ):
        for backend_name, module in backends:
            results[(kernel_name, backend_name)] = best_of(getter(module), doc, args.repeats)

    print(f"{'kernel':<16}{'backend':<9}{'seconds':>9}{'MiB/s':>9}")
    for (kernel_name, backend_name), seconds in results.items():
        print(f"{kernel_name:<16}{backend_name:<9}{seconds:>9.4f}{mb / seconds:>9.1f}")
    if _speedups is not None:
        print()
        for kernel_name in ("scan_sites", "byte_histogram"):
            speedup = results[(kernel_name, "python")] / results[(kernel_name, "c")]
            print(f"{kernel_name}: compiled is {speedup:.1f}x faster")
    return 0


if __name__ == "__main__":
    sys.exit(main())
