#!/usr/bin/env python3
"""Rank growth of the Calogero observable algebra in a truncated window:
spans of words in the ladder operators and exchanges, represented as exact
matrices between polynomial degree slices at a fixed rational coupling.

Usage: python scripts/observable_growth.py [--particles 2] [--word-len 3]
       [--degree 7] [--nu 1/5]
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from qalg.dunkl import observables_span_survey
from qalg.qformat import canonical_json


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--particles", type=int, default=2)
    ap.add_argument("--word-len", type=int, default=3)
    ap.add_argument("--degree", type=int, default=7)
    ap.add_argument("--nu", default="1/5")
    args = ap.parse_args()
    rep = observables_span_survey(
        args.particles, args.word_len, args.degree, Fraction(args.nu)
    )
    print(canonical_json(rep))
    ranks = rep["ranks"]
    print(
        "word length -> rank: "
        + ", ".join(f"{k}: {ranks[k]}" for k in sorted(ranks, key=int)),
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
