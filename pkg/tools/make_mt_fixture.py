#!/usr/bin/env python3
"""Regenerate the MT19937 reference vector from numpy's generator.

numpy's legacy RandomState uses the canonical MT19937 scalar seeding and
word extraction, so its raw 32-bit stream is an independent oracle for
our from-scratch implementation. Output: one unsigned decimal per line.
"""

import argparse
from pathlib import Path

import numpy as np

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "mt19937_seed5489_u32.txt"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=5489)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = parser.parse_args()

    words = np.random.RandomState(args.seed).randint(0, 2**32, size=args.count, dtype=np.uint32)
    assert args.seed != 5489 or words[0] == 3499211612, "oracle sanity check failed"
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("".join(f"{w}\n" for w in words))
    print(f"wrote {args.count} words for seed {args.seed} to {args.out}")


if __name__ == "__main__":
    main()
