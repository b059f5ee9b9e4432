#!/usr/bin/env python3
"""Freezes reference hyphenation break points for the syllabifier tests.

Runs pyphen over the bundled pattern file (pyphen's default margins, two
letters each side) and writes one `word<TAB>hy-phen-at-ed` line per word: a
seeded sample of plain dictionary words plus every plain word in the fixture
embedding.

    python3 tools/freeze_hyphenation.py [--count N] [--seed N]
"""

import argparse
import pathlib
import random

import pyphen

ROOT = pathlib.Path(__file__).resolve().parent.parent


def plain(w):
    return w.isascii() and w.isalpha() and len(w) >= 2


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--out", default=str(ROOT / "tests" / "fixtures" / "hyphenation_reference.tsv"))
    args = ap.parse_args()

    dic = pyphen.Pyphen(filename=str(ROOT / "resources" / "hyph_en_US.dic"))
    words = []
    with open(ROOT / "resources" / "cmudict.dict", encoding="latin-1") as f:
        for line in f:
            if line.startswith(";;;"):
                continue
            w = line.split()[0]
            if plain(w):
                words.append(w.lower())
    sample = random.Random(args.seed).sample(sorted(set(words)), args.count)
    with open(ROOT / "resources" / "fixture" / "embeddings.txt") as f:
        next(f)
        fixture = [line.split(" ", 1)[0] for line in f]
    extra = sorted({w.lower() for w in fixture if plain(w)} - set(sample))

    with open(args.out, "w") as out:
        for w in sample + extra:
            out.write(f"{w}\t{dic.inserted(w)}\n")
    print(f"wrote {len(sample) + len(extra)} words to {args.out}")


if __name__ == "__main__":
    main()
