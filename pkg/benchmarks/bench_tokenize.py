#!/usr/bin/env python3
"""Compare the compiled token scanner against the pure-Python fallback.

Usage: python3 benchmarks/bench_tokenize.py [--sentences N] [--repeats R]

Builds a synthetic mixed-register corpus, runs both scanners over it, checks
they agree span-for-span, and reports throughput.
"""

import argparse
import random
import time

from formality3 import _scan_py

try:
    from formality3 import _scan_c
except ImportError:
    _scan_c = None

WORDS = ("the cat sleeps report meeting answer weird happy unclear transformation "
         "can't I'm don't you your hey lol idk sooo omg presumably rejected was "
         "it appears that nature event u.s. 3.14").split()
EXTRAS = ["\U0001F602", "O_O", ":)", ",", ".", "!", "?"]


def build_corpus(n_sentences: int, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    corpus = []
    for _ in range(n_sentences):
        words = [rng.choice(WORDS) for _ in range(rng.randint(5, 18))]
        if rng.random() < 0.4:
            words.insert(rng.randrange(len(words)), rng.choice(EXTRAS))
        corpus.append(" ".join(words))
    return corpus


def bench(scan, corpus: list[str], repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for sentence in corpus:
            scan(sentence)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--sentences", type=int, default=20000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    corpus = build_corpus(args.sentences)
    chars = sum(len(s) for s in corpus)
    print(f"corpus: {len(corpus)} sentences, {chars} characters")

    t_py = bench(_scan_py.scan_spans, corpus, args.repeats)
    print(f"pure python : {t_py:.3f}s  ({chars / t_py / 1e6:.1f} Mchar/s)")

    if _scan_c is None:
        print("compiled    : not built (pip install -e . compiles it)")
        return

    mismatches = sum(
        1 for s in corpus if _scan_c.scan_spans(s) != _scan_py.scan_spans(s))
    t_c = bench(_scan_c.scan_spans, corpus, args.repeats)
    print(f"compiled    : {t_c:.3f}s  ({chars / t_c / 1e6:.1f} Mchar/s)")
    print(f"speedup     : {t_py / t_c:.1f}x   span mismatches: {mismatches}")


if __name__ == "__main__":
    main()
