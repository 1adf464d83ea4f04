import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracle.py importable

from runemetrics import Corpus, Rune, get_profile, render, segment_runes

SPANISH = "El niño bebió café en la mañana"

# "The boy drank coffee in the morning", fully pointed.
HEBREW = (
    "הַיֶּלֶד "
    "שָׁתָה "
    "קָפֶה "
    "בַּבֹּקֶר"
)

LATIN = get_profile("latin-generic")


@pytest.fixture
def latin():
    return LATIN


@pytest.fixture
def spanish_corpus():
    return Corpus.from_lines([SPANISH], LATIN, language="spanish")


@pytest.fixture
def hebrew_corpus():
    return Corpus.from_lines([HEBREW], get_profile("hebrew"), language="hebrew")


BASES = "abcd"
MARKS = ("\u0301", "\u0302", "\u0303")  # acute, circumflex, tilde


def random_rune_text(rng: random.Random, n_bases=4, n_marks=3) -> str:
    """One synthetic rune as decomposed text."""
    base = rng.choice(BASES[:n_bases])
    k = rng.choice((0, 0, 1, 1, 2, 3))
    marks = rng.sample(MARKS[:n_marks], min(k, n_marks))
    return base + "".join(sorted(marks))


def random_corpus(rng: random.Random, max_runes=50, n_bases=4, n_marks=3) -> Corpus:
    n = rng.randint(1, max_runes)
    words, word = [], []
    for _ in range(n):
        word.append(random_rune_text(rng, n_bases, n_marks))
        if rng.random() < 0.3:
            words.append("".join(word))
            word = []
    if word:
        words.append("".join(word))
    return Corpus.from_lines([" ".join(words)], LATIN)


def single_mark_corpus(rng: random.Random, max_runes=50) -> Corpus:
    """Synthetic corpus in which no rune carries two or more marks."""
    n = rng.randint(1, max_runes)
    out = []
    for _ in range(n):
        base = rng.choice(BASES)
        out.append(base + (rng.choice(MARKS) if rng.random() < 0.4 else ""))
    return Corpus.from_lines(["".join(out)], LATIN)


def corpus_text(corpus: Corpus) -> str:
    return "\n".join(s.raw_text for s in corpus.sentences) + "\n"
