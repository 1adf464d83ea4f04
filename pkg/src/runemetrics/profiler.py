"""Descriptive corpus statistics and single-/multi-diacritic classification."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus_io import Corpus
from .script_core import segment_runes

# Stable TSV column order for profile output; part of the interface.
PROFILE_COLUMNS = (
    "language",
    "corpus",
    "density_pct",
    "multi_pct",
    "words_diac_pct",
    "lines_diac_pct",
    "mean_diacs_per_word",
    "n_runes",
    "system",
)


@dataclass
class CorpusProfile:
    density_pct: float
    multi_diacritic_pct: float      # share of ALL rune tokens bearing >= 2 marks
    pct_words_diacritized: float    # words with >= 1 mark
    pct_lines_diacritized: float
    mean_diacs_per_diacritized_word: float
    distinct_marked_runes: int      # marked rune TYPES only
    system_class: str               # "Multi" iff any token bears >= 2 marks
    warnings: int                   # orphan combining marks dropped at segmentation

    def as_row(self, language: str = "", corpus: str = "") -> dict:
        return {
            "language": language,
            "corpus": corpus,
            "density_pct": self.density_pct,
            "multi_pct": self.multi_diacritic_pct,
            "words_diac_pct": self.pct_words_diacritized,
            "lines_diac_pct": self.pct_lines_diacritized,
            "mean_diacs_per_word": self.mean_diacs_per_diacritized_word,
            "n_runes": self.distinct_marked_runes,
            "system": self.system_class,
        }


def iter_words(sentence, profile):
    """Whitespace tokens containing at least one letter, as rune lists.

    Surrounding punctuation needs no explicit trimming here: non-letters
    produce no runes, so a token's rune list already is its word content.
    """
    for token in sentence.raw_text.split():
        runes = segment_runes(token, profile)
        if runes:
            yield runes


def profile(corpus: Corpus) -> CorpusProfile:
    total_runes = 0
    total_marks = 0
    multi_tokens = 0
    marked_types = set()
    n_words = 0
    n_words_marked = 0
    marks_in_marked_words = 0
    n_lines = 0
    n_lines_marked = 0
    orphans = 0

    for sent in corpus.sentences:
        n_lines += 1
        orphans += sent.orphan_marks
        line_marks = 0
        for r in sent.runes:
            total_runes += 1
            k = len(r.marks)
            total_marks += k
            line_marks += k
            if k >= 2:
                multi_tokens += 1
            if k:
                marked_types.add(r)
        if line_marks:
            n_lines_marked += 1
        for word in iter_words(sent, corpus.profile):
            n_words += 1
            wmarks = sum(len(r.marks) for r in word)
            if wmarks:
                n_words_marked += 1
                marks_in_marked_words += wmarks

    if n_words == 0:
        raise ValueError("corpus contains no words")

    return CorpusProfile(
        density_pct=100.0 * total_marks / total_runes,
        multi_diacritic_pct=100.0 * multi_tokens / total_runes,
        pct_words_diacritized=100.0 * n_words_marked / n_words,
        pct_lines_diacritized=100.0 * n_lines_marked / n_lines,
        mean_diacs_per_diacritized_word=(
            marks_in_marked_words / n_words_marked if n_words_marked else 0.0
        ),
        distinct_marked_runes=len(marked_types),
        system_class="Multi" if multi_tokens else "Single",
        warnings=orphans,
    )
