"""Frequency baseline for diacritics restoration.

Word lookup first (stripped, case-folded word -> most frequent diacritized
form), falling back to a per-letter map (base -> most frequent rune).  No
context modeling: this is a deterministic floor for the evaluation
harness, not a competitive restorer.
"""

from __future__ import annotations

import hashlib
import json
import re
from collections import Counter
from dataclasses import dataclass, field

from .corpus_io import Corpus
from .script_core import (
    Rune,
    ScriptProfile,
    get_profile,
    normalize_decompose,
    segment_runes,
)

FORMAT_VERSION = 1

_WS_SPLIT = re.compile(r"(\s+)")


@dataclass
class BaselineModel:
    word_map: dict            # stripped casefolded word -> decomposed diacritized form
    char_map: dict            # base char -> decomposed rune text (base + marks)
    meta: dict = field(default_factory=dict)
    profile: ScriptProfile = field(default_factory=lambda: ScriptProfile("latin-generic"))

    def save(self, path) -> None:
        doc = {
            "format_version": FORMAT_VERSION,
            "meta": self.meta,
            "word_map": self.word_map,
            "char_map": self.char_map,
        }
        with open(path, "w", encoding="utf-8") as f:
            json.dump(doc, f, ensure_ascii=True, sort_keys=True, indent=1)

    @classmethod
    def load(cls, path) -> "BaselineModel":
        with open(path, encoding="utf-8") as f:
            doc = json.load(f)
        if doc.get("format_version") != FORMAT_VERSION:
            raise ValueError(f"unsupported model format_version: {doc.get('format_version')!r}")
        profile = get_profile(doc["meta"].get("profile", "latin-generic"))
        return cls(word_map=doc["word_map"], char_map=doc["char_map"],
                   meta=doc["meta"], profile=profile)


def _word_forms(sentence, profile):
    """Per word: (stripped casefolded key, decomposed diacritized value)."""
    for token in sentence.raw_text.split():
        runes = segment_runes(token, profile)
        if not runes:
            continue
        key = "".join(r.base for r in runes)
        value = "".join(r.base + "".join(r.marks) for r in runes)
        yield key, value


def train(corpus: Corpus) -> BaselineModel:
    if not corpus.sentences:
        raise ValueError("cannot train on an empty corpus")
    profile = corpus.profile
    word_counts: dict[str, Counter] = {}
    char_counts: dict[str, Counter] = {}
    digest = hashlib.sha256()

    for sent in corpus.sentences:
        digest.update(normalize_decompose(sent.raw_text).encode("utf-8"))
        digest.update(b"\n")
        for key, value in _word_forms(sent, profile):
            word_counts.setdefault(key, Counter())[value] += 1
        for r in sent.runes:
            char_counts.setdefault(r.base, Counter())[r.base + "".join(r.marks)] += 1

    def modal(counter: Counter) -> str:
        # highest count; ties go to the smallest decomposed codepoint sequence
        return min(counter.items(), key=lambda kv: (-kv[1], kv[0]))[0]

    word_map = {k: modal(c) for k, c in word_counts.items()}
    char_map = {c: modal(cnt) for c, cnt in char_counts.items()}
    meta = {
        "profile": profile.name,
        "casefold": profile.casefold,
        "training_digest": digest.hexdigest(),
    }
    return BaselineModel(word_map=word_map, char_map=char_map, meta=meta, profile=profile)


def _restore_token(model: BaselineModel, token: str) -> str:
    profile = model.profile
    runes = segment_runes(token, profile)
    if not runes:
        return normalize_decompose(token)
    key = "".join(r.base for r in runes)
    stored = model.word_map.get(key)
    marks_per_letter: list[tuple[str, ...]] | None = None
    if stored is not None:
        stored_runes = segment_runes(stored, profile)
        if len(stored_runes) == len(runes):
            marks_per_letter = [r.marks for r in stored_runes]

    out = []
    letter_idx = 0
    predicted = False  # whether the preceding letter got predicted marks
    for ch in normalize_decompose(token):
        if profile.is_mark(ch):
            if not predicted:
                out.append(ch)  # no prediction made: input marks survive
            continue
        if not ScriptProfile.is_letter(ch):
            out.append(ch)
            predicted = False
            continue
        rune = runes[letter_idx]
        letter_idx += 1
        src = ch  # original case preserved
        if marks_per_letter is not None:
            out.append(src + "".join(marks_per_letter[letter_idx - 1]))
            predicted = True
        else:
            fallback = model.char_map.get(rune.base)
            if fallback is None:
                out.append(src)  # unseen base letter passes through
                predicted = False
            else:
                out.append(src + fallback[1:])  # marks of the modal rune
                predicted = True
    return "".join(out)


def diacritize(model: BaselineModel, text: str) -> str:
    """Restore diacritics over running text; output is decomposed."""
    out_lines = []
    for line in text.split("\n"):
        pieces = _WS_SPLIT.split(line)
        out_lines.append("".join(
            p if p.isspace() or not p else _restore_token(model, p)
            for p in pieces
        ))
    return "\n".join(out_lines)
