"""Rune data model: decomposition, segmentation, stripping and rendering.

A *rune* is one base letter plus the combining marks attached to it,
regardless of how many codepoints encode it in the source text.  All
analysis in this package happens at the rune level, so this module is the
foundation everything else builds on.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field

__all__ = [
    "Rune",
    "ScriptProfile",
    "BUILTIN_PROFILES",
    "get_profile",
    "load_profile",
    "normalize_decompose",
    "segment_runes",
    "segment_runes_counted",
    "strip_runes",
    "strip_text",
    "render",
]


def normalize_decompose(text: str) -> str:
    """Canonical decomposition (NFD) with marks in canonical order. Idempotent."""
    return unicodedata.normalize("NFD", text)


def _parse_cp(token: str) -> str:
    """Turn "U+05BC" (or a bare character) into a one-character string."""
    if token.upper().startswith("U+"):
        return chr(int(token[2:], 16))
    if len(token) != 1:
        raise ValueError(f"not a codepoint spec: {token!r}")
    return token


@dataclass(frozen=True)
class ScriptProfile:
    """Per-script knobs for what counts as a diacritic mark.

    After decomposition a codepoint is treated as a mark iff its general
    category is Mn or Mc, plus anything in ``extra_mark_allowlist`` and
    minus anything in ``mark_denylist``.
    """

    name: str
    extra_mark_allowlist: frozenset[str] = frozenset()
    mark_denylist: frozenset[str] = frozenset()
    casefold: bool = True

    def __post_init__(self):
        overlap = self.extra_mark_allowlist & self.mark_denylist
        if overlap:
            raise ValueError(f"allowlist and denylist overlap: {sorted(overlap)}")

    def is_mark(self, ch: str) -> bool:
        if ch in self.mark_denylist:
            return False
        if ch in self.extra_mark_allowlist:
            return True
        return unicodedata.category(ch) in ("Mn", "Mc")

    @staticmethod
    def is_letter(ch: str) -> bool:
        return unicodedata.category(ch).startswith("L")


# All four shipped scripts encode their diacritics as Mn/Mc combining marks
# after NFD, so the builtin profiles need no allow/deny entries; they exist
# so corpora carry an explicit profile name and users have a place to hang
# overrides (e.g. denylisting Hebrew cantillation, U+0591..U+05AF).
BUILTIN_PROFILES = {
    "latin-generic": ScriptProfile(name="latin-generic"),
    "hebrew": ScriptProfile(name="hebrew"),
    "arabic": ScriptProfile(name="arabic"),
    "bengali": ScriptProfile(name="bengali"),
}


def load_profile(path) -> ScriptProfile:
    """Load a profile from its JSON document form.

    Schema: {"name": str, "extra_mark_allowlist": ["U+05BC", ...],
    "mark_denylist": [...], "casefold": bool}; all fields but "name"
    optional.
    """
    with open(path, encoding="utf-8") as f:
        doc = json.load(f)
    return ScriptProfile(
        name=doc["name"],
        extra_mark_allowlist=frozenset(_parse_cp(t) for t in doc.get("extra_mark_allowlist", [])),
        mark_denylist=frozenset(_parse_cp(t) for t in doc.get("mark_denylist", [])),
        casefold=bool(doc.get("casefold", True)),
    )


def get_profile(name_or_path: str) -> ScriptProfile:
    """Resolve a builtin profile name or a path to a profile JSON file."""
    if name_or_path in BUILTIN_PROFILES:
        return BUILTIN_PROFILES[name_or_path]
    return load_profile(name_or_path)


@dataclass(frozen=True)
class Rune:
    """One base letter plus its attached marks.

    ``base`` is the (case-folded, when the profile folds) base character;
    ``marks`` is the canonically ordered, duplicate-free mark tuple.
    ``upper`` records the source casing and does not take part in
    equality or hashing: "É" and "é" segment to equal runes.
    """

    base: str
    marks: tuple[str, ...] = ()
    upper: bool = field(default=False, compare=False)

    @property
    def marked(self) -> bool:
        return bool(self.marks)

    def stripped(self) -> "Rune":
        return Rune(self.base, (), self.upper)

    def text(self) -> str:
        """Decomposed text for this rune alone."""
        base = self.base.upper() if self.upper else self.base
        return base + "".join(self.marks)


def _canonical_marks(marks) -> tuple[str, ...]:
    # dedup, then ascending (combining class, codepoint)
    uniq = dict.fromkeys(marks)
    return tuple(sorted(uniq, key=lambda m: (unicodedata.combining(m), ord(m))))


def _fold(ch: str) -> str:
    # simple one-to-one lowercase; multi-char expansions (rare after NFD)
    # are left alone rather than changing the letter count
    low = ch.lower()
    return low if len(low) == 1 else ch


def segment_runes_counted(text: str, profile: ScriptProfile) -> tuple[list[Rune], int]:
    """Segment text into runes; also return the orphan-mark count.

    A mark with no preceding base letter on the line is degenerate input:
    it is dropped and tallied, never an error.
    """
    runes: list[Rune] = []
    orphans = 0
    base: str | None = None
    upper = False
    marks: list[str] = []

    def flush():
        nonlocal base, marks
        if base is not None:
            runes.append(Rune(base, _canonical_marks(marks), upper))
        base = None
        marks = []

    for ch in normalize_decompose(text):
        if profile.is_mark(ch):
            if base is None:
                orphans += 1
            else:
                marks.append(ch)
        elif ScriptProfile.is_letter(ch):
            flush()
            if profile.casefold:
                folded = _fold(ch)
                upper = folded != ch
                base = folded
            else:
                upper = False
                base = ch
        else:
            flush()
    flush()
    return runes, orphans


def segment_runes(text: str, profile: ScriptProfile | None = None) -> list[Rune]:
    """Segment text into runes (one per base letter; non-letters vanish)."""
    if profile is None:
        profile = BUILTIN_PROFILES["latin-generic"]
    return segment_runes_counted(text, profile)[0]


def strip_runes(runes: list[Rune]) -> list[Rune]:
    """Remove every mark, keeping bases. Idempotent."""
    return [r.stripped() for r in runes]


def strip_text(text: str, profile: ScriptProfile | None = None) -> str:
    """Remove diacritic marks from running text, preserving everything else.

    Unlike :func:`strip_runes` this keeps whitespace, punctuation and
    casing, so it is the right tool for producing an undiacritized copy of
    a corpus file.  Output is decomposed.
    """
    if profile is None:
        profile = BUILTIN_PROFILES["latin-generic"]
    return "".join(ch for ch in normalize_decompose(text) if not profile.is_mark(ch))


def render(runes: list[Rune], form: str = "decomposed") -> str:
    """Serialize runes back to text.

    form="decomposed" emits base + canonically ordered marks per rune;
    form="composed" additionally applies canonical composition (NFC).
    """
    s = "".join(r.text() for r in runes)
    if form == "composed":
        return unicodedata.normalize("NFC", s)
    if form != "decomposed":
        raise ValueError(f"unknown render form: {form!r}")
    return s
