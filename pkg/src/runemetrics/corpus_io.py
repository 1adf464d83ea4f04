"""Corpus reading (plain text / CoNLL-U) and seeded fixed-size sampling."""

from __future__ import annotations

from dataclasses import dataclass, field

from .script_core import Rune, ScriptProfile, normalize_decompose, segment_runes_counted

__all__ = [
    "CorpusError",
    "Sentence",
    "Corpus",
    "SamplingConfig",
    "Xorshift64Star",
    "read_plaintext",
    "read_conllu",
    "sample",
    "write_plaintext",
]

_MASK64 = (1 << 64) - 1


class CorpusError(ValueError):
    """Malformed corpus input (bad UTF-8, broken CoNLL-U framing, ...)."""


@dataclass(frozen=True)
class Sentence:
    raw_text: str
    runes: tuple[Rune, ...]
    line_index: int
    orphan_marks: int = 0

    @classmethod
    def from_text(cls, raw_text: str, line_index: int, profile: ScriptProfile) -> "Sentence":
        runes, orphans = segment_runes_counted(raw_text, profile)
        return cls(raw_text=raw_text, runes=tuple(runes), line_index=line_index, orphan_marks=orphans)


@dataclass
class Corpus:
    sentences: list[Sentence]
    language_label: str = ""
    family_label: str = ""
    profile_name: str = "latin-generic"
    profile: ScriptProfile = field(default_factory=lambda: ScriptProfile("latin-generic"))

    def __len__(self) -> int:
        return len(self.sentences)

    def rune_count(self) -> int:
        return sum(len(s.runes) for s in self.sentences)

    def iter_runes(self):
        for s in self.sentences:
            yield from s.runes

    @classmethod
    def from_lines(cls, lines, profile: ScriptProfile, language: str = "", family: str = "") -> "Corpus":
        sents = [
            Sentence.from_text(line, i, profile)
            for i, line in enumerate(lines)
            if line.strip()
        ]
        return cls(sentences=sents, language_label=language, family_label=family,
                   profile_name=profile.name, profile=profile)


@dataclass(frozen=True)
class SamplingConfig:
    target_base_chars: int = 300_000
    seed: int = 1

    def __post_init__(self):
        if self.target_base_chars <= 0:
            raise ValueError("target_base_chars must be positive")


class Xorshift64Star:
    """Portable 64-bit PRNG used for reproducible shuffling.

    Recurrence (all ops mod 2**64):
        x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
        output = x * 0x2545F4914F6CDD1D
    The seed is mixed through one splitmix64 step so that any 64-bit seed
    (including 0) yields a valid nonzero state.  Bounded draws use
    rejection sampling, so shuffles are unbiased and platform-independent.
    """

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            v = self.next64()
            if v < limit:
                return v % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _decode_utf8(path) -> str:
    with open(path, "rb") as f:
        data = f.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise CorpusError(f"{path}: invalid UTF-8 at byte offset {e.start}") from None


def read_plaintext(path, profile: ScriptProfile, language: str = "", family: str = "") -> Corpus:
    """Read a one-sentence-per-line UTF-8 file; blank lines are skipped."""
    text = _decode_utf8(path)
    sents = []
    for i, line in enumerate(text.splitlines()):
        if line.strip():
            sents.append(Sentence.from_text(line, i, profile))
    return Corpus(sentences=sents, language_label=language, family_label=family,
                  profile_name=profile.name, profile=profile)


def _conllu_sentence_text(comment_text, tokens):
    if comment_text is not None:
        return comment_text
    parts = []
    skip_until = 0
    for tid, form, misc in tokens:
        if "-" in tid:  # multiword range line: surface form covers its tokens
            lo, hi = tid.split("-", 1)
            skip_until = int(hi)
            parts.append((form, misc))
        elif "." in tid:  # empty node, never part of the surface text
            continue
        else:
            if int(tid) <= skip_until:
                continue
            parts.append((form, misc))
    out = []
    for i, (form, misc) in enumerate(parts):
        out.append(form)
        no_space = any(f == "SpaceAfter=No" for f in misc.split("|"))
        if not no_space and i != len(parts) - 1:
            out.append(" ")
    return "".join(out)


def read_conllu(path, profile: ScriptProfile, language: str = "", family: str = "") -> Corpus:
    """Read a CoNLL-U file, one Sentence per sentence block.

    The "# text = ..." comment wins when present; otherwise the sentence is
    rebuilt from FORM columns honoring SpaceAfter=No and multiword ranges.
    """
    text = _decode_utf8(path)
    sents = []
    comment_text = None
    tokens = []
    start_line = 0

    def finish(line_no):
        nonlocal comment_text, tokens, start_line
        if comment_text is not None or tokens:
            raw = _conllu_sentence_text(comment_text, tokens)
            sents.append(Sentence.from_text(raw, start_line, profile))
        comment_text = None
        tokens = []
        start_line = line_no + 1

    for lineno, line in enumerate(text.splitlines()):
        if not line.strip():
            finish(lineno)
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("text ="):
                comment_text = body[len("text ="):].strip()
            elif body == "text =" or body == "text=":
                comment_text = ""
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise CorpusError(f"{path}: line {lineno + 1}: expected 10 tab-separated columns, got {len(cols)}")
        tokens.append((cols[0], cols[1], cols[9]))
    finish(len(text.splitlines()))
    return Corpus(sentences=sents, language_label=language, family_label=family,
                  profile_name=profile.name, profile=profile)


def sample(corpus: Corpus, cfg: SamplingConfig) -> Corpus:
    """Shuffle-and-accumulate sampling to a fixed rune-count target.

    Sentences are shuffled (Fisher-Yates over Xorshift64Star seeded with
    cfg.seed) and taken in order until the cumulative rune count reaches
    cfg.target_base_chars; the sentence that crosses the threshold is
    included whole.  A corpus smaller than the target is reshuffled on the
    same PRNG stream and resampled, so repeats are possible.
    """
    if not corpus.sentences:
        raise CorpusError("cannot sample an empty corpus")
    if corpus.rune_count() == 0:
        raise CorpusError("unsampleable corpus: zero runes")
    rng = Xorshift64Star(cfg.seed)
    picked = []
    total = 0
    while total < cfg.target_base_chars:
        order = list(corpus.sentences)
        rng.shuffle(order)
        for sent in order:
            picked.append(sent)
            total += len(sent.runes)
            if total >= cfg.target_base_chars:
                break
    return Corpus(sentences=picked, language_label=corpus.language_label,
                  family_label=corpus.family_label, profile_name=corpus.profile_name,
                  profile=corpus.profile)


def write_plaintext(corpus: Corpus, path) -> None:
    """One sentence per line, decomposed normalization, trailing newline."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for s in corpus.sentences:
            f.write(normalize_decompose(s.raw_text))
            f.write("\n")
