"""Frequency tables and the four corpus complexity measures.

Per-rune measures (all in nats, natural log):

* rune surprisal        -ln( #(r) / #(c) )            with c = base of r
* diacritic token surp.  sum over marks d of r of -ln( #(d,c) / #(c) )
* diacritic struct. surp. sum over marks d of -ln( |T_d(c)| / |T(c)| )
* density               total marks / total base letters

Note on the token-surprisal denominator: normalizing each mark's count by
#(c), the total occurrences of the base letter (marked or not), is what
reproduces the published worked-example values; normalizing by the marks
on c alone does not.  Corpus means are token-weighted over ALL rune
tokens, unmarked ones included.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field

from .corpus_io import Corpus
from .script_core import Rune

__all__ = [
    "FrequencyTables",
    "MetricReport",
    "build_tables",
    "merge_tables",
    "rune_surprisal",
    "diacritic_token_surprisal",
    "diacritic_structural_surprisal",
    "density",
    "metric_report",
]


@dataclass
class FrequencyTables:
    """Token and type counts accumulated over a corpus.

    Absent keys mean zero.  Tables merge associatively, so they can be
    built over partitions in any order.
    """

    rune_count: Counter = field(default_factory=Counter)          # rune -> #(r)
    mark_char_count: Counter = field(default_factory=Counter)     # (mark, base) -> #(d,c)
    base_count: Counter = field(default_factory=Counter)          # base -> #(c)
    rune_types: dict = field(default_factory=dict)                # base -> set of runes T(c)
    mark_types: dict = field(default_factory=dict)                # (mark, base) -> set of runes T_d(c)
    total_marks: int = 0
    total_bases: int = 0

    def add_rune(self, r: Rune) -> None:
        self.rune_count[r] += 1
        self.base_count[r.base] += 1
        self.total_bases += 1
        self.rune_types.setdefault(r.base, set()).add(r)
        for d in r.marks:
            self.mark_char_count[(d, r.base)] += 1
            self.total_marks += 1
            self.mark_types.setdefault((d, r.base), set()).add(r)

    def update(self, runes) -> None:
        for r in runes:
            self.add_rune(r)

    def merge(self, other: "FrequencyTables") -> "FrequencyTables":
        out = FrequencyTables()
        for t in (self, other):
            out.rune_count.update(t.rune_count)
            out.mark_char_count.update(t.mark_char_count)
            out.base_count.update(t.base_count)
            for c, s in t.rune_types.items():
                out.rune_types.setdefault(c, set()).update(s)
            for k, s in t.mark_types.items():
                out.mark_types.setdefault(k, set()).update(s)
            out.total_marks += t.total_marks
            out.total_bases += t.total_bases
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrequencyTables):
            return NotImplemented
        return (
            self.rune_count == other.rune_count
            and self.mark_char_count == other.mark_char_count
            and self.base_count == other.base_count
            and self.rune_types == other.rune_types
            and self.mark_types == other.mark_types
            and self.total_marks == other.total_marks
            and self.total_bases == other.total_bases
        )

    # -- JSON cache form ---------------------------------------------------

    def to_json(self) -> dict:
        """Serializable form with "U+XXXX[+U+YYYY...]" keys."""
        return {
            "rune_count": {_rune_key(r): n for r, n in sorted(self.rune_count.items(), key=lambda kv: _rune_key(kv[0]))},
            "mark_char_count": {f"{_cp(d)}@{_cp(c)}": n for (d, c), n in sorted(self.mark_char_count.items())},
            "total_marks": self.total_marks,
            "total_bases": self.total_bases,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FrequencyTables":
        t = cls()
        for key, n in doc["rune_count"].items():
            r = _rune_from_key(key)
            t.rune_count[r] = n
            t.base_count[r.base] += n
            t.total_bases += n
            t.rune_types.setdefault(r.base, set()).add(r)
            for d in r.marks:
                t.mark_types.setdefault((d, r.base), set()).add(r)
        for key, n in doc["mark_char_count"].items():
            d, c = key.split("@")
            t.mark_char_count[(_cp_from(d), _cp_from(c))] = n
        t.total_marks = doc["total_marks"]
        if t.total_bases != doc["total_bases"]:
            raise ValueError("inconsistent frequency-table document")
        return t

    def dump(self, path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_json(), f, indent=1, sort_keys=True)

    @classmethod
    def load(cls, path) -> "FrequencyTables":
        with open(path, encoding="utf-8") as f:
            return cls.from_json(json.load(f))


def _cp(ch: str) -> str:
    return f"U+{ord(ch):04X}"


def _cp_from(tok: str) -> str:
    return chr(int(tok[2:], 16))


def _rune_key(r: Rune) -> str:
    return "+".join([_cp(r.base)] + [_cp(m) for m in r.marks])


def _rune_from_key(key: str) -> Rune:
    parts = key.split("+")
    # parts like ["U", "0061", "U", "0301"] after splitting on "+"
    cps = [chr(int(p, 16)) for p in parts if p != "U"]
    return Rune(cps[0], tuple(cps[1:]))


def build_tables(corpus: Corpus) -> FrequencyTables:
    t = FrequencyTables()
    t.update(corpus.iter_runes())
    return t


def merge_tables(tables) -> FrequencyTables:
    out = FrequencyTables()
    for t in tables:
        out = out.merge(t)
    return out


def rune_surprisal(r: Rune, t: FrequencyTables) -> float:
    n = t.rune_count.get(r, 0)
    if n < 1:
        raise ValueError(f"unseen rune: {_rune_key(r)}")
    return -math.log(n / t.base_count[r.base])


def diacritic_token_surprisal(r: Rune, t: FrequencyTables) -> float:
    total = 0.0
    for d in r.marks:
        n = t.mark_char_count.get((d, r.base), 0)
        if n < 1:
            raise ValueError(f"unseen mark/base pair: {_cp(d)} on {_cp(r.base)}")
        total += -math.log(n / t.base_count[r.base])
    return total


def diacritic_structural_surprisal(r: Rune, t: FrequencyTables) -> float:
    types = t.rune_types.get(r.base)
    if not types:
        raise ValueError(f"unseen base: {_cp(r.base)}")
    total = 0.0
    for d in r.marks:
        total += -math.log(len(t.mark_types[(d, r.base)]) / len(types))
    return total


def density(t: FrequencyTables) -> float:
    if t.total_bases == 0:
        raise ValueError("empty corpus")
    return t.total_marks / t.total_bases


@dataclass
class MetricReport:
    density: float
    mean_rs: float
    mean_dts: float
    mean_dss: float
    rune_token_count: int
    per_rune: list | None = None  # rows of (rune, count, rs, dts, dss)

    def as_dict(self) -> dict:
        return {
            "density": self.density,
            "rs": self.mean_rs,
            "dts": self.mean_dts,
            "dss": self.mean_dss,
            "tokens": self.rune_token_count,
        }


def metric_report(corpus: Corpus, per_rune: bool = False) -> MetricReport:
    """Density plus token-weighted mean RS/DTS/DSS over all rune tokens."""
    t = build_tables(corpus)
    if t.total_bases == 0:
        raise ValueError("empty corpus")
    rows = []
    rs_terms, dts_terms, dss_terms = [], [], []
    for r, n in t.rune_count.items():
        rs = rune_surprisal(r, t)
        dts = diacritic_token_surprisal(r, t)
        dss = diacritic_structural_surprisal(r, t)
        rs_terms.append(n * rs)
        dts_terms.append(n * dts)
        dss_terms.append(n * dss)
        if per_rune:
            rows.append((r, n, rs, dts, dss))
    n_tok = t.total_bases
    if per_rune:
        rows.sort(key=lambda row: (-row[1], _rune_key(row[0])))
    return MetricReport(
        density=density(t),
        mean_rs=math.fsum(rs_terms) / n_tok,
        mean_dts=math.fsum(dts_terms) / n_tok,
        mean_dss=math.fsum(dss_terms) / n_tok,
        rune_token_count=n_tok,
        per_rune=rows if per_rune else None,
    )
