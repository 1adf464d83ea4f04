"""Restoration accuracy and Pearson correlation with significance.

Accuracy is case-folded and compares canonical mark sets, so encoding
variants of the same diacritized letter count as equal.  The p-value for
Pearson's r comes from the Student-t tail via the regularized incomplete
beta function, evaluated by continued fraction (relative tolerance 1e-12,
at most 300 iterations) so independent ports agree digit for digit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus_io import Corpus
from .profiler import iter_words

__all__ = [
    "EvalReport",
    "CorrelationReport",
    "evaluate",
    "pearson",
    "correlate_table",
    "read_table",
    "regularized_incomplete_beta",
    "student_t_two_tailed",
]


@dataclass
class EvalReport:
    word_accuracy: float   # percent
    rune_accuracy: float   # percent
    n_words: int
    n_runes: int

    def as_dict(self) -> dict:
        return {
            "word_acc": self.word_accuracy,
            "rune_acc": self.rune_accuracy,
            "n_words": self.n_words,
            "n_runes": self.n_runes,
        }


def evaluate(gold: Corpus, hyp: Corpus) -> EvalReport:
    """Score a hypothesis corpus against gold, line-aligned.

    The hypothesis must not alter base text: after stripping and case
    folding the two sides have to be letter-identical per line.
    """
    if len(gold.sentences) != len(hyp.sentences):
        raise ValueError(
            f"line count mismatch: gold has {len(gold.sentences)}, hypothesis {len(hyp.sentences)}"
        )
    n_runes = rune_hits = 0
    n_words = word_hits = 0
    for i, (g, h) in enumerate(zip(gold.sentences, hyp.sentences)):
        if len(g.runes) != len(h.runes):
            raise ValueError(f"line {i + 1}: rune count differs ({len(g.runes)} vs {len(h.runes)})")
        for pos, (gr, hr) in enumerate(zip(g.runes, h.runes)):
            if gr.base != hr.base:
                raise ValueError(
                    f"line {i + 1}, rune {pos + 1}: base letter differs "
                    f"({gr.base!r} vs {hr.base!r}); hypothesis altered base text"
                )
            n_runes += 1
            if gr == hr:
                rune_hits += 1
        g_words = list(iter_words(g, gold.profile))
        h_words = list(iter_words(h, hyp.profile))
        if len(g_words) != len(h_words):
            raise ValueError(f"line {i + 1}: word tokenization differs")
        for gw, hw in zip(g_words, h_words):
            n_words += 1
            if gw == hw:
                word_hits += 1
    return EvalReport(
        word_accuracy=100.0 * word_hits / n_words if n_words else 0.0,
        rune_accuracy=100.0 * rune_hits / n_runes if n_runes else 0.0,
        n_words=n_words,
        n_runes=n_runes,
    )


# -- significance machinery -----------------------------------------------

_BETA_EPS = 1e-12
_BETA_ITMAX = 300


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_ITMAX + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise ValueError(f"incomplete beta did not converge (a={a}, b={b}, x={x})")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and 0 <= x <= 1."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x out of range: {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_bt = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    bt = math.exp(ln_bt)
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def student_t_two_tailed(t: float, dof: float) -> float:
    """P(|T| >= |t|) for Student's t with the given degrees of freedom."""
    if dof <= 0:
        raise ValueError("degrees of freedom must be positive")
    if t == 0.0:
        return 1.0
    x = dof / (dof + t * t)
    return regularized_incomplete_beta(dof / 2.0, 0.5, x)


@dataclass
class CorrelationReport:
    r: float
    n: int
    t_stat: float
    p_two_tailed: float
    stars: str
    dropped: int = 0   # rows discarded for missing values

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "t": self.t_stat,
            "p": self.p_two_tailed,
            "stars": self.stars,
            "dropped": self.dropped,
        }


def _stars(p: float) -> str:
    if p < 0.001:
        return "***"
    if p < 0.01:
        return "**"
    if p < 0.05:
        return "*"
    return ""


def pearson(xs, ys) -> CorrelationReport:
    xs = [float(v) for v in xs]
    ys = [float(v) for v in ys]
    n = len(xs)
    if len(ys) != n:
        raise ValueError("series length mismatch")
    if n < 3:
        raise ValueError(f"need at least 3 points, got {n}")
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    syy = math.fsum((y - my) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("zero variance")
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    r = sxy / math.sqrt(sxx * syy)
    r = max(-1.0, min(1.0, r))
    if abs(r) == 1.0:
        return CorrelationReport(r=r, n=n, t_stat=math.inf, p_two_tailed=0.0, stars="***")
    t = r * math.sqrt((n - 2) / (1.0 - r * r))
    p = student_t_two_tailed(t, n - 2)
    return CorrelationReport(r=r, n=n, t_stat=t, p_two_tailed=p, stars=_stars(p))


_MISSING = (None, "", "--")


def read_table(path) -> list[dict]:
    """Read a header-first TSV; "--" and empty cells become None."""
    rows = []
    with open(path, encoding="utf-8") as f:
        header = None
        for line in f:
            line = line.rstrip("\n")
            if not line.strip():
                continue
            cells = line.split("\t")
            if header is None:
                header = cells
                continue
            row = {}
            for name, cell in zip(header, cells):
                cell = cell.strip()
                row[name] = None if cell in _MISSING else cell
            rows.append(row)
    return rows


def correlate_table(rows, x: str, y: str) -> CorrelationReport:
    """Pearson over two named columns, dropping rows with missing values."""
    xs, ys = [], []
    dropped = 0
    for row in rows:
        if x not in row or y not in row:
            raise ValueError(f"row missing column {x!r} or {y!r}")
        xv, yv = row[x], row[y]
        if xv in _MISSING or yv in _MISSING:
            dropped += 1
            continue
        xs.append(float(xv))
        ys.append(float(yv))
    if len(xs) < 3:
        raise ValueError(f"fewer than 3 usable rows for {x!r} vs {y!r} ({len(xs)} after dropping {dropped})")
    report = pearson(xs, ys)
    report.dropped = dropped
    return report
