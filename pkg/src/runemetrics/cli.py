"""Command-line front end.

Subcommands: profile, metrics, sample, strip, train, diacritize,
evaluate, correlate.  Output is TSV with a header line by default;
--format json switches to one JSON object per row (JSON lines).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .baseline import BaselineModel, diacritize, train
from .corpus_io import (
    Corpus,
    CorpusError,
    SamplingConfig,
    read_conllu,
    read_plaintext,
    sample,
    write_plaintext,
)
from .eval_stats import correlate_table, evaluate, read_table
from .metrics import metric_report, _rune_key
from .profiler import PROFILE_COLUMNS, profile as profile_corpus
from .script_core import get_profile, strip_text


def _read_corpus(path: str, profile, language: str, family: str) -> Corpus:
    if str(path).endswith(".conllu"):
        return read_conllu(path, profile, language=language, family=family)
    return read_plaintext(path, profile, language=language, family=family)


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def _emit_rows(rows, columns, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        for row in rows:
            print(json.dumps({c: row[c] for c in columns}, ensure_ascii=False), file=out)
    else:
        print("\t".join(columns), file=out)
        for row in rows:
            print("\t".join(_fmt(row[c]) for c in columns), file=out)


def _write_manifest(args, extra=None):
    if not getattr(args, "manifest", False):
        return
    doc = {
        "subcommand": args.command,
        "inputs": [str(p) for p in getattr(args, "inputs", []) or [getattr(args, "input", "")] if p],
        "profile": args.profile_name if hasattr(args, "profile_name") else None,
        "format": getattr(args, "format", None),
        "version": __version__,
    }
    if extra:
        doc.update(extra)
    target = getattr(args, "output", None)
    if target:
        Path(str(target) + ".manifest.json").write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
    else:
        print(json.dumps(doc), file=sys.stderr)


def _open_out(args):
    if getattr(args, "output", None):
        return open(args.output, "w", encoding="utf-8", newline="\n")
    return None


# -- subcommand bodies -----------------------------------------------------

def cmd_profile(args, profile) -> int:
    rows = []
    by_language = {}
    for path in args.inputs:
        corpus = _read_corpus(path, profile, args.language, args.family)
        row = profile_corpus(corpus).as_row(language=args.language or Path(path).stem,
                                            corpus=Path(path).stem)
        rows.append(row)
        by_language.setdefault(row["language"], []).append(row)
    # per-language average row when a language has several corpora
    numeric = [c for c in PROFILE_COLUMNS if c not in ("language", "corpus", "system")]
    for lang, group in by_language.items():
        if len(group) < 2:
            continue
        avg = {"language": lang, "corpus": "AVG",
               "system": "Multi" if any(g["system"] == "Multi" for g in group) else "Single"}
        for c in numeric:
            avg[c] = sum(g[c] for g in group) / len(group)
        rows.append(avg)
    out = _open_out(args)
    _emit_rows(rows, PROFILE_COLUMNS, args.format, out)
    if out:
        out.close()
    _write_manifest(args)
    return 0


METRIC_COLUMNS = ("language", "corpus", "density", "density_pct", "rs", "dts", "dss", "tokens")


def cmd_metrics(args, profile) -> int:
    rows = []
    breakdowns = []
    for path in args.inputs:
        corpus = _read_corpus(path, profile, args.language, args.family)
        rep = metric_report(corpus, per_rune=args.per_rune)
        row = {"language": args.language or Path(path).stem, "corpus": Path(path).stem,
               "density": rep.density, "density_pct": 100.0 * rep.density,
               "rs": rep.mean_rs, "dts": rep.mean_dts, "dss": rep.mean_dss,
               "tokens": rep.rune_token_count}
        rows.append(row)
        if args.per_rune:
            for rune, n, rs, dts, dss in rep.per_rune:
                breakdowns.append({"corpus": Path(path).stem, "rune": _rune_key(rune),
                                   "text": rune.text(), "count": n,
                                   "rs": rs, "dts": dts, "dss": dss})
    out = _open_out(args)
    _emit_rows(rows, METRIC_COLUMNS, args.format, out)
    if args.per_rune:
        _emit_rows(breakdowns, ("corpus", "rune", "text", "count", "rs", "dts", "dss"),
                   args.format, out)
    if out:
        out.close()
    _write_manifest(args)
    return 0


def cmd_sample(args, profile) -> int:
    corpus = _read_corpus(args.input, profile, args.language, args.family)
    cfg = SamplingConfig(target_base_chars=args.target_chars, seed=args.seed)
    sampled = sample(corpus, cfg)
    if args.output:
        write_plaintext(sampled, args.output)
    else:
        from .script_core import normalize_decompose
        for s in sampled.sentences:
            sys.stdout.write(normalize_decompose(s.raw_text) + "\n")
    _write_manifest(args, {"seed": args.seed, "target_chars": args.target_chars})
    return 0


def cmd_strip(args, profile) -> int:
    corpus = _read_corpus(args.input, profile, args.language, args.family)
    out = _open_out(args) or sys.stdout
    for s in corpus.sentences:
        out.write(strip_text(s.raw_text, profile) + "\n")
    if out is not sys.stdout:
        out.close()
    _write_manifest(args)
    return 0


def cmd_train(args, profile) -> int:
    corpus = _read_corpus(args.input, profile, args.language, args.family)
    model = train(corpus)
    model.save(args.output)
    _write_manifest(args)
    return 0


def cmd_diacritize(args, profile) -> int:
    model = BaselineModel.load(args.model)
    from .corpus_io import _decode_utf8
    text = _decode_utf8(args.input)
    restored = diacritize(model, text)
    if args.output:
        Path(args.output).write_text(restored, encoding="utf-8")
    else:
        sys.stdout.write(restored)
    _write_manifest(args)
    return 0


def cmd_evaluate(args, profile) -> int:
    gold = _read_corpus(args.gold, profile, args.language, args.family)
    hyp = _read_corpus(args.hyp, profile, args.language, args.family)
    rep = evaluate(gold, hyp)
    row = rep.as_dict()
    _emit_rows([row], ("word_acc", "rune_acc", "n_words", "n_runes"), args.format)
    _write_manifest(args)
    return 0


def cmd_correlate(args, profile) -> int:
    rows = read_table(args.table)
    rep = correlate_table(rows, args.x, args.y)
    _emit_rows([rep.as_dict()], ("r", "n", "t", "p", "stars", "dropped"), args.format)
    _write_manifest(args)
    return 0


# -- argument wiring -------------------------------------------------------

def _add_common(p, inputs="*"):
    p.add_argument("--profile", default="latin-generic", dest="profile_name",
                   help="builtin profile name or path to a profile JSON file")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--manifest", action="store_true",
                   help="emit a run manifest alongside the output")
    p.add_argument("--language", default="", help="language label for output rows")
    p.add_argument("--family", default="", help="language family label (opaque)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="runemetrics",
                                 description="Diacritic usage and complexity analytics")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="descriptive corpus statistics")
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output")
    _add_common(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("metrics", help="density and surprisal metrics")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--per-rune", action="store_true")
    p.add_argument("-o", "--output")
    _add_common(p)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("sample", help="seeded fixed-size sentence sampling")
    p.add_argument("input")
    p.add_argument("--target-chars", type=int, default=300_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("-o", "--output")
    _add_common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("strip", help="remove diacritics from a corpus")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    _add_common(p)
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("train", help="train the frequency baseline restorer")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("diacritize", help="restore diacritics with a trained model")
    p.add_argument("model")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    _add_common(p)
    p.set_defaults(func=cmd_diacritize)

    p = sub.add_parser("evaluate", help="word- and rune-level accuracy")
    p.add_argument("gold")
    p.add_argument("hyp")
    _add_common(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("correlate", help="Pearson r with significance over a TSV")
    p.add_argument("table")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_correlate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        profile = get_profile(args.profile_name)
    except (OSError, ValueError) as e:
        print(f"runemetrics: bad profile: {e}", file=sys.stderr)
        return 2
    try:
        return args.func(args, profile)
    except (FileNotFoundError, IsADirectoryError, PermissionError, CorpusError) as e:
        print(f"runemetrics: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"runemetrics: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
