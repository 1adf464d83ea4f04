import random

import pytest

from conftest import LATIN, SPANISH
from runemetrics import (
    BaselineModel,
    Corpus,
    diacritize,
    evaluate,
    normalize_decompose,
    strip_text,
    train,
)


def corpus_of(*lines):
    return Corpus.from_lines(list(lines), LATIN)


def test_modal_word_restoration():
    model = train(corpus_of("niño niño nino"))
    assert model.word_map["nino"] == normalize_decompose("niño")


def test_char_fallback_consistent_marks():
    # every base always carries the same mark, so the per-letter fallback
    # restores an unseen word exactly
    model = train(corpus_of("ábá cécé"))
    assert diacritize(model, "aceb") == normalize_decompose("ácéb")
    assert diacritize(model, "aba") == normalize_decompose("ábá")


def test_tie_breaks_to_smallest_codepoint_sequence():
    model = train(corpus_of("ab áb"))
    assert model.word_map["ab"] == "ab"


def test_train_deterministic():
    lines = ["niño bebé café", "mañana sólo aquí"]
    a, b = train(corpus_of(*lines)), train(corpus_of(*lines))
    assert a.word_map == b.word_map
    assert a.char_map == b.char_map
    assert a.meta == b.meta


def test_round_trip_never_alters_bases():
    rng = random.Random(3)
    model = train(corpus_of(SPANISH))
    for _ in range(20):
        word = "".join(rng.choice("nieocafablm") for _ in range(rng.randint(1, 12)))
        out = diacritize(model, word)
        assert strip_text(out, LATIN).lower() == word


def test_perfect_restoration_on_unambiguous_corpus():
    gold_lines = ["el niño bebió café", "la mañana es clara"]
    gold = corpus_of(*gold_lines)
    model = train(gold)
    stripped = "\n".join(strip_text(l, LATIN) for l in gold_lines)
    restored = diacritize(model, stripped)
    hyp = Corpus.from_lines(restored.split("\n"), LATIN)
    rep = evaluate(gold, hyp)
    assert rep.word_accuracy == 100.0
    assert rep.rune_accuracy == 100.0


def test_unseen_script_passes_through():
    model = train(corpus_of("solo latino aquí"))
    line = "Ψυχή 123 …"
    assert diacritize(model, line) == normalize_decompose(line)


def test_case_preserved_on_restoration():
    model = train(corpus_of("méxico méxico"))
    out = diacritize(model, "Mexico")
    assert out == normalize_decompose("México")


def test_empty_input():
    model = train(corpus_of("abc"))
    assert diacritize(model, "") == ""


def test_punctuation_preserved():
    model = train(corpus_of("café"))
    out = diacritize(model, '"cafe," dijo.')
    assert out.startswith('"' + normalize_decompose("café") + ',"')
    assert out.endswith(".")


def test_model_save_load_round_trip(tmp_path):
    model = train(corpus_of("niño café", "mañana"))
    p = tmp_path / "model.json"
    model.save(p)
    loaded = BaselineModel.load(p)
    assert loaded.word_map == model.word_map
    assert loaded.char_map == model.char_map
    assert loaded.meta == model.meta
    assert diacritize(loaded, "nino cafe manana") == diacritize(model, "nino cafe manana")
    # keys must be codepoint-escaped on disk
    raw = p.read_bytes()
    assert max(raw) < 128


def test_model_format_version_checked(tmp_path):
    p = tmp_path / "model.json"
    p.write_text('{"format_version": 99, "meta": {}, "word_map": {}, "char_map": {}}')
    with pytest.raises(ValueError, match="format_version"):
        BaselineModel.load(p)


def test_word_map_invariant():
    model = train(corpus_of(SPANISH))
    for key, value in model.word_map.items():
        assert strip_text(value, LATIN) == key


def test_char_map_invariant():
    model = train(corpus_of(SPANISH))
    for base, rune_text in model.char_map.items():
        assert rune_text[0] == base
