import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from indicrel.errors import DataError
from indicrel.evaluation import bleu_corpus, oov_rate
from indicrel.subword import bpe_learn, desegment, segment_corpus


def test_identity():
    corpus = ["the cat sat on the mat", "a b c d e"]
    r = bleu_corpus(corpus, corpus)
    assert r.bleu == 1.0 and r.bp == 1.0


def test_clipping_example():
    r = bleu_corpus(["a a a"], ["a a"], max_n=2)
    assert r.precisions == pytest.approx([2 / 3, 1 / 2])
    assert r.bp == 1.0
    assert r.bleu == pytest.approx(math.sqrt(1 / 3))


def test_brevity_example():
    r = bleu_corpus(["the cat"], ["the cat sat on the mat"], max_n=2)
    assert r.precisions == [1.0, 1.0]
    assert r.bp == pytest.approx(math.exp(-2))
    assert r.bleu == pytest.approx(0.1353, abs=1e-4)


def test_zero_precision_gives_zero():
    r = bleu_corpus(["a b"], ["c d"])
    assert r.bleu == 0.0
    assert r.precisions[0] == 0.0


def test_smoothing_flag():
    r = bleu_corpus(["a b c"], ["a b d"], smooth=True)
    assert r.bleu > 0


def test_format():
    r = bleu_corpus(["a b c d"], ["a b c d"])
    assert r.format() == "BLEU = 1.0000 (1.0000/1.0000/1.0000/1.0000) BP=1.0000 ratio=1.0000"


def test_errors():
    with pytest.raises(DataError):
        bleu_corpus(["a"], ["a", "b"])
    with pytest.raises(DataError):
        bleu_corpus([], [])
    with pytest.raises(ValueError):
        bleu_corpus(["a"], ["a"], max_n=5)


sent = st.lists(st.sampled_from("abcd"), min_size=0, max_size=7).map(" ".join)


@settings(max_examples=100)
@given(st.lists(st.tuples(sent, sent), min_size=1, max_size=10), st.integers(1, 4))
def test_matches_brute_force(pairs, max_n):
    hyps, refs = zip(*pairs)
    r = bleu_corpus(hyps, refs, max_n)
    bleu, ps, bp = oracles.brute_bleu(hyps, refs, max_n)
    assert abs(r.bleu - bleu) <= 1e-9
    assert r.precisions == pytest.approx(ps, abs=1e-12)
    assert 0.0 <= r.bleu <= 1.0


def test_invariant_to_segmentation():
    rng = random.Random(0)
    words = ["childhood", "means", "simplicity", "cats", "sat", "mat"]
    hyps = [" ".join(rng.choice(words) for _ in range(6)) for _ in range(20)]
    refs = [" ".join(rng.choice(words) for _ in range(6)) for _ in range(20)]
    table = bpe_learn(hyps, 30)
    for unit in ("os", "bpe", "char"):
        seg = segment_corpus(hyps, unit, table=table)
        assert bleu_corpus([desegment(s) for s in seg], refs) == bleu_corpus(hyps, refs)


def test_oov_rate():
    assert oov_rate(["a b", "c a"], {"a"}) == 0.5
    assert oov_rate(["a b"], {"a", "b", "c"}) == 0.0
    assert oov_rate(["a b"], {"x"}) == 1.0
    with pytest.raises(DataError):
        oov_rate([], {"a"})


@given(st.lists(sent, min_size=1, max_size=6))
def test_self_bleu_is_one(corpus):
    r = bleu_corpus(corpus, corpus)
    expected = 1.0 if any(s.split() for s in corpus) else 0.0
    assert r.bleu == pytest.approx(expected)


def test_short_corpus_effective_order():
    r = bleu_corpus(["the cat sat"], ["the cat sat"])
    assert r.bleu == 1.0
    assert r.precisions[3] == 0.0
