import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from indicrel.errors import DataError
from indicrel.scripts import BENGALI, DEVANAGARI
from indicrel.translit import (
    TransliterationModel,
    mine_candidate_pairs,
    read_pairs,
    train_translit,
    transliterate_statistical,
    write_pairs,
)
from indicrel.translit.channel import _initial_params, expected_counts


def cipher(alphabet, seed):
    rng = random.Random(seed)
    image = list(alphabet)
    rng.shuffle(image)
    return dict(zip(alphabet, image))


def random_words(rng, alphabet, count, lo=2, hi=6):
    words = []
    seen = set()
    while len(words) < count:
        w = "".join(rng.choice(alphabet) for _ in range(rng.randint(lo, hi)))
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words


# --------------------------------------------------------------------------
# EM against enumeration of alignment paths
# --------------------------------------------------------------------------

pair_st = st.tuples(
    st.text(alphabet="abc", min_size=1, max_size=4),
    st.text(alphabet="xyz", min_size=1, max_size=4),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(pair_st, min_size=1, max_size=4), st.integers(0, 100))
def test_expected_counts_match_enumeration(pairs, seed):
    params = _initial_params(pairs, random.Random(seed))
    for src, tgt in pairs:
        exp = expected_counts(params, src, tgt)
        esub, eins, loglik = oracles.brute_expected_counts(params.sub, params.ins, src, tgt)
        assert exp.loglik == pytest.approx(loglik, rel=1e-9)
        got_sub = {(c, t): v for c, row in exp.sub.items() for t, v in row.items()}
        assert set(k for k, v in got_sub.items() if v > 1e-15) == set(k for k, v in esub.items() if v > 1e-15)
        for k, v in esub.items():
            assert got_sub.get(k, 0.0) == pytest.approx(v, rel=1e-9, abs=1e-15)
        for y, v in eins.items():
            assert exp.ins.get(y, 0.0) == pytest.approx(v, rel=1e-9, abs=1e-15)


def test_single_pair_one_iteration():
    m = train_translit([("ab", "xy")], em_iters=1)
    cands = [m.sub_weights.get("a", {}).get("x"), m.sub_weights.get("a", {}).get("xy"),
             m.sub_weights.get("b", {}).get("y"), m.sub_weights.get("b", {}).get("xy")]
    assert any(lp is not None and math.exp(lp) > 0 for lp in cands)


def test_sub_weights_normalized():
    rng = random.Random(3)
    words = random_words(rng, "abcdef", 40)
    m = train_translit([(w, w.upper()) for w in words], em_iters=3)
    for c, row in m.sub_weights.items():
        assert math.fsum(math.exp(v) for v in row.values()) == pytest.approx(1.0, abs=1e-6)
    assert m.lm.order >= 2


def test_cipher_table_recovered():
    alphabet = "abcdefgh"
    f = cipher(alphabet, 7)
    rng = random.Random(11)
    words = random_words(rng, alphabet, 50, 2, 5)
    m = train_translit([(w, "".join(f[c] for c in w)) for w in words], n=2, em_iters=10, seed=1)
    for c in alphabet:
        row = m.sub_weights[c]
        assert max(row, key=row.get) == f[c]


def test_identity_corpus_top1():
    rng = random.Random(5)
    words = random_words(rng, "कखगचजटडतदनपबमयरलवस", 50, 2, 6)
    m = train_translit([(w, w) for w in words], n=2, em_iters=5)
    for w in words:
        assert transliterate_statistical(m, w)[0][0] == w


def test_training_is_deterministic():
    pairs = [("abc", "xyz"), ("ba", "yx"), ("cab", "zxy")]
    a = train_translit(pairs, seed=4).to_json()
    b = train_translit(pairs, seed=4).to_json()
    assert a == b


@pytest.mark.parametrize("pairs", [[], [("a", "")], [("a", "b"), ("", "c")]])
def test_bad_pairs_rejected(pairs):
    with pytest.raises(DataError):
        train_translit(pairs)


def test_bad_pair_error_names_index():
    with pytest.raises(DataError, match="pair 1"):
        train_translit([("a", "b"), ("", "c")])


# --------------------------------------------------------------------------
# decoding
# --------------------------------------------------------------------------


@pytest.fixture(scope="module")
def small_cipher_model():
    alphabet = "abcd"
    f = cipher(alphabet, 2)
    rng = random.Random(9)
    words = random_words(rng, alphabet, 30, 2, 5)
    m = train_translit([(w, "".join(f[c] for c in w)) for w in words], n=2, em_iters=10)
    return m, f


def test_decode_matches_exhaustive(small_cipher_model):
    m, f = small_cipher_model
    assert not m.ins_weights
    rng = random.Random(21)
    target_alpha = sorted(set(f.values()))
    for w in random_words(rng, "abcd", 6, 2, 3):
        best, score = oracles.brute_decode(m, w, target_alpha)
        got, got_score = transliterate_statistical(m, w, beam=8, k=1)[0]
        assert got == best == "".join(f[c] for c in w)
        assert got_score == pytest.approx(score)


def test_scores_non_increasing(small_cipher_model):
    m, _ = small_cipher_model
    res = transliterate_statistical(m, "abca", beam=8, k=5)
    scores = [s for _, s in res]
    assert scores == sorted(scores, reverse=True)
    assert len({c for c, _ in res}) == len(res)


def test_unseen_character_passes_through(small_cipher_model):
    m, _ = small_cipher_model
    top = transliterate_statistical(m, "aQb")[0][0]
    assert "Q" in top


def test_decode_argument_errors(small_cipher_model):
    m, _ = small_cipher_model
    with pytest.raises(ValueError):
        transliterate_statistical(m, "")
    with pytest.raises(ValueError):
        transliterate_statistical(m, "a", beam=0)


def test_model_json_round_trip(tmp_path, small_cipher_model):
    m, _ = small_cipher_model
    path = tmp_path / "m.json"
    m.save(path)
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert set(doc) >= {"version", "src_lang", "tgt_lang", "n", "sub_weights", "ins_weights", "lm"}
    assert set(doc["lm"]) >= {"order", "ngrams"}
    again = TransliterationModel.load(path)
    assert again.to_json() == m.to_json()
    assert transliterate_statistical(again, "abc") == transliterate_statistical(m, "abc")


def test_model_version_checked():
    with pytest.raises(DataError):
        TransliterationModel.from_json({"version": 99})


def test_insertions_are_learned():
    # every target word carries an extra 'h' after the first character
    rng = random.Random(1)
    words = random_words(rng, "ptkbd", 40, 2, 4)
    pairs = [(w, w[0] + "h" + w[1:]) for w in words]
    m = train_translit(pairs, n=3, em_iters=10)
    hits = sum(transliterate_statistical(m, w)[0][0] == t for w, t in pairs)
    assert hits >= 0.9 * len(pairs)


# --------------------------------------------------------------------------
# mining
# --------------------------------------------------------------------------


def test_mine_example():
    pairs = mine_candidate_pairs(["दस आदमी"], ["দশ মানুষ"], DEVANAGARI, BENGALI, 0.5)
    assert ("दस", "দশ") in pairs
    assert ("दस", "মানুষ") not in pairs


def test_mine_identical_threshold_one():
    corpus = ["a b c", "b d"]
    from indicrel.scripts import LATIN

    pairs = mine_candidate_pairs(corpus, corpus, LATIN, LATIN, 1.0)
    assert pairs == [("a", "a"), ("b", "b"), ("c", "c"), ("d", "d")]


def test_mine_errors():
    with pytest.raises(DataError, match="1.*2|source=1 target=2"):
        mine_candidate_pairs(["a"], ["a", "b"], DEVANAGARI, DEVANAGARI, 0.5)
    with pytest.raises(ValueError):
        mine_candidate_pairs(["a"], ["a"], DEVANAGARI, DEVANAGARI, 0.0)


def test_pair_file_round_trip():
    pairs = [("दस", "দশ"), ("a", "b")]
    assert read_pairs(write_pairs(pairs).splitlines()) == pairs
    with pytest.raises(DataError, match="line 1"):
        read_pairs(["onlyone"])
