import pytest
from hypothesis import given, settings, strategies as st

import oracles
from indicrel.errors import DataError
from indicrel.scripts import DEVANAGARI, LATIN, MALAYALAM
from indicrel.subword import (
    MARKER,
    MergeTable,
    bpe_apply,
    bpe_learn,
    desegment,
    learn_with_state,
    segment_corpus,
    syllabify_word,
)


@pytest.mark.parametrize(
    "word, script, expected",
    [
        ("spacious", LATIN, ["spa", "ciou", "s"]),
        ("a", LATIN, ["a"]),
        ("Childhood", LATIN, ["Chi", "ldhoo", "d"]),
        ("simplicity", LATIN, ["si", "mpli", "ci", "ty"]),
        ("अन्धापन", DEVANAGARI, ["अ", "न्धा", "प", "न"]),
        ("राम्", DEVANAGARI, ["रा", "म्"]),
        ("हिंदी", DEVANAGARI, ["हिं", "दी"]),
        ("क़लम", DEVANAGARI, ["क़", "ल", "म"]),
        ("आओ", DEVANAGARI, ["आ", "ओ"]),
        ("१२", DEVANAGARI, ["१", "२"]),
        ("മലയാളം", MALAYALAM, ["മ", "ല", "യാ", "ളം"]),
    ],
)
def test_syllabify(word, script, expected):
    assert syllabify_word(word, script) == expected


def test_syllabify_detects_script():
    assert syllabify_word("अन्धापन") == ["अ", "न्धा", "प", "न"]
    assert syllabify_word("spacious") == ["spa", "ciou", "s"]


def test_syllabify_empty():
    with pytest.raises(ValueError):
        syllabify_word("", LATIN)


any_word = st.text(
    alphabet=st.sampled_from(list("abcdeiouxyz.,7") + [chr(0x900 + o) for o in range(0x80)]),
    min_size=1, max_size=12,
)


@given(any_word, st.sampled_from([LATIN, DEVANAGARI, MALAYALAM]))
def test_syllables_concatenate_to_word(word, script):
    sylls = syllabify_word(word, script)
    assert "".join(sylls) == word
    assert all(sylls)


def test_latin_syllable_shape():
    import re

    for w in ["strengths", "queueing", "rhythm", "aeiou", "banana"]:
        sylls = syllabify_word(w, LATIN)
        for s in sylls[:-1]:
            assert re.fullmatch(r"[^aeiou]*[aeiou]+", s)
        assert re.fullmatch(r"[^aeiou]*[aeiou]*", sylls[-1])


# ---------------------------------------------------------------- BPE


def test_bpe_examples():
    assert bpe_learn(["ab ab ac"], 1).merges == [("a", "b")]
    assert bpe_learn(["ab ab ac"], 0).merges == []
    assert bpe_learn(["aa"], 3).merges == [("a", "a")]


def test_bpe_min_frequency():
    assert bpe_learn(["aa"], 3, min_frequency=2).merges == []


def test_bpe_tie_break_lexicographic():
    assert bpe_learn(["cd ab"], 1).merges == [("a", "b")]


def test_bpe_empty_corpus():
    with pytest.raises(DataError):
        bpe_learn([], 5)


corpus_st = st.lists(
    st.lists(st.text(alphabet="abcd", min_size=1, max_size=6), min_size=1, max_size=5).map(" ".join),
    min_size=1, max_size=6,
)


@settings(max_examples=80, deadline=None)
@given(corpus_st, st.integers(0, 10))
def test_bpe_matches_naive_simulator(corpus, k):
    table, state = learn_with_state(corpus, k)
    merges, naive_state = oracles.naive_bpe(corpus, k)
    assert table.merges == merges
    assert state == naive_state


@settings(max_examples=60, deadline=None)
@given(corpus_st, st.integers(0, 10))
def test_bpe_table_invariants(corpus, k):
    table, state = learn_with_state(corpus, k)
    assert len(set(table.merges)) == len(table.merges)
    symbols = {s for syms in state.values() for s in syms}
    assert len(symbols) <= len(table.alphabet) + table.num_merges
    for w, syms in state.items():
        assert bpe_apply(w, table) == syms
        for s in syms:
            assert " " not in s
    assert bpe_learn(corpus, k) == table


def test_bpe_apply_examples():
    t = MergeTable([("a", "b")], frozenset("ab"))
    assert bpe_apply("abc", t) == ["ab", "c"]
    assert bpe_apply("xyz", MergeTable([])) == ["x", "y", "z"]
    with pytest.raises(ValueError):
        bpe_apply("", t)


def test_merge_table_file_round_trip(tmp_path):
    t = bpe_learn(["low lower lowest newer wider"], 10)
    p = tmp_path / "codes"
    t.save(p)
    text = p.read_text(encoding="utf-8")
    assert text.splitlines()[0] == f"#bpe v1 merges={t.num_merges}"
    assert MergeTable.load(p).merges == t.merges


def test_merge_table_bad_file():
    with pytest.raises(DataError):
        MergeTable.loads("a b\n")
    with pytest.raises(DataError):
        MergeTable.loads("#bpe v1 merges=2\na b\n")


# ------------------------------------------------------- segmentation


def test_worked_segmentation_example():
    seg = segment_corpus(["Childhood means simplicity ."], "os", LATIN)[0]
    assert " ".join(seg) == "Chi ldhoo d _ mea ns _ si mpli ci ty _ ."
    assert desegment(seg) == "Childhood means simplicity ."


def test_single_word_has_no_marker():
    assert segment_corpus(["spacious"], "os", LATIN) == [["spa", "ciou", "s"]]


def test_char_unit():
    assert " ".join(segment_corpus(["ab cd"], "char")[0]) == "a b _ c d"


def test_bpe_unit():
    t = MergeTable([("a", "b")])
    assert segment_corpus(["abc ab"], "bpe", table=t) == [["ab", "c", "_", "ab"]]
    with pytest.raises(ValueError):
        segment_corpus(["abc"], "bpe")


def test_marker_in_input_rejected():
    with pytest.raises(DataError, match="line 2"):
        segment_corpus(["ok", "bad_word"], "char")


def test_desegment_examples():
    assert desegment(["x"]) == "x"
    assert desegment([]) == ""
    for bad in (["_", "a"], ["a", "_"], ["a", "_", "_", "b"]):
        with pytest.raises(DataError):
            desegment(bad)


sentence_st = st.lists(
    st.text(
        alphabet=st.sampled_from(list("abcdeiouxyzABC.,!7") + list("कखगअआािीुेो्ंക്കാ")),
        min_size=1, max_size=8,
    ),
    min_size=0, max_size=6,
).map(" ".join)


@settings(max_examples=100, deadline=None)
@given(st.lists(sentence_st, min_size=1, max_size=5), st.sampled_from(["os", "bpe", "char"]))
def test_round_trip(sentences, unit):
    table = bpe_learn(sentences, 20) if unit == "bpe" else None
    for s, seg in zip(sentences, segment_corpus(sentences, unit, None, table)):
        assert desegment(seg) == " ".join(s.split())
        assert all(MARKER not in t for t in seg if t != MARKER)
        for a, b in zip(seg, seg[1:]):
            assert not (a == MARKER and b == MARKER)
