"""Subword segmentation: orthographic syllables, BPE units and characters.

Segmented sentences keep word boundaries as a standalone ``_`` token placed
between words, e.g. ``Chi ldhoo d _ mea ns _ si mpli ci ty _ .``
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from indicrel.errors import DataError
from indicrel.scripts import CharClass, ScriptSpec, classify_char, detect_script

MARKER = "_"
UNITS = ("os", "bpe", "char")
DEFAULT_NUM_MERGES = 1000

SubwordSentence = list[str]


# --------------------------------------------------------------------------
# orthographic syllables
# --------------------------------------------------------------------------

_STANDALONE = (CharClass.DIGIT, CharClass.PUNCTUATION, CharClass.OTHER)


def _syllabify_alphabet(word: str, script: ScriptSpec) -> list[str]:
    out: list[str] = []
    buf = ""
    has_vowel = False
    for ch in word:
        cls = classify_char(ch, script)
        if cls == CharClass.CONSONANT:
            if has_vowel:
                out.append(buf)
                buf, has_vowel = "", False
            buf += ch
        elif cls == CharClass.INDEPENDENT_VOWEL:
            buf += ch
            has_vowel = True
        else:
            if buf:
                out.append(buf)
            out.append(ch)
            buf, has_vowel = "", False
    if buf:
        out.append(buf)
    return out


def _syllabify_abugida(word: str, script: ScriptSpec) -> list[str]:
    # Boundaries are placed lazily: a consonant or vowel starts a new
    # syllable unless the open one ends in a virama.
    out: list[str] = []
    buf = ""
    last: CharClass | None = None
    for ch in word:
        cls = classify_char(ch, script)
        if cls in _STANDALONE:
            if buf:
                out.append(buf)
            out.append(ch)
            buf, last = "", None
            continue
        if cls == CharClass.CONSONANT:
            if buf and last != CharClass.VIRAMA:
                out.append(buf)
                buf = ""
        elif cls == CharClass.INDEPENDENT_VOWEL:
            if buf:
                out.append(buf)
                buf = ""
        buf += ch
        last = cls
    if buf:
        out.append(buf)
    return out


def syllabify_word(word: str, script: ScriptSpec | None = None) -> list[str]:
    """Split a word into orthographic syllables (consonants followed by a vowel).

    Trailing consonants without a vowel form a final syllable of their own;
    digits, punctuation and foreign characters are single-character units.
    If ``script`` is None it is guessed from the word.
    """
    if not word:
        raise ValueError("syllabify_word: empty word")
    if script is None:
        script = detect_script(word)
    if script.is_brahmi:
        return _syllabify_abugida(word, script)
    return _syllabify_alphabet(word, script)


# --------------------------------------------------------------------------
# BPE
# --------------------------------------------------------------------------


@dataclass
class MergeTable:
    merges: list[tuple[str, str]]
    alphabet: frozenset[str] = frozenset()
    source_langs: list[str] = field(default_factory=list)
    _cache: dict[str, tuple[str, ...]] = field(
        default_factory=dict, repr=False, compare=False
    )

    @property
    def num_merges(self) -> int:
        return len(self.merges)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    def dumps(self) -> str:
        lines = [f"#bpe v1 merges={self.num_merges}"]
        lines += [f"{a} {b}" for a, b in self.merges]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "MergeTable":
        lines = text.splitlines()
        if not lines or not lines[0].startswith("#bpe v1"):
            raise DataError("not a BPE merge table (missing '#bpe v1' header)")
        header = dict(kv.split("=", 1) for kv in lines[0].split()[2:] if "=" in kv)
        merges = []
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split(" ")
            if len(parts) != 2 or not all(parts):
                raise DataError(f"malformed merge on line {lineno}: {line!r}")
            merges.append((parts[0], parts[1]))
        if "merges" in header and int(header["merges"]) != len(merges):
            raise DataError(
                f"header declares {header['merges']} merges, file has {len(merges)}"
            )
        alphabet = set()
        for a, b in merges:
            alphabet.update(a)
            alphabet.update(b)
        return cls(merges, frozenset(alphabet))

    @classmethod
    def load(cls, path: str | Path) -> "MergeTable":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


def _word_counts(corpus: Iterable[str]) -> Counter[str]:
    counts: Counter[str] = Counter()
    for line in corpus:
        counts.update(line.split())
    return counts


def _pairs(symbols: Sequence[str]) -> Iterable[tuple[str, str]]:
    return zip(symbols, symbols[1:])


def merge_symbols(symbols: Sequence[str], pair: tuple[str, str]) -> list[str]:
    """Replace non-overlapping occurrences of ``pair``, scanning left to right."""
    a, b = pair
    out = []
    i = 0
    while i < len(symbols):
        if i + 1 < len(symbols) and symbols[i] == a and symbols[i + 1] == b:
            out.append(a + b)
            i += 2
        else:
            out.append(symbols[i])
            i += 1
    return out


def learn_with_state(
    corpus: Sequence[str],
    num_merges: int = DEFAULT_NUM_MERGES,
    min_frequency: int = 1,
    source_langs: Sequence[str] = (),
) -> tuple[MergeTable, dict[str, list[str]]]:
    """Learn BPE merges; also return each training word's final symbol sequence."""
    if not corpus:
        raise DataError("bpe_learn: empty corpus")
    if num_merges < 0:
        raise ValueError("num_merges must be >= 0")
    freqs = _word_counts(corpus)
    words = list(freqs)
    state = [list(w) for w in words]
    alphabet = frozenset(ch for w in words for ch in w)

    stats: Counter[tuple[str, str]] = Counter()
    where: dict[tuple[str, str], set[int]] = defaultdict(set)
    for idx, syms in enumerate(state):
        f = freqs[words[idx]]
        for p in _pairs(syms):
            stats[p] += f
            where[p].add(idx)

    merges: list[tuple[str, str]] = []
    while len(merges) < num_merges and stats:
        best = min(stats, key=lambda p: (-stats[p], p))
        if stats[best] < min_frequency:
            break
        merges.append(best)
        for idx in sorted(where.pop(best, ())):
            f = freqs[words[idx]]
            old = state[idx]
            for p in _pairs(old):
                stats[p] -= f
                if stats[p] <= 0:
                    del stats[p]
            new = merge_symbols(old, best)
            state[idx] = new
            for p in _pairs(new):
                stats[p] += f
                where[p].add(idx)
        stats.pop(best, None)

    table = MergeTable(merges, alphabet, list(source_langs))
    return table, {w: state[i] for i, w in enumerate(words)}


def bpe_learn(
    corpus: Sequence[str],
    num_merges: int = DEFAULT_NUM_MERGES,
    min_frequency: int = 1,
    source_langs: Sequence[str] = (),
) -> MergeTable:
    """Learn a BPE merge table from whitespace-tokenized sentences.

    The most frequent adjacent symbol pair (weighted by word frequency) is
    merged each round; ties go to the lexicographically smallest pair.
    Learning stops after ``num_merges`` merges or when the best pair occurs
    fewer than ``min_frequency`` times.
    """
    return learn_with_state(corpus, num_merges, min_frequency, source_langs)[0]


def bpe_apply(word: str, table: MergeTable) -> list[str]:
    if not word:
        raise ValueError("bpe_apply: empty word")
    cached = table._cache.get(word)
    if cached is not None:
        return list(cached)
    symbols = list(word)
    present = set(symbols)
    for a, b in table.merges:
        if a in present and b in present:
            merged = merge_symbols(symbols, (a, b))
            if len(merged) != len(symbols):
                symbols = merged
                present = set(symbols)
    table._cache[word] = tuple(symbols)
    return symbols


# --------------------------------------------------------------------------
# corpus segmentation
# --------------------------------------------------------------------------


def segment_word(
    word: str,
    unit: str,
    script: ScriptSpec | None = None,
    table: MergeTable | None = None,
) -> list[str]:
    if unit == "os":
        return syllabify_word(word, script)
    if unit == "bpe":
        if table is None:
            raise ValueError("bpe segmentation needs a merge table")
        return bpe_apply(word, table)
    if unit == "char":
        return list(word)
    raise ValueError(f"unknown unit {unit!r}; expected one of {UNITS}")


def segment_sentence(
    sentence: str,
    unit: str,
    script: ScriptSpec | None = None,
    table: MergeTable | None = None,
    lineno: int = 1,
) -> SubwordSentence:
    tokens: SubwordSentence = []
    for word in sentence.split():
        if MARKER in word:
            raise DataError(f"line {lineno}: word {word!r} contains the boundary marker {MARKER!r}")
        if tokens:
            tokens.append(MARKER)
        tokens.extend(segment_word(word, unit, script, table))
    return tokens


def segment_corpus(
    corpus: Sequence[str],
    unit: str,
    script: ScriptSpec | None = None,
    table: MergeTable | None = None,
) -> list[SubwordSentence]:
    return [
        segment_sentence(s, unit, script, table, lineno=i)
        for i, s in enumerate(corpus, start=1)
    ]


def desegment(sent: Sequence[str]) -> str:
    """Rebuild words by concatenating subwords between boundary markers."""
    if not sent:
        return ""
    if sent[0] == MARKER or sent[-1] == MARKER:
        raise DataError("boundary marker at sentence edge")
    words = []
    cur = []
    prev_marker = False
    for tok in sent:
        if tok == MARKER:
            if prev_marker:
                raise DataError("consecutive boundary markers")
            words.append("".join(cur))
            cur = []
            prev_marker = True
        else:
            cur.append(tok)
            prev_marker = False
    words.append("".join(cur))
    return " ".join(words)
