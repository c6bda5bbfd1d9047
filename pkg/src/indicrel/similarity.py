"""Lexical similarity between languages via the longest common subsequence ratio."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from indicrel.convert import to_devanagari
from indicrel.errors import DataError
from indicrel.scripts import ScriptSpec

NORMALIZATION_NOTE = "whitespace collapsed; no case or punctuation normalization"


def lcs_length(a: str, b: str) -> int:
    """Length of the longest common subsequence, two-row DP."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return 0
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b):
            if ca == cb:
                cur.append(prev[j] + 1)
            else:
                cur.append(max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def lcsr(a: str, b: str) -> float:
    if not a and not b:
        raise ValueError("lcsr is undefined for two empty strings")
    return lcs_length(a, b) / max(len(a), len(b))


def normalize_ws(text: str) -> str:
    return " ".join(text.split())


def corpus_lcsr(
    src: Sequence[str],
    tgt: Sequence[str],
    src_script: ScriptSpec,
    tgt_script: ScriptSpec,
) -> float:
    """Mean LCSR over aligned sentence pairs, after mapping both sides to Devanagari."""
    if len(src) != len(tgt):
        raise DataError(f"sentence count mismatch: {len(src)} vs {len(tgt)}")
    if not src:
        raise DataError("empty corpus")
    scores = []
    for i, (s, t) in enumerate(zip(src, tgt)):
        s = normalize_ws(to_devanagari(s, src_script))
        t = normalize_ws(to_devanagari(t, tgt_script))
        if not s and not t:
            raise DataError(f"sentence pair {i + 1} is empty on both sides")
        scores.append(lcsr(s, t))
    return math.fsum(scores) / len(scores)


@dataclass
class SimilarityMatrix:
    langs: list[str]
    values: list[list[float]]
    corpus_id: str = ""
    sentence_count: int = 0
    notes: str = field(default=NORMALIZATION_NOTE)

    def __getitem__(self, pair: tuple[str, str]) -> float:
        i, j = (self.langs.index(x) for x in pair)
        return self.values[i][j]

    def to_tsv(self) -> str:
        lines = ["\t" + "\t".join(self.langs)]
        for lang, row in zip(self.langs, self.values):
            lines.append(lang + "\t" + "\t".join(f"{v:.4f}" for v in row))
        return "\n".join(lines) + "\n"


def similarity_matrix(
    corpora: Mapping[str, Sequence[str]],
    scripts: Mapping[str, ScriptSpec],
    corpus_id: str = "",
) -> SimilarityMatrix:
    """Pairwise corpus LCSR over an n-way parallel corpus.

    LCSR is symmetric, so each unordered pair is computed once and mirrored.
    """
    langs = list(corpora)
    if len(langs) < 2:
        raise DataError("need at least two languages")
    n = len(corpora[langs[0]])
    for lang in langs[1:]:
        if len(corpora[lang]) != n:
            raise DataError(
                f"corpus length mismatch: {langs[0]}={n} vs {lang}={len(corpora[lang])}"
            )
    values = [[1.0 if i == j else 0.0 for j in range(len(langs))] for i in range(len(langs))]
    for i, a in enumerate(langs):
        for j in range(i + 1, len(langs)):
            b = langs[j]
            v = corpus_lcsr(corpora[a], corpora[b], scripts[a], scripts[b])
            values[i][j] = values[j][i] = v
    return SimilarityMatrix(langs, values, corpus_id=corpus_id, sentence_count=n)
