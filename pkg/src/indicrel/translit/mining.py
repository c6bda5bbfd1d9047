"""Candidate transliteration pairs from a sentence-aligned parallel corpus.

Pairs whose LCSR, measured after mapping both words to Devanagari, reaches a
threshold are treated as likely cognates / transliterations. This is a cheap
stand-in for a dedicated transliteration-mining model.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from indicrel.convert import to_devanagari
from indicrel.errors import DataError
from indicrel.scripts import ScriptSpec
from indicrel.similarity import lcsr

from indicrel.translit.channel import WordPair


def mine_candidate_pairs(
    src: Sequence[str],
    tgt: Sequence[str],
    src_script: ScriptSpec,
    tgt_script: ScriptSpec,
    threshold: float = 0.5,
) -> list[WordPair]:
    if len(src) != len(tgt):
        raise DataError(f"sentence count mismatch: source={len(src)} target={len(tgt)}")
    if not 0 < threshold <= 1:
        raise ValueError(f"threshold must be in (0, 1], got {threshold}")
    seen: set[WordPair] = set()
    pairs: list[WordPair] = []
    for s_line, t_line in zip(src, tgt):
        t_words = [(w, to_devanagari(w, tgt_script)) for w in t_line.split()]
        for sw in s_line.split():
            s_norm = to_devanagari(sw, src_script)
            for tw, t_norm in t_words:
                if (sw, tw) in seen:
                    continue
                if lcsr(s_norm, t_norm) >= threshold:
                    seen.add((sw, tw))
                    pairs.append((sw, tw))
    return pairs


def read_pairs(lines: Iterable[str]) -> list[WordPair]:
    pairs = []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise DataError(f"line {lineno}: expected 'source<TAB>target', got {line!r}")
        pairs.append((parts[0], parts[1]))
    return pairs


def write_pairs(pairs: Iterable[WordPair]) -> str:
    return "".join(f"{s}\t{t}\n" for s, t in pairs)


def load_pairs(path: str | Path) -> list[WordPair]:
    with open(path, encoding="utf-8") as f:
        return read_pairs(f)
