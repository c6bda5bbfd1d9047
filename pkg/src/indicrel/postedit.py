"""Transliterate words a decoder left untranslated (still in the source script)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from indicrel.convert import convert_script
from indicrel.errors import DataError
from indicrel.scripts import ScriptSpec, in_block, is_in_script, script_for_lang
from indicrel.translit.channel import TransliterationModel, transliterate_statistical


def detect_untranslated(
    sentence: Sequence[str], src: ScriptSpec, tgt: ScriptSpec
) -> list[int]:
    if src == tgt:
        raise ValueError("source and target scripts must differ")
    return [
        i
        for i, tok in enumerate(sentence)
        if tok and is_in_script(tok, src) and not is_in_script(tok, tgt)
    ]


def _is_mixed(tok: str, src: ScriptSpec) -> bool:
    return any(in_block(ch, src) for ch in tok) and not is_in_script(tok, src)


@dataclass
class PosteditResult:
    sentences: list[list[str]]
    replaced: int
    skipped: int

    def summary(self) -> str:
        return f"replaced={self.replaced} skipped={self.skipped}"


def postedit_translate(
    sentences: Sequence[Sequence[str]],
    src: ScriptSpec,
    tgt: ScriptSpec,
    model: TransliterationModel | None = None,
    beam: int = 8,
) -> PosteditResult:
    """Replace source-script tokens by their transliteration.

    Without a model the rule-based script conversion is used; with one the
    top statistical candidate is taken. Tokens mixing source-script and other
    characters are left alone and reported as ``skipped``.
    """
    if model is not None:
        try:
            ok = script_for_lang(model.src_lang) == src and script_for_lang(model.tgt_lang) == tgt
        except KeyError:
            ok = False
        if not ok:
            raise DataError(
                f"model is {model.src_lang or '?'}->{model.tgt_lang or '?'}, "
                f"cannot post-edit {src.name}->{tgt.name}"
            )
    cache: dict[str, str] = {}
    out: list[list[str]] = []
    replaced = skipped = 0
    for sent in sentences:
        sent = list(sent)
        skipped += sum(1 for tok in sent if tok and _is_mixed(tok, src))
        for i in detect_untranslated(sent, src, tgt):
            tok = sent[i]
            if tok not in cache:
                if model is None:
                    cache[tok] = convert_script(tok, src, tgt)[0]
                else:
                    cache[tok] = transliterate_statistical(model, tok, beam=beam, k=1)[0][0]
            sent[i] = cache[tok]
            replaced += 1
        out.append(sent)
    return PosteditResult(out, replaced, skipped)
