"""Rule-based and statistical transliteration."""

from indicrel.convert import convert_script, to_devanagari
from indicrel.translit.channel import (
    TransliterationModel,
    train_translit,
    transliterate_statistical,
)
from indicrel.translit.lm import CharNgramLM
from indicrel.translit.mining import load_pairs, mine_candidate_pairs, read_pairs, write_pairs

__all__ = [
    "CharNgramLM",
    "TransliterationModel",
    "convert_script",
    "load_pairs",
    "mine_candidate_pairs",
    "read_pairs",
    "to_devanagari",
    "train_translit",
    "transliterate_statistical",
    "write_pairs",
]
