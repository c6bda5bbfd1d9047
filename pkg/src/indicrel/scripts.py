"""Registry of supported writing systems.

Brahmi-derived scripts occupy 128-codepoint Unicode blocks whose first 112
codepoints are laid out at common offsets, so one offset-class table
(written in Devanagari offsets) serves every script in the registry.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass

BLOCK_SIZE = 0x80
ALIGNED_LEN = 112


class CharClass(enum.Enum):
    CONSONANT = "ConsonantLetter"
    INDEPENDENT_VOWEL = "IndependentVowel"
    VOWEL_SIGN = "VowelSign"
    VIRAMA = "Virama"
    NUKTA = "Nukta"
    COMBINING_SIGN = "CombiningSign"
    DIGIT = "Digit"
    PUNCTUATION = "Punctuation"
    OTHER = "Other"


@dataclass(frozen=True)
class ScriptSpec:
    name: str
    lang: str
    range_start: int | None = None
    aligned_len: int = ALIGNED_LEN
    vowels: frozenset[str] = frozenset()

    @property
    def is_brahmi(self) -> bool:
        return self.range_start is not None

    def __str__(self) -> str:
        return self.name


def _build_offset_table() -> tuple[CharClass, ...]:
    table = [CharClass.OTHER] * ALIGNED_LEN

    def fill(lo: int, hi: int, cls: CharClass) -> None:
        for off in range(lo, hi + 1):
            table[off] = cls

    fill(0x00, 0x03, CharClass.COMBINING_SIGN)
    fill(0x04, 0x14, CharClass.INDEPENDENT_VOWEL)
    fill(0x15, 0x39, CharClass.CONSONANT)
    fill(0x3A, 0x3B, CharClass.VOWEL_SIGN)
    fill(0x3C, 0x3C, CharClass.NUKTA)
    fill(0x3E, 0x4C, CharClass.VOWEL_SIGN)
    fill(0x4D, 0x4D, CharClass.VIRAMA)
    fill(0x4E, 0x4F, CharClass.VOWEL_SIGN)
    fill(0x51, 0x54, CharClass.COMBINING_SIGN)
    fill(0x55, 0x57, CharClass.VOWEL_SIGN)
    fill(0x58, 0x5F, CharClass.CONSONANT)
    fill(0x60, 0x61, CharClass.INDEPENDENT_VOWEL)
    fill(0x62, 0x63, CharClass.VOWEL_SIGN)
    fill(0x64, 0x65, CharClass.PUNCTUATION)
    fill(0x66, 0x6F, CharClass.DIGIT)
    return tuple(table)


# Offsets 0x3D (avagraha) and 0x50 (om) stay Other.
OFFSET_CLASSES: tuple[CharClass, ...] = _build_offset_table()

DEVANAGARI = ScriptSpec("devanagari", "hin", 0x0900)
BENGALI = ScriptSpec("bengali", "ben", 0x0980)
GURMUKHI = ScriptSpec("gurmukhi", "pan", 0x0A00)
GUJARATI = ScriptSpec("gujarati", "guj", 0x0A80)
ORIYA = ScriptSpec("oriya", "ori", 0x0B00)
TAMIL = ScriptSpec("tamil", "tam", 0x0B80)
TELUGU = ScriptSpec("telugu", "tel", 0x0C00)
KANNADA = ScriptSpec("kannada", "kan", 0x0C80)
MALAYALAM = ScriptSpec("malayalam", "mal", 0x0D00)
LATIN = ScriptSpec("latin", "eng", None, 0, frozenset("aeiouAEIOU"))

BRAHMI_SCRIPTS: tuple[ScriptSpec, ...] = (
    DEVANAGARI, BENGALI, GURMUKHI, GUJARATI, ORIYA, TAMIL, TELUGU, KANNADA, MALAYALAM,
)
REGISTRY: dict[str, ScriptSpec] = {s.name: s for s in BRAHMI_SCRIPTS + (LATIN,)}

LANG_TO_SCRIPT: dict[str, ScriptSpec] = {
    "hin": DEVANAGARI,
    "mar": DEVANAGARI,
    "kok": DEVANAGARI,
    "pan": GURMUKHI,
    "guj": GUJARATI,
    "ben": BENGALI,
    "tel": TELUGU,
    "tam": TAMIL,
    "mal": MALAYALAM,
    "kan": KANNADA,
    "ori": ORIYA,
    "eng": LATIN,
}


def get_script(key: str) -> ScriptSpec:
    """Look up a script by name ("malayalam") or by language code ("mal")."""
    k = key.strip().lower()
    if k in REGISTRY:
        return REGISTRY[k]
    if k in LANG_TO_SCRIPT:
        return LANG_TO_SCRIPT[k]
    raise KeyError(f"unknown script or language: {key!r}")


def script_for_lang(lang: str) -> ScriptSpec:
    try:
        return LANG_TO_SCRIPT[lang.lower()]
    except KeyError:
        raise KeyError(f"no script registered for language {lang!r}") from None


def offset_of(ch: str, script: ScriptSpec) -> int | None:
    if script.range_start is None:
        return None
    off = ord(ch) - script.range_start
    if 0 <= off < BLOCK_SIZE:
        return off
    return None


def from_offset(offset: int, script: ScriptSpec) -> str:
    if script.range_start is None or not 0 <= offset < BLOCK_SIZE:
        raise ValueError(f"offset {offset:#x} outside the {script.name} block")
    return chr(script.range_start + offset)


def brahmi_script_of(ch: str) -> ScriptSpec | None:
    """Return the registered Brahmi script whose block contains ``ch``."""
    cp = ord(ch)
    for s in BRAHMI_SCRIPTS:
        if s.range_start <= cp < s.range_start + BLOCK_SIZE:
            return s
    return None


def _is_latin_letter(ch: str) -> bool:
    return ch.isalpha() and unicodedata.name(ch, "").startswith("LATIN")


def _generic_class(ch: str) -> CharClass:
    cat = unicodedata.category(ch)
    if cat == "Nd":
        return CharClass.DIGIT
    if cat.startswith("P"):
        return CharClass.PUNCTUATION
    return CharClass.OTHER


def classify_char(ch: str, script: ScriptSpec) -> CharClass:
    if script.is_brahmi:
        off = offset_of(ch, script)
        if off is not None:
            return OFFSET_CLASSES[off] if off < script.aligned_len else CharClass.OTHER
        return _generic_class(ch)
    if _is_latin_letter(ch):
        base = unicodedata.normalize("NFD", ch)[0]
        return CharClass.INDEPENDENT_VOWEL if base in script.vowels else CharClass.CONSONANT
    return _generic_class(ch)


def in_block(ch: str, script: ScriptSpec) -> bool:
    if script.is_brahmi:
        return offset_of(ch, script) is not None
    return _is_latin_letter(ch)


def is_in_script(word: str, script: ScriptSpec) -> bool:
    """True if every character other than digits and punctuation belongs to ``script``."""
    if not word:
        raise ValueError("is_in_script: empty word")
    for ch in word:
        if in_block(ch, script):
            continue
        if _generic_class(ch) in (CharClass.DIGIT, CharClass.PUNCTUATION):
            continue
        return False
    return True


def detect_script(word: str, default: ScriptSpec = LATIN) -> ScriptSpec:
    """Guess the script of a word from its first script-bearing character."""
    for ch in word:
        s = brahmi_script_of(ch)
        if s is not None:
            return s
        if _is_latin_letter(ch):
            return LATIN
    return default
