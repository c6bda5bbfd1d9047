"""Pre/post-processing toolkit for machine translation between related Indic languages."""

from indicrel.errors import ConversionError, DataError, TreeParseError
from indicrel.scripts import (
    CharClass,
    ScriptSpec,
    classify_char,
    get_script,
    is_in_script,
    offset_of,
    script_for_lang,
)

__all__ = [
    "CharClass",
    "ConversionError",
    "DataError",
    "ScriptSpec",
    "TreeParseError",
    "classify_char",
    "get_script",
    "is_in_script",
    "offset_of",
    "script_for_lang",
]

__version__ = "0.1.0"
