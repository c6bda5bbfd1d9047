"""Rule-based script conversion between Brahmi-derived scripts.

A character at offset ``k`` of the source block is rewritten to the
character at offset ``k`` of the target block. Conversion is plain
codepoint arithmetic, so no Unicode normalization is applied here (it would
break the round-trip property on sequences NFC composes differently per
script). Normalize at the I/O boundary instead.
"""

from __future__ import annotations

from indicrel.errors import ConversionError
from indicrel.scripts import DEVANAGARI, ScriptSpec, brahmi_script_of, offset_of


def convert_script(
    text: str, src: ScriptSpec, tgt: ScriptSpec, strict: bool = False
) -> tuple[str, int]:
    """Convert ``text`` from ``src`` to ``tgt`` script.

    Returns the converted text and the number of warnings: characters in the
    source block beyond the aligned range, or characters belonging to some
    other Brahmi block. Those pass through unchanged unless ``strict``, in
    which case a :class:`ConversionError` is raised. Characters outside all
    Brahmi blocks (spaces, ASCII, ...) pass through silently.
    """
    if not (src.is_brahmi and tgt.is_brahmi):
        raise ValueError(f"convert_script needs Brahmi scripts, got {src} -> {tgt}")
    shift = tgt.range_start - src.range_start
    out = []
    warnings = 0
    for i, ch in enumerate(text):
        off = offset_of(ch, src)
        if off is not None and off < src.aligned_len:
            out.append(chr(ord(ch) + shift))
            continue
        if off is not None or brahmi_script_of(ch) is not None:
            if strict:
                raise ConversionError(ch, i)
            warnings += 1
        out.append(ch)
    return "".join(out), warnings


def to_devanagari(text: str, src: ScriptSpec) -> str:
    """Map text to the common Devanagari representation; non-Brahmi text is returned as is."""
    if not src.is_brahmi or src == DEVANAGARI:
        return text
    return convert_script(text, src, DEVANAGARI)[0]
