"""Source-side pre-ordering of role-annotated constituency trees.

English clause constituents are rearranged into Indic (SOV) order: within
a clause, role-labelled children are emitted in the configured clause order
(C_m S_m S V_m O_m O V by default); prepositions become postpositions by
moving P after its complement. Children without a role label stay where
they are.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from indicrel.errors import DataError, TreeParseError

ROLE_LABELS = ("C_m", "S_m", "S", "V_m", "O_m", "O", "V")
PHRASE_LABELS = ("NP", "PP", "P", "X")
ROOT_LABEL = "ROOT"
LABELS = frozenset(ROLE_LABELS + PHRASE_LABELS + (ROOT_LABEL,))
DEFAULT_CLAUSE_ORDER: tuple[str, ...] = ROLE_LABELS


@dataclass(frozen=True)
class RoleTree:
    label: str
    children: tuple["RoleTree", ...] = ()
    token: str | None = None

    def __post_init__(self):
        if self.token is not None and self.children:
            raise ValueError("a node has either children or a token, not both")
        if self.token is None and not self.children:
            raise ValueError(f"empty node {self.label!r}")
        if self.token is not None and not self.token:
            raise ValueError("leaf token must be non-empty")

    @property
    def is_leaf(self) -> bool:
        return self.token is not None

    def leaves(self) -> Iterator[str]:
        if self.token is not None:
            yield self.token
        for c in self.children:
            yield from c.leaves()

    def __str__(self) -> str:
        if self.token is not None:
            return f"({self.label} {self.token})"
        return f"({self.label} " + " ".join(map(str, self.children)) + ")"


@dataclass(frozen=True)
class PreorderConfig:
    clause_order: tuple[str, ...] = DEFAULT_CLAUSE_ORDER
    postposition_labels: tuple[str, ...] = ("P",)
    phrase_labels_with_postpositions: tuple[str, ...] = ("PP",)

    @classmethod
    def from_mapping(cls, conf: dict[str, str]) -> "PreorderConfig":
        kwargs = {}
        if "clause_order" in conf:
            order = tuple(x.strip() for x in conf["clause_order"].split(",") if x.strip())
            unknown = [x for x in order if x not in ROLE_LABELS]
            if unknown or len(set(order)) != len(order):
                raise DataError(f"bad clause_order {conf['clause_order']!r}")
            kwargs["clause_order"] = order
        return cls(**kwargs)

    @classmethod
    def load(cls, path: str | Path) -> "PreorderConfig":
        return cls.from_mapping(read_config(path))


def read_config(path: str | Path) -> dict[str, str]:
    """Parse a ``key=value`` file; blank lines and ``#`` comments are ignored."""
    conf = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DataError(f"{path}:{lineno}: expected key=value")
        key, value = line.split("=", 1)
        conf[key.strip().replace("-", "_")] = value.strip()
    return conf


# --------------------------------------------------------------------------
# reading
# --------------------------------------------------------------------------


def _tokenize(text: str) -> list[tuple[str, int]]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            toks.append((ch, i))
            i += 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            toks.append((text[i:j], i))
            i = j
    return toks


def read_tree(text: str, strict: bool = True) -> RoleTree:
    """Parse ``(LABEL child ...)`` with leaves ``(LABEL token)``.

    A node listing several bare words, as in ``(NP the movie)``, gets one X
    leaf per word. Unknown labels raise in strict mode and become X
    otherwise. Error positions are 0-based character offsets.
    """
    toks = _tokenize(text)
    pos = 0

    def parse() -> RoleTree:
        nonlocal pos
        if pos >= len(toks):
            raise TreeParseError("unexpected end of input", len(text))
        tok, at = toks[pos]
        if tok != "(":
            raise TreeParseError(f"expected '(' but found {tok!r}", at)
        pos += 1
        if pos >= len(toks):
            raise TreeParseError("missing label", len(text))
        label, lat = toks[pos]
        if label in "()":
            raise TreeParseError("missing label", lat)
        if label not in LABELS:
            if strict:
                raise TreeParseError(f"unknown label {label!r}", lat)
            label = "X"
        pos += 1
        words: list[str] = []
        children: list[RoleTree] = []
        while True:
            if pos >= len(toks):
                raise TreeParseError("unbalanced brackets", len(text))
            tok, at = toks[pos]
            if tok == ")":
                pos += 1
                break
            if tok == "(":
                children.append(parse())
            else:
                words.append(tok)
                children.append(RoleTree("X", token=tok))
                pos += 1
        if not children:
            raise TreeParseError(f"empty node {label!r}", lat)
        if len(children) == 1 and words:
            return RoleTree(label, token=words[0])
        return RoleTree(label, tuple(children))

    tree = parse()
    if pos != len(toks):
        raise TreeParseError("trailing input after tree", toks[pos][1])
    return tree


# --------------------------------------------------------------------------
# reordering
# --------------------------------------------------------------------------


def _ordered_children(tree: RoleTree, config: PreorderConfig) -> Sequence[RoleTree]:
    kids = list(tree.children)
    if tree.label in config.phrase_labels_with_postpositions:
        return [c for c in kids if c.label not in config.postposition_labels] + [
            c for c in kids if c.label in config.postposition_labels
        ]
    rank = {lab: i for i, lab in enumerate(config.clause_order)}
    slots = [i for i, c in enumerate(kids) if c.label in rank]
    if not slots:
        return kids
    moved = sorted((kids[i] for i in slots), key=lambda c: rank[c.label])
    for i, child in zip(slots, moved):
        kids[i] = child
    return kids


def reorder(tree: RoleTree, config: PreorderConfig | None = None) -> list[str]:
    """Return the leaf tokens of ``tree`` in target-language order."""
    config = config or PreorderConfig()
    if tree.is_leaf:
        return [tree.token]
    out: list[str] = []
    for child in _ordered_children(tree, config):
        out.extend(reorder(child, config))
    return out
