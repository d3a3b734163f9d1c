"""Braid words: data model, text grammar, free reduction, relation tables.

Group kinds:

* ``B``   classical braid group (sigma generators only)
* ``FB``  flat braids: sigma_i^2 = 1
* ``VB``  virtual braids: sigma plus involutive virtual generators rho_i
* ``FVB`` flat virtual braids: both families involutive

Word grammar (whitespace-separated tokens): ``s3`` is sigma_3, ``s3'`` and
``S3`` are its inverse, ``r2`` is rho_2.  Unicode spellings (``σ3``, ``ρ2``,
optional ``^-1`` suffix) are also accepted.  Virtual generators normalize to
power +1 (rho is an involution); in flat kinds classical generators normalize
to power +1 as well, so an inverse marker there is accepted and dropped.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import InvalidStrandCount, KindMismatch, WordSyntaxError

__all__ = [
    "BraidWord",
    "Generator",
    "GroupKind",
    "RelationEntry",
    "RelationTable",
    "format_word",
    "free_reduce",
    "load_corpus",
    "parse_word",
    "relation_table",
    "rho",
    "sigma",
]


class GroupKind(str, Enum):
    B = "B"
    FB = "FB"
    VB = "VB"
    FVB = "FVB"

    @property
    def is_virtual(self) -> bool:
        return self in (GroupKind.VB, GroupKind.FVB)

    @property
    def is_flat(self) -> bool:
        return self in (GroupKind.FB, GroupKind.FVB)

    @classmethod
    def parse(cls, text: str) -> "GroupKind":
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown group kind {text!r} (expected b, fb, vb or fvb)") from None


@dataclass(frozen=True)
class Generator:
    """One letter: sigma_index^power (classical) or rho_index (virtual)."""

    virtual: bool
    index: int
    power: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise IndexError(f"generator index must be >= 1, got {self.index}")
        if self.power not in (1, -1):
            raise ValueError(f"generator power must be +1 or -1, got {self.power}")

    def inverse(self) -> "Generator":
        if self.virtual:
            return self
        return Generator(False, self.index, -self.power)

    def format(self) -> str:
        if self.virtual:
            return f"r{self.index}"
        return f"{'S' if self.power < 0 else 's'}{self.index}"


def sigma(index: int, power: int = 1) -> Generator:
    return Generator(False, index, power)


def rho(index: int) -> Generator:
    return Generator(True, index, 1)


def _normalize_letter(gen: Generator, group: GroupKind) -> Generator:
    if gen.virtual or (group.is_flat and gen.power != 1):
        return Generator(gen.virtual, gen.index, 1)
    return gen


@dataclass(frozen=True)
class BraidWord:
    """A word in one of the four group kinds.

    The same letter sequence under a different kind is a different value:
    the kind decides normalization and which relations apply.
    """

    strands: int
    group: GroupKind
    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise InvalidStrandCount(f"strand count must be >= 2, got {self.strands}")
        normalized = []
        for gen in self.letters:
            if gen.index >= self.strands:
                raise IndexError(
                    f"generator index {gen.index} out of range for {self.strands} strands"
                )
            if gen.virtual and not self.group.is_virtual:
                raise KindMismatch(f"virtual generator r{gen.index} not defined in {self.group.value}")
            normalized.append(_normalize_letter(gen, self.group))
        object.__setattr__(self, "letters", tuple(normalized))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if (self.strands, self.group) != (other.strands, other.group):
            raise ValueError("cannot concatenate words with different strands or kind")
        return BraidWord(self.strands, self.group, self.letters + other.letters)

    def format(self) -> str:
        return " ".join(gen.format() for gen in self.letters)

    def __str__(self) -> str:
        return self.format()


_TOKEN_RE = re.compile(r"^(?P<sym>[sSrRσρ])(?P<idx>\d+)(?P<inv>'|\^-1)?$")


def parse_word(text: str, strands: int, group: GroupKind | str) -> BraidWord:
    """Parse the word grammar described in the module docstring.

    An empty (or all-whitespace) string is the empty word.
    """
    group = GroupKind.parse(group) if isinstance(group, str) else group
    letters = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if not m:
            raise WordSyntaxError(f"bad token {token!r}")
        sym = m.group("sym")
        virtual = sym in ("r", "R", "ρ")
        inverse = sym in ("S", "R") or m.group("inv") is not None
        index = int(m.group("idx"))
        if index < 1:
            raise IndexError(f"generator index must be >= 1 in token {token!r}")
        letters.append(Generator(virtual, index, -1 if (inverse and not virtual) else 1))
    return BraidWord(strands, group, tuple(letters))


def format_word(word: BraidWord) -> str:
    return word.format()


def _cancels(a: Generator, b: Generator, group: GroupKind) -> bool:
    if a.virtual != b.virtual or a.index != b.index:
        return False
    if a.virtual:
        return True
    if group.is_flat:
        return True
    return a.power == -b.power


def free_reduce(word: BraidWord) -> BraidWord:
    """Delete adjacent cancelling pairs until none remain.

    Cancelling pairs: sigma sigma^-1 and sigma^-1 sigma (any kind), rho rho,
    and sigma sigma in the flat kinds.
    """
    stack: list[Generator] = []
    for gen in word.letters:
        if stack and _cancels(stack[-1], gen, word.group):
            stack.pop()
        else:
            stack.append(gen)
    return BraidWord(word.strands, word.group, tuple(stack))


@dataclass(frozen=True)
class RelationEntry:
    lhs: BraidWord
    rhs: BraidWord
    tag: str


RelationTable = list[RelationEntry]

FORBIDDEN_TAGS = ("forbidden-a", "forbidden-b")


def _word(group: GroupKind, n: int, letters: list[Generator]) -> BraidWord:
    return BraidWord(n, group, tuple(letters))


def relation_table(
    group: GroupKind | str,
    strands: int,
    tags: tuple[str, ...] | list[str] | None = None,
) -> RelationTable:
    """Enumerate the defining relations of the given kind over all valid indices.

    Forbidden entries (tags ``forbidden-a``/``forbidden-b``; these relations
    deliberately do *not* hold, and exist only in the virtual kinds) are
    returned only when their tag is explicitly requested via ``tags``.
    """
    group = GroupKind.parse(group) if isinstance(group, str) else group
    if strands < 2:
        raise InvalidStrandCount(f"strand count must be >= 2, got {strands}")
    n = strands
    entries: RelationTable = []

    def add(tag: str, lhs: list[Generator], rhs: list[Generator]) -> None:
        entries.append(RelationEntry(_word(group, n, lhs), _word(group, n, rhs), tag))

    for i in range(1, n - 1):
        add("braid", [sigma(i), sigma(i + 1), sigma(i)], [sigma(i + 1), sigma(i), sigma(i + 1)])
    for i in range(1, n):
        for j in range(i + 2, n):
            add("far-commute", [sigma(i), sigma(j)], [sigma(j), sigma(i)])
    if group.is_flat:
        for i in range(1, n):
            add("flat-involution", [sigma(i), sigma(i)], [])
    if group.is_virtual:
        for i in range(1, n - 1):
            add("virtual-braid", [rho(i), rho(i + 1), rho(i)], [rho(i + 1), rho(i), rho(i + 1)])
        for i in range(1, n):
            for j in range(i + 2, n):
                add("virtual-far-commute", [rho(i), rho(j)], [rho(j), rho(i)])
        for i in range(1, n):
            add("virtual-involution", [rho(i), rho(i)], [])
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) >= 2:
                    add("mixed-commute", [sigma(i), rho(j)], [rho(j), sigma(i)])
        for i in range(1, n - 1):
            add("mixed-braid", [rho(i), rho(i + 1), sigma(i)], [sigma(i + 1), rho(i), rho(i + 1)])
        if tags and any(t in tags for t in FORBIDDEN_TAGS):
            for i in range(1, n - 1):
                add(
                    "forbidden-a",
                    [rho(i), sigma(i + 1), sigma(i)],
                    [sigma(i + 1), sigma(i), rho(i + 1)],
                )
                add(
                    "forbidden-b",
                    [rho(i + 1), sigma(i), sigma(i + 1)],
                    [sigma(i), sigma(i + 1), rho(i)],
                )

    if tags is not None:
        entries = [e for e in entries if e.tag in tags]
    return entries


# --- word files and corpus JSON -------------------------------------------


def read_word_file(path: str | Path) -> list[str]:
    """One word per line; blank lines and '#' comments are skipped."""
    out = []
    for line in Path(path).read_text().splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            out.append(stripped)
    return out


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    strands: int
    group: GroupKind
    word: BraidWord


def load_corpus(path: str | Path) -> list[CorpusEntry]:
    """Corpus JSON: [{"name": ..., "n": 2, "group": "VB", "word": "s1 r1 s1"}]."""
    data = json.loads(Path(path).read_text())
    entries = []
    for item in data:
        group = GroupKind.parse(item["group"])
        n = int(item["n"])
        entries.append(
            CorpusEntry(
                name=str(item.get("name", "")),
                strands=n,
                group=group,
                word=parse_word(item["word"], n, group),
            )
        )
    return entries
