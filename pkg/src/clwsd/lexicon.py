"""Bilingual lexicon: source lemma -> weighted target-language translations."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from clwsd._textio import Source, iter_lines, read_text, write_text
from clwsd.errors import FormatError

__all__ = ["Translation", "Lexicon", "load_lexicon", "write_lexicon", "translations", "most_common"]

_WEIGHT = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


@dataclass(frozen=True)
class Translation:
    """One target-language rendering of a source lemma.

    ``weight`` is the raw dictionary weight as read from file (``None`` if
    the column was omitted). It is kept only so the lexicon can be written
    back and takes no part in equality.
    """

    words: tuple[str, ...]
    probability: float = 1.0
    weight: float | None = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.words, str):
            object.__setattr__(self, "words", tuple(self.words.split(" ")))
        else:
            object.__setattr__(self, "words", tuple(self.words))
        if not self.words:
            raise ValueError("a translation needs at least one word")
        for w in self.words:
            if not isinstance(w, str) or not w or any(ch.isspace() for ch in w):
                raise ValueError(f"invalid word {w!r} in translation {self.words!r}")
        p = self.probability
        if not (isinstance(p, (int, float)) and math.isfinite(p) and 0.0 < p <= 1.0):
            raise ValueError(f"probability must be in (0, 1], got {p!r}")

    @property
    def surface(self) -> str:
        return " ".join(self.words)

    def __str__(self) -> str:
        return self.surface


class Lexicon(Mapping[str, tuple[Translation, ...]]):
    """Immutable map from source lemma to its ordered translations.

    Constructing a Lexicon directly keeps the probabilities as given;
    :func:`load_lexicon` is what normalizes them per lemma.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[str, Iterable[Translation]] | None = None):
        table: dict[str, tuple[Translation, ...]] = {}
        for lemma, ts in (entries or {}).items():
            ts = tuple(ts)
            if not lemma:
                raise ValueError("source lemma must be non-empty")
            if not ts:
                raise ValueError(f"lemma {lemma!r} has no translations")
            surfaces = [t.words for t in ts]
            if len(set(surfaces)) != len(surfaces):
                raise ValueError(f"lemma {lemma!r} has duplicate translation surfaces")
            table[lemma] = ts
        self._entries = MappingProxyType(table)

    def __getitem__(self, lemma: str) -> tuple[Translation, ...]:
        return self._entries[lemma]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return list(self._entries.items()) == list(other._entries.items())

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Lexicon({dict(self._entries)!r})"


def load_lexicon(source: Source) -> Lexicon:
    """Read a ``lemma<TAB>target words[<TAB>weight]`` file.

    Rows are grouped by lemma in file order. Weights are rescaled to sum
    to one per lemma; a lemma whose rows all omit the weight gets a
    uniform distribution. Mixing weighted and unweighted rows for one
    lemma is an error.
    """
    text, name = read_text(source)
    rows: dict[str, list[tuple[int, tuple[str, ...], float | None]]] = {}
    for lineno, line in iter_lines(text):
        cols = line.split("\t")
        if len(cols) not in (2, 3):
            raise FormatError(f"expected 2 or 3 tab-separated columns, found {len(cols)}", lineno, name)
        lemma, target = cols[0], cols[1]
        if not lemma:
            raise FormatError("empty source lemma", lineno, name)
        words = tuple(target.split(" "))
        if any(not w or any(ch.isspace() for ch in w) for w in words):
            raise FormatError(f"malformed target words {target!r}", lineno, name)
        weight = None
        if len(cols) == 3:
            if not _WEIGHT.fullmatch(cols[2]):
                if cols[2].startswith("-"):
                    raise FormatError(f"non-positive weight {cols[2]!r}", lineno, name)
                raise FormatError(f"malformed weight {cols[2]!r}", lineno, name)
            weight = float(cols[2])
            if not math.isfinite(weight):
                raise FormatError(f"non-finite weight {cols[2]!r}", lineno, name)
            if weight <= 0.0:
                raise FormatError(f"non-positive weight {cols[2]!r}", lineno, name)
        group = rows.setdefault(lemma, [])
        if any(w == words for _, w, _ in group):
            raise FormatError(f"duplicate translation {target!r} for lemma {lemma!r}", lineno, name)
        if group and (group[0][2] is None) != (weight is None):
            raise FormatError(f"lemma {lemma!r} mixes rows with and without weights", lineno, name)
        group.append((lineno, words, weight))

    entries = {}
    for lemma, group in rows.items():
        if group[0][2] is None:
            p = 1.0 / len(group)
            entries[lemma] = [Translation(words, p) for _, words, _ in group]
        else:
            total = math.fsum(w for _, _, w in group)
            entries[lemma] = [Translation(words, min(1.0, w / total), w) for _, words, w in group]
    return Lexicon(entries)


def write_lexicon(lex: Lexicon, dest: Source) -> None:
    """Write ``lex`` in the TSV format read by :func:`load_lexicon`.

    Raw weights are written back when every translation of a lemma has
    one. Without them the column is omitted if the distribution is
    uniform, and the probabilities are written otherwise.
    """
    out = []
    for lemma, ts in lex.items():
        raw = [t.weight for t in ts]
        if all(r is not None for r in raw):
            values = raw
        elif len({t.probability for t in ts}) == 1:
            values = [None] * len(ts)
        else:
            values = [t.probability for t in ts]
        for t, value in zip(ts, values):
            if value is None:
                out.append(f"{lemma}\t{t.surface}\n")
            else:
                out.append(f"{lemma}\t{t.surface}\t{float(value)!r}\n")
    write_text("".join(out), dest)


def translations(lex: Lexicon, lemma: str) -> list[Translation]:
    return list(lex.get(lemma, ()))


def most_common(lex: Lexicon, lemma: str, k: int) -> list[Translation]:
    """Top ``k`` translations of ``lemma`` by probability.

    Ties keep file order (surfaces are distinct, so the order is total).
    Raises ``KeyError`` for an unknown lemma.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if lemma not in lex:
        raise KeyError(f"lemma {lemma!r} is not in the lexicon")
    ts = lex[lemma]
    order = sorted(range(len(ts)), key=lambda i: (-ts[i].probability, i, ts[i].surface))
    return [ts[i] for i in order[:k]]
