"""Instance, gold-key and answer files.

Instance file (TSV)::

    id<TAB>target_lemma<TAB>ctx1 ctx2 ...

Gold key and answers share the SemEval-style ``::`` line layout::

    bank bank.n.1 :: ساحل 2;بانک 1;
    bank bank.n.1 :: ساحل;بانک;

Surfaces are kept verbatim and compared by exact string equality. They may
hold single internal spaces (multi-word translations) but never ``;`` or
``::``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from clwsd._textio import Source, iter_lines, read_text, write_text
from clwsd.disambiguator import Answer, Instance
from clwsd.errors import FormatError

__all__ = [
    "GoldItem",
    "GoldKey",
    "AnswerSet",
    "load_dataset",
    "write_dataset",
    "load_gold",
    "write_gold",
    "load_answers",
    "write_answers",
]

_COUNT = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class GoldItem:
    """Gold translations of one instance with their annotator counts."""

    target_lemma: str
    counts: tuple[tuple[str, int], ...]

    def __post_init__(self):
        counts = tuple((s, int(c)) for s, c in (self.counts.items() if isinstance(self.counts, Mapping)
                                                  else self.counts))
        if not counts:
            raise ValueError("a gold item needs at least one translation")
        if any(c < 1 for _, c in counts):
            raise ValueError("gold counts must be >= 1")
        if len({s for s, _ in counts}) != len(counts):
            raise ValueError("duplicate gold surface")
        object.__setattr__(self, "counts", counts)

    def freq(self, surface: str) -> int:
        for s, c in self.counts:
            if s == surface:
                return c
        return 0

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)


GoldKey = dict  # instance id -> GoldItem, in file order
AnswerSet = dict  # instance id -> Answer, in file order


def _surface_problem(s: str) -> str | None:
    if not s:
        return "empty surface"
    if ";" in s or "::" in s or "\t" in s:
        return f"surface {s!r} contains a reserved delimiter"
    if s != s.strip(" ") or "  " in s:
        return f"surface {s!r} has leading, trailing or repeated spaces"
    if any(ch.isspace() and ch != " " for ch in s):
        return f"surface {s!r} contains non-space whitespace"
    return None


def _check_head(lemma: str, iid: str) -> None:
    for label, value in (("lemma", lemma), ("instance id", iid)):
        if not value or any(ch.isspace() for ch in value) or value == "::":
            raise ValueError(f"{label} {value!r} cannot be written in '::' format")


def _split_head(line: str, lineno: int, name: str) -> tuple[str, str, str]:
    head, sep, body = line.partition(" :: ")
    if not sep:
        raise FormatError("expected '<lemma> <id> :: ...'", lineno, name)
    parts = head.split(" ")
    if len(parts) != 2 or not all(parts):
        raise FormatError(f"expected '<lemma> <id>' before '::', got {head!r}", lineno, name)
    if not body.endswith(";"):
        raise FormatError("list must end with ';'", lineno, name)
    return parts[0], parts[1], body[:-1]


# -- instances ---------------------------------------------------------------

def load_dataset(source: Source) -> list[Instance]:
    text, name = read_text(source)
    out: list[Instance] = []
    seen: set[str] = set()
    for lineno, line in iter_lines(text):
        cols = line.split("\t")
        if len(cols) != 3:
            raise FormatError(f"expected 3 tab-separated columns, found {len(cols)}", lineno, name)
        iid, lemma, ctx = cols
        if not iid:
            raise FormatError("empty instance id", lineno, name)
        if not lemma:
            raise FormatError("empty target lemma", lineno, name)
        if any(ch.isspace() for ch in iid + lemma):
            raise FormatError("instance id and target lemma cannot contain whitespace", lineno, name)
        if iid in seen:
            raise FormatError(f"duplicate instance id {iid!r}", lineno, name)
        context = tuple(ctx.split(" ")) if ctx else ()
        if any(not c for c in context):
            raise FormatError("context lemmas must be separated by single spaces", lineno, name)
        seen.add(iid)
        out.append(Instance(iid, lemma, context))
    return out


def write_dataset(instances: Iterable[Instance], dest: Source) -> None:
    rows = [f"{i.id}\t{i.target_lemma}\t{' '.join(i.context_lemmas)}\n" for i in instances]
    write_text("".join(rows), dest)


# -- gold key ----------------------------------------------------------------

def load_gold(source: Source) -> dict[str, GoldItem]:
    text, name = read_text(source)
    gold: dict[str, GoldItem] = {}
    for lineno, line in iter_lines(text):
        lemma, iid, body = _split_head(line, lineno, name)
        if iid in gold:
            raise FormatError(f"duplicate instance id {iid!r}", lineno, name)
        counts: list[tuple[str, int]] = []
        for item in body.split(";"):
            surface, _, count = item.rpartition(" ")
            if not _COUNT.fullmatch(count):
                raise FormatError(f"expected '<surface> <count>', got {item!r}", lineno, name)
            problem = _surface_problem(surface)
            if problem:
                raise FormatError(problem, lineno, name)
            if int(count) < 1:
                raise FormatError(f"count < 1 for {surface!r}", lineno, name)
            if any(s == surface for s, _ in counts):
                raise FormatError(f"duplicate gold surface {surface!r} for {iid!r}", lineno, name)
            counts.append((surface, int(count)))
        gold[iid] = GoldItem(lemma, tuple(counts))
    return gold


def write_gold(gold: Mapping[str, GoldItem], dest: Source) -> None:
    rows = []
    for iid, item in gold.items():
        _check_head(item.target_lemma, iid)
        body = "".join(f"{s} {c};" for s, c in item.counts)
        rows.append(f"{item.target_lemma} {iid} :: {body}\n")
    write_text("".join(rows), dest)


# -- answers -----------------------------------------------------------------

def load_answers(source: Source, max_answers: int | None = None) -> dict[str, Answer]:
    """Parse an answer file; ``max_answers=5`` enforces the Out-Of-Five cap."""
    text, name = read_text(source)
    answers: dict[str, Answer] = {}
    for lineno, line in iter_lines(text):
        lemma, iid, body = _split_head(line, lineno, name)
        if iid in answers:
            raise FormatError(f"duplicate instance id {iid!r}", lineno, name)
        ranked = body.split(";")
        for s in ranked:
            problem = _surface_problem(s)
            if problem:
                raise FormatError(problem, lineno, name)
        if len(set(ranked)) != len(ranked):
            raise FormatError(f"repeated surface in answer for {iid!r}", lineno, name)
        if max_answers is not None and len(ranked) > max_answers:
            raise FormatError(f"{len(ranked)} answers for {iid!r}, at most {max_answers} allowed",
                              lineno, name)
        answers[iid] = Answer(iid, lemma, tuple(ranked))
    return answers


def write_answers(answers: Mapping[str, Answer] | Iterable[Answer], dest: Source) -> None:
    items = answers.values() if isinstance(answers, Mapping) else answers
    rows = []
    for a in items:
        _check_head(a.target_lemma, a.instance_id)
        for s in a.ranked:
            problem = _surface_problem(s)
            if problem:
                raise ValueError(problem)
        rows.append(f"{a.target_lemma} {a.instance_id} :: {';'.join(a.ranked)};\n")
    write_text("".join(rows), dest)
