"""Best and Out-Of-Five precision / recall / F-measure.

For an item with gold multiset ``H`` (size = sum of annotator counts) and
answer list ``a``::

    best = sum(freq(r) for r in a) / (len(a) * |H|)
    oof  = min(1, sum(freq(r) for r in a) / |H|)

Precision averages item scores over answered items, recall over all gold
items. Unanswered items therefore only lower recall.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Mapping

from clwsd.benchmark import GoldItem
from clwsd.config import Mode
from clwsd.disambiguator import Answer
from clwsd.errors import ScoringError

__all__ = ["LemmaScore", "EvalReport", "item_score", "score", "report_render"]

CSV_HEADER = ("lemma", "items", "precision", "recall", "f_measure")


def _f(p: float, r: float) -> float:
    if p + r == 0.0:
        return 0.0
    if p == r:
        return p
    return 2.0 * p * r / (p + r)


@dataclass(frozen=True)
class LemmaScore:
    precision: float
    recall: float
    f_measure: float
    items: int
    answered: int = 0


@dataclass(frozen=True)
class EvalReport:
    mode: Mode
    precision: float
    recall: float
    f_measure: float
    answered: int
    total: int
    per_lemma: dict[str, LemmaScore] = field(default_factory=dict)
    item_scores: dict[str, float] = field(default_factory=dict, compare=False, repr=False)


def item_score(ranked, gold: GoldItem, mode: Mode | str) -> float:
    mode = Mode(mode)
    hits = sum(gold.freq(s) for s in ranked)
    if mode is Mode.BEST:
        return hits / (len(ranked) * gold.total)
    return min(1.0, hits / gold.total)


def score(answers: Mapping[str, Answer], gold: Mapping[str, GoldItem], mode: Mode | str) -> EvalReport:
    """Score ``answers`` against ``gold``.

    Raises :class:`ScoringError` for an answer whose id is not in the gold
    key, or an Out-Of-Five answer with more than five surfaces.
    """
    mode = Mode(mode)
    scores: dict[str, float] = {}
    for iid, answer in answers.items():
        if iid not in gold:
            raise ScoringError(f"answer id {iid!r} is not in the gold key")
        if mode is Mode.OOF and len(answer.ranked) > 5:
            raise ScoringError(f"{len(answer.ranked)} answers for {iid!r}; Out-Of-Five allows at most 5")
        scores[iid] = item_score(answer.ranked, gold[iid], mode)

    groups: dict[str, list[str]] = {}
    for iid, item in gold.items():
        groups.setdefault(item.target_lemma, []).append(iid)

    per_lemma = {}
    for lemma in sorted(groups):
        ids = groups[lemma]
        got = [scores[i] for i in ids if i in scores]
        s = math.fsum(got)
        p = s / len(got) if got else 0.0
        r = s / len(ids)
        per_lemma[lemma] = LemmaScore(p, r, _f(p, r), len(ids), len(got))

    total_sum = math.fsum(scores.values())
    p = total_sum / len(scores) if scores else 0.0
    r = total_sum / len(gold) if gold else 0.0
    return EvalReport(mode, p, r, _f(p, r), len(scores), len(gold), per_lemma, scores)


def report_render(report: EvalReport, fmt: str = "text") -> bytes:
    """Render ``report`` as human-readable text (x100, one decimal) or CSV (full precision)."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for lemma, ls in report.per_lemma.items():
            w.writerow([lemma, ls.items, repr(ls.precision), repr(ls.recall), repr(ls.f_measure)])
        return buf.getvalue().encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")

    lines = [
        f"mode: {report.mode.value}",
        f"answered: {report.answered}/{report.total}",
        f"P: {100 * report.precision:.1f}",
        f"R: {100 * report.recall:.1f}",
        f"F: {100 * report.f_measure:.1f}",
    ]
    if report.per_lemma:
        width = max(5, *(len(k) for k in report.per_lemma))
        lines.append("")
        lines.append(f"{'lemma':<{width}}  items      P      R      F")
        for lemma, ls in report.per_lemma.items():
            lines.append(f"{lemma:<{width}}  {ls.items:>5}  {100 * ls.precision:5.1f}  "
                         f"{100 * ls.recall:5.1f}  {100 * ls.f_measure:5.1f}")
    return ("\n".join(lines) + "\n").encode("utf-8")
