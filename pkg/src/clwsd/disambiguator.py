"""Context-based selection of translation candidates.

Every candidate translation ``t`` of the ambiguous word is compared with
the translation sets of its context words, one set per context token:

* ``sim(t, u)`` is the best cosine over all word pairs of two terms.
* ``relagg`` builds one context vector by picking, from each set, the
  member most similar to ``t``, summing their unit vectors and normalizing;
  the score is ``cos(V_t, context) * P(t)``.
* ``relgreedy`` takes the single best ``sim`` against any member of any
  set, times ``P(t)``.

Candidates are then ranked by score. Ties (equal to 12 decimals) go to
the higher ``P(t)`` and then to the lexicographically smaller surface. Candidates that cannot be
scored (no usable vectors) come after all scored ones, in baseline order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from clwsd.config import Method, Mode
from clwsd.embeddings import EmbeddingModel, cosine, normalize, term_vector, usable_vector
from clwsd.lexicon import Lexicon, Translation, most_common

__all__ = [
    "Instance",
    "ContextTranslations",
    "ScoredCandidate",
    "Answer",
    "sim",
    "build_context",
    "context_vec",
    "rel_agg",
    "rel_greedy",
    "score_candidates",
    "rank_candidates",
    "disambiguate",
    "std_baseline",
]


@dataclass(frozen=True)
class Instance:
    id: str
    target_lemma: str
    context_lemmas: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id:
            raise ValueError("instance id must be non-empty")
        if not self.target_lemma:
            raise ValueError("target lemma must be non-empty")
        object.__setattr__(self, "context_lemmas", tuple(self.context_lemmas))


@dataclass(frozen=True)
class ContextTranslations:
    """One non-empty translation set per usable context token."""

    sets: tuple[tuple[Translation, ...], ...]

    def __post_init__(self):
        sets = tuple(tuple(s) for s in self.sets)
        if any(not s for s in sets):
            raise ValueError("context translation sets must be non-empty")
        object.__setattr__(self, "sets", sets)

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class ScoredCandidate:
    translation: Translation
    score: float | None
    method: Method


@dataclass(frozen=True)
class Answer:
    instance_id: str
    target_lemma: str
    ranked: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranked", tuple(self.ranked))
        if not self.ranked:
            raise ValueError(f"answer for {self.instance_id!r} is empty")
        if len(set(self.ranked)) != len(self.ranked):
            raise ValueError(f"answer for {self.instance_id!r} repeats a surface")


# scores are compared at this many decimals so that ties which are exact in
# real arithmetic fall through to the probability/surface rule
TIE_DECIMALS = 12


def _tie_key(score: float) -> float:
    return round(score, TIE_DECIMALS)


def _as_context(T) -> ContextTranslations:
    return T if isinstance(T, ContextTranslations) else ContextTranslations(tuple(T))


def sim(t: Translation, other: Translation, model: EmbeddingModel) -> float | None:
    """Max cosine over word pairs of ``t`` and ``other``; ``None`` if either has no usable word."""
    left = [v for v in (usable_vector(w, model) for w in t.words) if v is not None]
    right = [v for v in (usable_vector(w, model) for w in other.words) if v is not None]
    if not left or not right:
        return None
    return max(cosine(u, v) for u in left for v in right)


def build_context(inst: Instance, lex: Lexicon) -> ContextTranslations:
    """Translation sets of the instance's context tokens.

    Tokens without lexicon entries are dropped, as are occurrences of the
    target lemma itself. Repeated tokens give repeated sets.
    """
    sets = [lex[lemma] for lemma in inst.context_lemmas
            if lemma != inst.target_lemma and lemma in lex]
    return ContextTranslations(tuple(sets))


def _best_match(t: Translation, candidates: Sequence[Translation],
                model: EmbeddingModel) -> Translation | None:
    best, best_key = None, None
    for c in candidates:
        s = sim(t, c, model)
        if s is None:
            continue
        key = (-_tie_key(s), -c.probability, c.surface)
        if best_key is None or key < best_key:
            best, best_key = c, key
    return best


def context_vec(t: Translation, T, model: EmbeddingModel) -> np.ndarray:
    """Normalized sum, over context sets, of the member most similar to ``t``.

    Each chosen member adds its term vector scaled to unit length. Sets
    with no scorable member are skipped; if all are skipped the zero
    vector is returned.
    """
    T = _as_context(T)
    if not len(T):
        raise ValueError("context_vec needs at least one translation set")
    total = np.zeros(model.dimension, dtype=np.float64)
    for members in T:
        chosen = _best_match(t, members, model)
        if chosen is None:
            continue
        vec = term_vector(chosen, model)
        if vec is not None:
            # unit contributions: single-word vectors pass through raw while
            # multi-word ones come back normalized, so the raw sum would not
            # be invariant to rescaling the embeddings
            total = total + normalize(vec)
    return normalize(total)


def rel_agg(t: Translation, T, model: EmbeddingModel) -> float | None:
    T = _as_context(T)
    vt = term_vector(t, model)
    if vt is None or not len(T):
        return None
    ctx = context_vec(t, T, model)
    if not np.any(ctx):
        return None
    return cosine(vt, ctx) * t.probability


def rel_greedy(t: Translation, T, model: EmbeddingModel) -> float | None:
    best = None
    for members in _as_context(T):
        for other in members:
            s = sim(t, other, model)
            if s is not None and (best is None or s > best):
                best = s
    return None if best is None else best * t.probability


_SCORERS = {Method.RELAGG: rel_agg, Method.RELGREEDY: rel_greedy}


def score_candidates(candidates: Iterable[Translation], T, model: EmbeddingModel,
                     method: Method | str) -> list[ScoredCandidate]:
    method = Method(method)
    fn = _SCORERS[method]
    T = _as_context(T)
    return [ScoredCandidate(t, fn(t, T, model), method) for t in candidates]


def rank_candidates(scored: Sequence[ScoredCandidate]) -> list[Translation]:
    """Scored candidates by (score desc, P desc, surface asc), then unscored by (P desc, input order)."""
    ok = [c for c in scored if c.score is not None]
    ok.sort(key=lambda c: (-_tie_key(c.score), -c.translation.probability, c.translation.surface))
    rest = [(i, c) for i, c in enumerate(scored) if c.score is None]
    rest.sort(key=lambda ic: (-ic[1].translation.probability, ic[0]))
    return [c.translation for c in ok] + [c.translation for _, c in rest]


def disambiguate(inst: Instance, lex: Lexicon, model: EmbeddingModel,
                 method: Method | str = Method.RELAGG, mode: Mode | str = Mode.BEST) -> Answer:
    """Rank the target's candidates against its context and keep 1 (Best) or up to 5 (OOF).

    Raises ``KeyError`` if the target lemma has no lexicon entry.
    """
    method, mode = Method(method), Mode(mode)
    if inst.target_lemma not in lex:
        raise KeyError(f"lemma {inst.target_lemma!r} is not in the lexicon")
    T = build_context(inst, lex)
    if not len(T):
        return std_baseline(inst, lex, mode)
    scored = score_candidates(lex[inst.target_lemma], T, model, method)
    if all(c.score is None for c in scored):
        return std_baseline(inst, lex, mode)
    ranked = rank_candidates(scored)[:mode.max_answers]
    return Answer(inst.id, inst.target_lemma, tuple(t.surface for t in ranked))


def std_baseline(inst: Instance, lex: Lexicon, mode: Mode | str = Mode.BEST) -> Answer:
    """Most probable translation (Best) or five most probable (OOF), ignoring context."""
    mode = Mode(mode)
    top = most_common(lex, inst.target_lemma, mode.max_answers)
    return Answer(inst.id, inst.target_lemma, tuple(t.surface for t in top))
