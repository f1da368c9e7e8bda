"""Synthetic benchmarks with planted senses.

Target-language words are grouped into topics: each topic has a random
unit center, and its words are noisy copies of it. Every ambiguous noun
has one translation per sense, each tied to a different topic and placed
nearer its center than any context word is, with Zipf-skewed priors. An
instance draws a sense uniformly, fills its context with words of that
topic plus some off-topic filler, and takes the sense's translation as
gold. Because sense sampling ignores the prior,
the most-common baseline is right only about ``1/senses`` of the time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from clwsd.benchmark import GoldItem
from clwsd.disambiguator import Instance
from clwsd.embeddings import EmbeddingModel
from clwsd.lexicon import Lexicon, Translation


@dataclass(frozen=True)
class SyntheticConfig:
    n_nouns: int = 20
    cases_per_noun: int = 50
    n_topics: int = 16
    dim: int = 32
    context_per_topic: int = 25
    n_filler: int = 40
    min_senses: int = 2
    max_senses: int = 4
    topical_context: int = 4
    filler_context: int = 4
    noise: float = 1.0
    seed: int = 0


@dataclass(frozen=True)
class SyntheticBenchmark:
    model: EmbeddingModel
    lexicon: Lexicon
    instances: list[Instance]
    gold: dict[str, GoldItem]


def _unit(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def make_benchmark(cfg: SyntheticConfig = SyntheticConfig()) -> SyntheticBenchmark:
    rng = np.random.default_rng(cfg.seed)
    centers = [_unit(rng, cfg.dim) for _ in range(cfg.n_topics)]
    vectors: dict[str, np.ndarray] = {}
    entries: dict[str, list[Translation]] = {}

    def topical(name: str, topic: int, noise: float = cfg.noise) -> str:
        v = centers[topic] + noise * _unit(rng, cfg.dim)
        vectors[name] = v / np.linalg.norm(v)
        return name

    topic_lemmas: list[list[str]] = []
    for k in range(cfg.n_topics):
        lemmas = []
        for j in range(cfg.context_per_topic):
            lemma = f"c{k}x{j}"
            n_tr = int(rng.integers(1, 3))
            weights = rng.integers(1, 10, size=n_tr).astype(float)
            words = [topical(f"w{k}x{j}y{r}", k) for r in range(n_tr)]
            entries[lemma] = [Translation((w,), p) for w, p in zip(words, weights / weights.sum())]
            lemmas.append(lemma)
        topic_lemmas.append(lemmas)

    fillers = []
    for j in range(cfg.n_filler):
        lemma = f"g{j}"
        word = f"z{j}"
        vectors[word] = _unit(rng, cfg.dim)
        entries[lemma] = [Translation((word,), 1.0)]
        fillers.append(lemma)

    # sense translations sit closer to their topic center than context words do
    sense_noise = cfg.noise / 3
    instances: list[Instance] = []
    gold: dict[str, GoldItem] = {}
    for i in range(cfg.n_nouns):
        noun = f"n{i}"
        n_senses = int(rng.integers(cfg.min_senses, cfg.max_senses + 1))
        topics = rng.choice(cfg.n_topics, size=n_senses, replace=False)
        zipf = 1.0 / np.arange(1, n_senses + 1)
        probs = zipf / zipf.sum()
        senses = []
        for s, topic in enumerate(topics):
            if s % 3 == 2:
                words = (topical(f"t{i}s{s}a", int(topic), sense_noise),
                         topical(f"t{i}s{s}b", int(topic), sense_noise))
            else:
                words = (topical(f"t{i}s{s}", int(topic), sense_noise),)
            senses.append(Translation(words, float(probs[s])))
        entries[noun] = senses

        for c in range(cfg.cases_per_noun):
            s = int(rng.integers(n_senses))
            topic = int(topics[s])
            ctx = list(rng.choice(topic_lemmas[topic], size=cfg.topical_context, replace=False))
            ctx += list(rng.choice(fillers, size=cfg.filler_context, replace=False))
            rng.shuffle(ctx)
            iid = f"{noun}.n.{c + 1}"
            instances.append(Instance(iid, noun, tuple(str(x) for x in ctx)))
            gold[iid] = GoldItem(noun, ((senses[s].surface, 1),))

    model = EmbeddingModel(vectors, cfg.dim)
    return SyntheticBenchmark(model, Lexicon(entries), instances, gold)
