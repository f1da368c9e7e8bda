"""Unsupervised cross-lingual word sense disambiguation with word embeddings.

Translation candidates of an ambiguous source word are scored against the
target-language translations of its context (``relagg`` and ``relgreedy``),
and system answers are evaluated with the Best and Out-Of-Five F-measure.
"""

from clwsd.config import Method, Mode, RunConfig
from clwsd.embeddings import (
    EmbeddingModel,
    cosine,
    load_embeddings,
    normalize,
    term_vector,
    write_embeddings,
)
from clwsd.errors import FormatError, ScoringError
from clwsd.lexicon import Lexicon, Translation, load_lexicon, most_common, translations, write_lexicon
from clwsd.disambiguator import (
    Answer,
    Instance,
    ScoredCandidate,
    build_context,
    context_vec,
    disambiguate,
    rel_agg,
    rel_greedy,
    score_candidates,
    sim,
    std_baseline,
)
from clwsd.benchmark import (
    GoldItem,
    load_answers,
    load_dataset,
    load_gold,
    write_answers,
    write_dataset,
    write_gold,
)
from clwsd.scoring import EvalReport, LemmaScore, report_render, score

__version__ = "0.1.0"
