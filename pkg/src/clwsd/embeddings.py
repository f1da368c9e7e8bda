"""Target-language word vectors and the vector arithmetic built on them.

Vectors are float64 numpy arrays. Word lookup is exact string matching:
no case folding and no Unicode normalization happen here.
"""

from __future__ import annotations

import math
import re
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from clwsd._textio import Source, iter_lines, read_text, write_text
from clwsd.errors import FormatError

__all__ = [
    "EmbeddingModel",
    "load_embeddings",
    "write_embeddings",
    "cosine",
    "normalize",
    "term_vector",
]

_HEADER = re.compile(r"(\d+) (\d+)")
_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_NONFINITE = {"nan", "+nan", "-nan", "inf", "+inf", "-inf", "infinity", "+infinity", "-infinity"}


class EmbeddingModel(Mapping[str, np.ndarray]):
    """Immutable map from word to a fixed-dimension float64 vector.

    Stored arrays are read-only. ``model.get(word)`` returns ``None`` for
    an absent word, which is distinct from a stored zero vector.
    """

    __slots__ = ("_dimension", "_vectors")

    def __init__(self, vectors: Mapping[str, Iterable[float]] | Iterable[tuple[str, Iterable[float]]],
                 dimension: int | None = None):
        items = vectors.items() if isinstance(vectors, Mapping) else vectors
        table: dict[str, np.ndarray] = {}
        for word, values in items:
            _check_word(word)
            if word in table:
                raise ValueError(f"duplicate word {word!r}")
            arr = np.array(values, dtype=np.float64)
            if arr.ndim != 1 or arr.size == 0:
                raise ValueError(f"vector for {word!r} must be a non-empty 1-D sequence")
            if dimension is None:
                dimension = arr.size
            if arr.size != dimension:
                raise ValueError(f"vector for {word!r} has {arr.size} components, expected {dimension}")
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"vector for {word!r} has non-finite components")
            arr.setflags(write=False)
            table[word] = arr
        if dimension is None or dimension < 1:
            raise ValueError("dimension must be a positive integer")
        self._dimension = dimension
        self._vectors = MappingProxyType(table)

    @property
    def dimension(self) -> int:
        return self._dimension

    def __getitem__(self, word: str) -> np.ndarray:
        return self._vectors[word]

    def __iter__(self) -> Iterator[str]:
        return iter(self._vectors)

    def __len__(self) -> int:
        return len(self._vectors)

    def __contains__(self, word: object) -> bool:
        return word in self._vectors

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingModel):
            return NotImplemented
        return (self._dimension == other._dimension
                and list(self._vectors) == list(other._vectors)
                and all(np.array_equal(v, other._vectors[w]) for w, v in self._vectors.items()))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"EmbeddingModel(size={len(self)}, dimension={self._dimension})"

    def scaled(self, factor: float) -> "EmbeddingModel":
        """Copy of the model with every vector multiplied by ``factor``."""
        return EmbeddingModel({w: v * factor for w, v in self._vectors.items()}, self._dimension)


def _check_word(word: str) -> None:
    if not isinstance(word, str) or not word:
        raise ValueError("words must be non-empty strings")
    if any(ch.isspace() for ch in word):
        raise ValueError(f"word {word!r} contains whitespace")


def _parse_component(token: str, lineno: int, name: str) -> float:
    if not _NUMBER.fullmatch(token):
        if token.lower() in _NONFINITE:
            raise FormatError(f"non-finite value {token!r}", lineno, name)
        raise FormatError(f"malformed number {token!r}", lineno, name)
    value = float(token)
    if not math.isfinite(value):
        raise FormatError(f"non-finite value {token!r}", lineno, name)
    return value


def load_embeddings(source: Source) -> EmbeddingModel:
    """Load vectors in the textual word2vec format.

    Line 1 is ``<count> <dim>``; each further line is ``<word> <v1> ... <vdim>``
    separated by single spaces. One trailing space per row is tolerated,
    as written by the reference C tool.
    """
    text, name = read_text(source)
    lines = iter_lines(text)
    first = next(lines, None)
    if first is None:
        raise FormatError("empty file, expected '<count> <dim>' header", 1, name)
    m = _HEADER.fullmatch(first[1])
    if m is None:
        raise FormatError(f"malformed header {first[1]!r}, expected '<count> <dim>'", 1, name)
    count, dim = int(m.group(1)), int(m.group(2))
    if dim < 1:
        raise FormatError("dimension must be at least 1", 1, name)

    vectors: dict[str, np.ndarray] = {}
    for lineno, line in lines:
        if line.endswith(" "):
            line = line[:-1]
        tokens = line.split(" ")
        word = tokens[0]
        if not word or any(t == "" for t in tokens):
            raise FormatError("malformed row, fields must be separated by single spaces", lineno, name)
        if any(ch.isspace() for ch in word):
            raise FormatError(f"word {word!r} contains whitespace", lineno, name)
        if len(tokens) - 1 != dim:
            raise FormatError(f"dimension mismatch: expected {dim} values, found {len(tokens) - 1}",
                              lineno, name)
        if word in vectors:
            raise FormatError(f"duplicate word {word!r}", lineno, name)
        vectors[word] = np.array([_parse_component(t, lineno, name) for t in tokens[1:]],
                                 dtype=np.float64)
        if len(vectors) > count:
            raise FormatError(f"more rows than the {count} declared in the header", lineno, name)
    if len(vectors) != count:
        raise FormatError(f"header declares {count} rows, found {len(vectors)}", None, name)
    return EmbeddingModel(vectors, dim)


def write_embeddings(model: EmbeddingModel, dest: Source) -> None:
    """Write ``model`` in the format read by :func:`load_embeddings`.

    Components use ``repr`` of the float, which reads back bit-exactly.
    """
    rows = [f"{len(model)} {model.dimension}"]
    for word, vec in model.items():
        rows.append(word + " " + " ".join(repr(float(x)) for x in vec))
    write_text("\n".join(rows) + "\n", dest)


def cosine(u: Sequence[float] | np.ndarray, v: Sequence[float] | np.ndarray) -> float:
    """Cosine of the angle between ``u`` and ``v``, clamped to [-1, 1].

    Raises ``ValueError`` on a dimension mismatch or a zero-norm input.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise ValueError("cosine is undefined for a zero-norm vector")
    c = float(np.dot(u, v)) / (nu * nv)
    return min(1.0, max(-1.0, c))


def normalize(v: Sequence[float] | np.ndarray) -> np.ndarray:
    """Scale ``v`` to unit Euclidean norm; the zero vector maps to itself."""
    v = np.asarray(v, dtype=np.float64)
    n = float(np.linalg.norm(v))
    if n == 0.0:
        return v.copy()
    return v / n


def usable_vector(word: str, model: EmbeddingModel) -> np.ndarray | None:
    """Vector of ``word`` if it is in the vocabulary with nonzero norm."""
    vec = model.get(word)
    if vec is None or not np.any(vec):
        return None
    return vec


def term_vector(term, model: EmbeddingModel) -> np.ndarray | None:
    """Single vector for a possibly multi-word term.

    ``term`` is a :class:`~clwsd.lexicon.Translation` or a sequence of
    words. A lone in-vocabulary word passes its vector through unchanged;
    several are averaged and the mean normalized. Out-of-vocabulary and
    zero vectors are dropped, and ``None`` comes back when nothing usable
    is left.
    """
    words = getattr(term, "words", term)
    # sorted so reordering the words cannot change the floating-point sum
    vecs = [v for v in (usable_vector(w, model) for w in sorted(words)) if v is not None]
    if not vecs:
        return None
    if len(vecs) == 1:
        return vecs[0]
    mean = normalize(np.mean(vecs, axis=0))
    if not np.any(mean):
        return None
    return mean
