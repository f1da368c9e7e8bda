from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path


class Method(str, Enum):
    RELAGG = "relagg"
    RELGREEDY = "relgreedy"


class Mode(str, Enum):
    BEST = "best"
    OOF = "oof"

    @property
    def max_answers(self) -> int:
        return 1 if self is Mode.BEST else 5


def _default_threads() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class RunConfig:
    """Settings for one batch run of ``disambiguate`` or ``baseline``.

    ``embeddings_path`` is ``None`` for baseline runs, which never load
    vectors. Enum fields accept their string values.
    """

    lexicon_path: Path
    dataset_path: Path
    output_path: Path
    mode: Mode = Mode.BEST
    method: Method = Method.RELAGG
    embeddings_path: Path | None = None
    threads: int = field(default_factory=_default_threads)

    def __post_init__(self):
        # enums first so a typo is reported before any file is touched
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "mode", Mode(self.mode))
        if not isinstance(self.threads, int) or self.threads < 1:
            raise ValueError(f"threads must be a positive integer, got {self.threads!r}")
        for name in ("lexicon_path", "dataset_path", "output_path", "embeddings_path"):
            value = getattr(self, name)
            if value is None and name == "embeddings_path":
                continue
            if value is None or str(value) == "":
                raise ValueError(f"{name} must be a non-empty path")
            object.__setattr__(self, name, Path(value))
