"""UTF-8 line reading/writing shared by every file format."""

from __future__ import annotations

import io
import os
from pathlib import Path
from typing import IO, Iterator, Union

Source = Union[str, os.PathLike, IO[bytes], IO[str]]


def read_text(source: Source) -> tuple[str, str]:
    """Return ``(text, name)`` for a path or an open stream."""
    if isinstance(source, (str, os.PathLike)):
        path = Path(source)
        return path.read_bytes().decode("utf-8"), str(path)
    data = source.read()
    name = getattr(source, "name", None)
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data, name if isinstance(name, str) else "<stream>"


def iter_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield ``(lineno, line)``.

    A single trailing newline is ignored and ``\\r\\n`` is treated as
    ``\\n``. Nothing else is stripped: blank lines are yielded as ``""``.
    """
    if not text:
        return
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    for i, line in enumerate(lines, start=1):
        if line.endswith("\r"):
            line = line[:-1]
        yield i, line


def write_text(text: str, dest: Source) -> None:
    data = text.encode("utf-8")
    if isinstance(dest, (str, os.PathLike)):
        Path(dest).write_bytes(data)
    elif isinstance(dest, io.TextIOBase):
        dest.write(text)
    else:
        dest.write(data)
