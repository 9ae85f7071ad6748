"""Small shared helpers: float formatting and atomic file writes."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path


def format_double(x: float) -> str:
    """Shortest decimal string that round-trips to the same double.

    Integral doubles drop the trailing ``.0`` (``5.0`` prints as ``5``);
    ``float(format_double(x)) == x`` holds either way.
    """
    s = repr(float(x))
    if s.endswith(".0"):
        s = s[:-2]
    return s


def atomic_write_text(path: str | os.PathLike[str], text: str) -> None:
    """Write ``text`` to ``path`` atomically (temp file + rename).

    On any failure the destination is left untouched; no partial output is
    ever visible.
    """
    target = Path(path)
    fd, tmp_name = tempfile.mkstemp(
        dir=target.parent or Path("."), prefix=f".{target.name}.", suffix=".tmp"
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
