# runlog.py
"""Plain-text run log: one file per CLI invocation, bordered messages.

All helpers take ``log_file=None`` and then do nothing, so library code can
always pass its optional log handle through.
"""
from __future__ import annotations

from pathlib import Path
from typing import Optional, TextIO

from .utils import timestamp_now

BORDER = "-" * 50


def _write_block(log_file: Optional[TextIO], line: str) -> None:
    if log_file is None:
        return
    log_file.write(f"{BORDER}\n")
    log_file.write(f"{line}\n")
    log_file.write(f"{BORDER}\n")
    log_file.flush()


def log_warning(log_file, msg):
    _write_block(log_file, f"!!! WARNING: {msg}")


def log_error(log_file, msg):
    _write_block(log_file, f"### ERROR: {msg}")


def log_info(log_file, msg):
    _write_block(log_file, f"--- INFO: {msg}")


def log_line(log_file, msg):
    """Unframed progress line, e.g. ``--- parallel_map() START ... ---``."""
    if log_file is None:
        return
    log_file.write(f"{msg}\n")
    log_file.flush()


def open_run_log(log_dir: str = "", prefix: str = "kfl") -> TextIO:
    base = Path(log_dir) if log_dir else Path.cwd()
    base.mkdir(parents=True, exist_ok=True)
    path = base / f"{prefix}_{timestamp_now()}.log"
    return path.open("a", encoding="utf-8")


def close_run_log(log_file: Optional[TextIO], keep: bool) -> Optional[Path]:
    """Schließt das Log; ohne ``keep`` wird die Datei gelöscht. Gibt den Pfad zurück, falls behalten."""
    if log_file is None:
        return None
    name = getattr(log_file, "name", None)
    try:
        log_file.close()
    except Exception:
        pass
    if not name or not isinstance(name, str):
        return None
    path = Path(name)
    if keep:
        return path
    try:
        path.unlink()
    except OSError as e:
        with open(name, "a", encoding="utf-8") as lf:
            lf.write(f"Failed to delete log file: {e}\n")
        return path
    return None
