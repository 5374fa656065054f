import json
import re
from datetime import datetime
from fractions import Fraction
from pathlib import Path

from .errors import InputError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def timestamp_now():
    """
    Gibt den aktuellen Zeitstempel zurück (YYYYMMDD_HHMMSS).
    """
    return datetime.now().strftime("%Y%m%d_%H%M%S")


def load_json(file_path):
    """
    Lädt JSON-Daten aus einer Datei.
    """
    p = Path(file_path)
    if not p.is_file():
        raise InputError(f"File not found: {p}")
    try:
        with p.open("r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON in {p}: {e}") from e


def save_json(data, file_path):
    """
    Speichert JSON-Daten in eine Datei (deterministisch, UTF-8).
    """
    p = Path(file_path)
    with p.open("w", encoding="utf-8") as f:
        f.write(dump_json(data))


def dump_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def to_rational(value) -> Fraction:
    """Exact rational from int, Fraction or a string "int", "int/int", "0.25", "1e-3".

    Floats are rejected: a binary float is already rounded.
    """
    if isinstance(value, bool):
        raise InputError(f"Not a coordinate: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        m = _RATIONAL_RE.match(s)
        if m:
            den = int(m.group(2))
            if den == 0:
                raise InputError(f"Zero denominator in {value!r}")
            return Fraction(int(m.group(1)), den)
        try:
            # Fraction parses decimal and exponent strings exactly
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"Not an exact rational: {value!r}") from e
    raise InputError(f"Unsupported coordinate type {type(value).__name__}: {value!r}")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
