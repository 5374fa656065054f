import csv
import io
import json
from pathlib import Path
from typing import List, Sequence, Union

from .errors import InputError
from .geometry import PointSet
from .lifts import MonomialMap, map_from_dict
from .utils import dump_json, format_rational, load_json, save_json

PathLike = Union[str, Path]

# === Punktmengen speichern/laden ===


def point_set_to_dict(S: PointSet) -> dict:
    data = {"dim": S.dim, "points": [[format_rational(c) for c in x] for x in S.points]}
    if S.labels is not None:
        data["labels"] = list(S.labels)
    return data


def point_set_from_dict(data: dict) -> PointSet:
    """Liest {"dim": p, "points": [[...], ...], "labels": [...]} (Koordinaten als Strings oder ints)."""
    if not isinstance(data, dict) or "points" not in data:
        raise InputError("PointSet JSON needs a 'points' list")
    points = data["points"]
    if not isinstance(points, list) or not points:
        raise InputError("PointSet JSON 'points' must be a nonempty list")
    dim = data.get("dim")
    if dim is None:
        dim = len(points[0])
    for i, row in enumerate(points):
        if not isinstance(row, list):
            raise InputError(f"Point {i} is not a list")
        for c in row:
            if isinstance(c, float):
                raise InputError(f"Point {i}: float coordinate {c!r}; write it as a string, e.g. \"{c}\"")
    return PointSet.from_rows(points, int(dim), data.get("labels"))


def point_set_from_csv(text: str) -> PointSet:
    """Eine Zeile pro Punkt, Kopfzeile "x1,...,xp" (optional mit "label"-Spalte)."""
    reader = csv.reader(io.StringIO(text))
    rows = [r for r in reader if r and any(c.strip() for c in r)]
    if len(rows) < 2:
        raise InputError("CSV point file needs a header row and at least one point")
    header = [h.strip() for h in rows[0]]
    label_col = header.index("label") if "label" in header else None
    coord_cols = [i for i, h in enumerate(header) if i != label_col]
    labels = [r[label_col].strip() for r in rows[1:]] if label_col is not None else None
    body = []
    for n, r in enumerate(rows[1:], 2):
        if len(r) != len(header):
            raise InputError(f"CSV line {n} has {len(r)} fields, header has {len(header)}")
        body.append([r[i].strip() for i in coord_cols])
    return PointSet.from_rows(body, len(coord_cols), labels)


def point_set_to_csv(S: PointSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = [f"x{i + 1}" for i in range(S.dim)]
    if S.labels is not None:
        header.append("label")
    writer.writerow(header)
    for i, x in enumerate(S.points):
        row = [format_rational(c) for c in x]
        if S.labels is not None:
            row.append(S.labels[i])
        writer.writerow(row)
    return buf.getvalue()


def load_point_set(file_path: PathLike) -> PointSet:
    p = Path(file_path)
    if p.suffix.lower() == ".csv":
        if not p.is_file():
            raise InputError(f"File not found: {p}")
        return point_set_from_csv(p.read_text(encoding="utf-8"))
    return point_set_from_dict(load_json(p))


def save_point_set(S: PointSet, file_path: PathLike) -> None:
    p = Path(file_path)
    if p.suffix.lower() == ".csv":
        p.write_text(point_set_to_csv(S), encoding="utf-8")
    else:
        save_json(point_set_to_dict(S), p)


# === Abbildungen ===

def load_map(file_path: PathLike) -> MonomialMap:
    return map_from_dict(load_json(file_path))


def save_map(fmap: MonomialMap, file_path: PathLike) -> None:
    save_json(fmap.to_dict(), file_path)


# === Reports / Tabellen ===

def write_output(text: str, out: PathLike = None) -> None:
    """Schreibt nach ``out`` oder, ohne Ziel, auf stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def to_json_text(data) -> str:
    return dump_json(data)


def csv_table(header: Sequence[str], rows: List[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_rational(c) if not isinstance(c, (str, int)) else c for c in row])
    return buf.getvalue()


def parse_indices(text: str) -> List[int]:
    """ "0,3,4" -> [0, 3, 4] """
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as e:
        raise InputError(f"Bad index list {text!r}") from e


def report_json(reports) -> str:
    data = [r.to_dict() for r in reports]
    return json.dumps(data[0] if len(data) == 1 else data, indent=2, ensure_ascii=False) + "\n"
