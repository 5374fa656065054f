import configparser
import copy
import os
from pathlib import Path
from typing import Optional, Union

from .errors import ConfigError

CONFIG_FILE = Path(__file__).parent / "kfacetlab.ini"
SECTION = "kfacetlab"
ENV_WORKERS = "KFL_WORKERS"

# Accept a flexible set of boolean spellings (both EN/DE allowed for convenience).
TRUTHY = {"1", "true", "on", "yes", "y", "an", "ein", "aktiv"}
FALSY = {"0", "false", "off", "no", "n", "aus", ""}

DEFAULTS = {
    "workers": 1,
    "max_retries": 200,         # Rejection-Sampling: maximale Versuche
    "coord_bound_factor": 4,    # Koordinatenschranke = factor * n * d
    "log_dir": "",              # leer = aktuelles Arbeitsverzeichnis
    "keep_logs": False,
    "debug": False,
}

_INT_KEYS = {"workers": 1, "max_retries": 1, "coord_bound_factor": 1}
_BOOL_KEYS = {"keep_logs", "debug"}


def _to_bool(key: str, s) -> bool:
    if isinstance(s, bool):
        return s
    v = str(s).strip().lower()
    if v in TRUTHY:
        return True
    if v in FALSY:
        return False
    raise ConfigError(f"Invalid boolean for {key}: {s!r}")


def _to_int(key: str, s, minimum: int) -> int:
    try:
        val = int(str(s).strip())
    except ValueError as e:
        raise ConfigError(f"Invalid integer for {key}: {s!r}") from e
    if val < minimum:
        raise ConfigError(f"{key} must be >= {minimum}, got {val}")
    return val


def load_config(path: Optional[Union[str, Path]] = None, environ=None) -> dict:
    """
    Liest die INI-Datei, mergt DEFAULTS und wendet KFL_WORKERS an.
    Unbekannte Schlüssel werden ignoriert, ungültige Werte -> ConfigError.
    """
    cfg_path = Path(path) if path else CONFIG_FILE
    data = copy.deepcopy(DEFAULTS)

    parser = configparser.ConfigParser()
    if cfg_path.is_file():
        parser.read(cfg_path, encoding="utf-8")
    elif path:
        raise ConfigError(f"Config file not found: {cfg_path}")
    if parser.has_section(SECTION):
        for k, v in parser[SECTION].items():
            if k in data:
                data[k] = v

    env = os.environ if environ is None else environ
    if env.get(ENV_WORKERS):
        data["workers"] = env[ENV_WORKERS]

    return validate_config(data)


def validate_config(data: dict) -> dict:
    for k, minimum in _INT_KEYS.items():
        data[k] = _to_int(k, data[k], minimum)
    for k in _BOOL_KEYS:
        data[k] = _to_bool(k, data[k])
    data["log_dir"] = str(data.get("log_dir") or "").strip()
    return data


def default_coord_bound(config: dict, n: int, d: int) -> int:
    return config["coord_bound_factor"] * n * d
