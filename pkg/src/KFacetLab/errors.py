# errors.py
"""Exception hierarchy shared by every KFacetLab module."""
from __future__ import annotations

from typing import Iterable, Optional, Tuple


class KFacetLabError(Exception):
    """Base class; the CLI reports these as ``[ERROR] ...`` and exits with 2."""


class InputError(KFacetLabError, ValueError):
    """A precondition on shapes, ranges or file contents is violated."""


class DegeneracyError(InputError):
    """Input is not in the required general position.

    ``indices`` names one offending subset (point indices of the input set) when
    the failing check can point at one.
    """

    def __init__(self, msg: str, indices: Optional[Iterable[int]] = None):
        self.indices: Optional[Tuple[int, ...]] = tuple(indices) if indices is not None else None
        if self.indices is not None:
            msg = f"{msg} (indices {list(self.indices)})"
        super().__init__(msg)


class GenerationError(KFacetLabError, RuntimeError):
    """Random generation exhausted its retry budget or failed self-certification."""


class ConfigError(KFacetLabError, ValueError):
    """Invalid value in kfacetlab.ini, the environment or on the command line."""
