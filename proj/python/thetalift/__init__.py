"""Theta lifts of level-1 Maass forms to hyperbolic space."""

import os as _os

from ._core import *  # noqa: F401,F403
from ._core import DATA_DIR as _BUILD_DATA_DIR

__all__ = [name for name in dir() if not name.startswith("_")]

_PACKAGE_DATA_DIR = _os.path.join(_os.path.dirname(__file__), "data")
DATA_DIR = _PACKAGE_DATA_DIR if _os.path.isdir(_PACKAGE_DATA_DIR) else _BUILD_DATA_DIR


def sample_form_path() -> str:
    """Path of the shipped sample Maass form."""
    return _os.path.join(DATA_DIR, "forms", "sample_even_r27.json")


def cli_path() -> str:
    """Path of the bundled command-line tool (installed wheels only)."""
    return _os.path.join(_os.path.dirname(__file__), "bin", "thetalift")
