"""Kernel backend selection.

The compiled extension is used when importable; set ``EPGRAPH_PURE_PYTHON=1``
to force the pure-Python kernels.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType


def load(name: str) -> ModuleType:
    """Load a backend by name: ``"cython"`` or ``"python"``."""
    if name == "cython":
        return importlib.import_module("epgraph._kernels")
    if name == "python":
        return importlib.import_module("epgraph._kernels_py")
    raise ValueError(f"unknown backend {name!r}")


def available() -> list[str]:
    names = ["python"]
    try:
        load("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


if os.environ.get("EPGRAPH_PURE_PYTHON", "").strip() not in ("", "0"):
    kernels = load("python")
else:
    try:
        kernels = load("cython")
    except ImportError:
        kernels = load("python")

BACKEND = kernels.NAME
