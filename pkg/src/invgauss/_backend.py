"""Pick the numerical core at import time.

The compiled extension ``invgauss._core`` shadows ``_core.py`` when it has
been built.  Setting ``INVGAUSS_PURE_PYTHON=1`` forces the interpreted
source even when the extension is present.
"""
from __future__ import annotations

import functools
import importlib
import importlib.util
import os
import pathlib
from types import ModuleType

PURE_ENV = "INVGAUSS_PURE_PYTHON"


@functools.cache
def load_pure() -> ModuleType:
    """Execute ``_core.py`` as plain Python, bypassing any compiled build."""
    path = pathlib.Path(__file__).with_name("_core.py")
    spec = importlib.util.spec_from_file_location("invgauss._core_py", path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def load_compiled() -> ModuleType:
    """Return the compiled core; raise ImportError when it is not built."""
    module = importlib.import_module("invgauss._core")
    if not module.COMPILED:
        raise ImportError("invgauss._core extension is not built")
    return module


def _select() -> ModuleType:
    if os.environ.get(PURE_ENV, "") not in ("", "0"):
        return load_pure()
    return importlib.import_module("invgauss._core")


core = _select()
BACKEND = "compiled" if core.COMPILED else "python"
