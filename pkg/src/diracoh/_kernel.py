"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``DIRACOH_PURE=1`` to force the fallback (used by the benchmark and by
tests that compare the two implementations).
"""

from __future__ import annotations

import os

from . import _klpure

try:
    from . import _klcore  # type: ignore[attr-defined]

    HAVE_COMPILED = True
except ImportError:
    _klcore = None
    HAVE_COMPILED = False

_FORCE_PURE = bool(os.environ.get("DIRACOH_PURE"))

if HAVE_COMPILED and not _FORCE_PURE:
    kl_table = _klcore.kl_table
    BACKEND = "compiled"
else:
    kl_table = _klpure.kl_table
    BACKEND = "pure"

kl_table_pure = _klpure.kl_table
kl_table_compiled = _klcore.kl_table if HAVE_COMPILED else None


def backend_name() -> str:
    return BACKEND
