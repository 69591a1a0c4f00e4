"""Hot kernels: compiled extension when available, pure Python otherwise.

Set ``LGRAPHS_PURE=1`` to force the pure-Python kernels. ``BACKEND`` names
the active implementation; ``python_kernels`` is always importable so both
paths can be compared.
"""

from __future__ import annotations

import os

from . import _pykernels as python_kernels
from ._pykernels import BUDGET, EXHAUSTED, FOUND

try:
    if os.environ.get("LGRAPHS_PURE", "0") not in ("", "0"):
        raise ImportError("pure kernels requested")
    from . import _ckernels as compiled_kernels
except ImportError:
    compiled_kernels = None

_active = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "compiled" if compiled_kernels is not None else "python"

find_witness = _active.find_witness
search_first = _active.search_first
count_all = _active.count_all
sweep = _active.sweep

__all__ = [
    "BACKEND", "BUDGET", "EXHAUSTED", "FOUND",
    "compiled_kernels", "python_kernels",
    "find_witness", "search_first", "count_all", "sweep",
]
