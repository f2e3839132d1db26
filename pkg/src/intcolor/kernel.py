"""Search-kernel selection: compiled extension when built, pure Python otherwise.

Set ``INTCOLOR_PURE=1`` to force the pure-Python kernel.
"""

from __future__ import annotations

import os

from intcolor import _kernel_py
from intcolor._kernel_py import (  # noqa: F401
    MAX_COLORS,
    MODE_CYCLIC,
    MODE_INTERVAL,
    STATUS_FOUND,
    STATUS_INFEASIBLE,
    STATUS_TIMEOUT,
)

python_search = _kernel_py.search
compiled_search = None
try:
    from intcolor._kernel import search as compiled_search
except ImportError:
    pass

if compiled_search is not None and os.environ.get("INTCOLOR_PURE", "") in ("", "0"):
    search = compiled_search
    BACKEND = "compiled"
else:
    search = python_search
    BACKEND = "python"
