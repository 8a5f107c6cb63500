"""Kernel backend selection: compiled extension if available, else pure Python.

Set ``ADLV_PURE=1`` in the environment (or pass ``backend="pure"`` to
:class:`adlv.weyl.EAWGroup`) to force the fallback.
"""

from __future__ import annotations

import os

from ._kernel_py import PyKernel
from ._tables import Tables

try:
    from . import _kernel as _compiled
except ImportError:
    _compiled = None


def compiled_available() -> bool:
    return _compiled is not None


def default_backend() -> str:
    if os.environ.get("ADLV_PURE") == "1" or _compiled is None:
        return "pure"
    return "compiled"


def make_kernel(tables: Tables, backend: str = "auto"):
    if backend == "auto":
        backend = default_backend()
    if backend == "pure":
        return PyKernel(tables)
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel requested but the extension is not built")
        arr = tables.as_arrays()
        return _compiled.Kernel(
            arr["pairing"],
            arr["uperm"],
            arr["uact"],
            arr["rmult"],
            arr["inv_tab"],
            arr["neg"],
            arr["word_letters"],
            arr["word_offsets"],
            arr["simple_pos"],
            int(tables.theta_pos),
        )
    raise ValueError(f"unknown backend {backend!r}; expected 'auto', 'pure' or 'compiled'")
