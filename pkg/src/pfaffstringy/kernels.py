"""Backend selection for the dense polynomial kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``PFAFFSTRINGY_KERNELS=python`` is set, the pure-Python
module is used.  ``set_backend`` switches at runtime (the benchmark uses it).
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

mul = divexact = IntPoly = None
BACKEND = ""


def available() -> list[str]:
    return ["c", "python"] if _ckernels is not None else ["python"]


def set_backend(name: str) -> None:
    global mul, divexact, IntPoly, BACKEND
    if name == "c":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        mod = _ckernels
    elif name == "python":
        mod = _pykernels
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    mul, divexact, IntPoly = mod.mul, mod.divexact, mod.IntPoly
    BACKEND = name


_wanted = os.environ.get("PFAFFSTRINGY_KERNELS", "").strip().lower()
set_backend(_wanted if _wanted in ("c", "python") and _wanted in available() else available()[0])
