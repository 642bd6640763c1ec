"""Kernel backend selection.

Imports the compiled bitset kernels when the extension module built,
otherwise falls back to the pure-Python implementation. Set
DOMSET_KERNEL=python or DOMSET_KERNEL=c to force a backend (forcing
"c" raises if the extension is missing).
"""

import os

_forced = os.environ.get("DOMSET_KERNEL", "").strip().lower()

if _forced in ("py", "python", "pure"):
    from domset._pykernels import BitsetKernel
    BACKEND = "python"
elif _forced in ("c", "compiled"):
    from domset._ckernels import BitsetKernel  # type: ignore[no-redef]
    BACKEND = "c"
elif _forced == "":
    try:
        from domset._ckernels import BitsetKernel  # type: ignore[no-redef]
        BACKEND = "c"
    except ImportError:
        from domset._pykernels import BitsetKernel
        BACKEND = "python"
else:
    raise ImportError(f"unknown DOMSET_KERNEL value: {_forced!r}")

__all__ = ["BitsetKernel", "BACKEND"]
