"""Select the enumeration kernels: compiled extension when available,
pure-Python fallback otherwise.

Set SKEWCODES_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests comparing the two implementations).
"""

import os

from . import _kernels_py

if os.environ.get("SKEWCODES_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
    HAVE_COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        HAVE_COMPILED = True
    except ImportError:
        kernels = _kernels_py
        HAVE_COMPILED = False


def implementations():
    """All available kernel implementations, keyed by name."""
    impls = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        impls["compiled"] = _kernels
    except ImportError:
        pass
    return impls
