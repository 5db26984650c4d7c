"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module with identical semantics. Set ``KSPARITY_PURE_PYTHON=1`` to force the
fallback.
"""

import os

if os.environ.get("KSPARITY_PURE_PYTHON"):
    from . import _pykernels as impl
else:
    try:
        from . import _ckernels as impl
    except ImportError:  # extension not built
        from . import _pykernels as impl

BACKEND = "cython" if impl.__name__.endswith("_ckernels") else "python"

find_coloring = impl.find_coloring
critical_flags = impl.critical_flags
odd_span = impl.odd_span
weight_histogram = impl.weight_histogram
MAX_BASES = impl.MAX_BASES
MAX_RAYS = impl.MAX_RAYS


def threads() -> int:
    """Worker count: ``KS_THREADS`` if set, else the CPU count."""
    raw = os.environ.get("KS_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"KS_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1
