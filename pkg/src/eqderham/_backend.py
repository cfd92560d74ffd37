"""Kernel backend selection.

The compiled extension is preferred when present; ``EQDERHAM_PURE=1`` in
the environment forces the pure-Python kernel.  Both backends produce
bit-identical results, so the choice only affects speed.
"""

import os

if os.environ.get("EQDERHAM_PURE"):
    from . import _rref_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _rref as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _rref_py as _impl

        BACKEND = "python"

rref_primitive = _impl.rref_primitive
merge_odd = _impl.merge_odd


def backend_name() -> str:
    """Name of the active elimination kernel: 'compiled' or 'python'."""
    return BACKEND
