"""Kernel backend selection.

The compiled extension is preferred; the numpy fallback is picked up
automatically when the extension was not built. ``use()`` switches at run
time, which the benchmark and the backend-agreement tests rely on.
"""
from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_AVAILABLE = {"python": _pykernels}
if _ckernels is not None:
    _AVAILABLE["compiled"] = _ckernels

kernels = _ckernels if _ckernels is not None else _pykernels
name = "compiled" if _ckernels is not None else "python"


def available():
    return sorted(_AVAILABLE)


def use(backend):
    """Select ``"compiled"`` or ``"python"`` kernels for subsequent calls."""
    global kernels, name
    try:
        kernels = _AVAILABLE[backend]
    except KeyError:
        raise ValueError(f"backend {backend!r} not available; have {available()}") from None
    name = backend
