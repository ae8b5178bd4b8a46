"""JIT switch for the integer kernels.

Set ``WITT_FORGE_JIT=0`` to force the pure-numpy fallback even when numba is
installed. The flag is read once at import time.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

JIT_ENABLED = numba is not None and os.environ.get("WITT_FORGE_JIT", "1").lower() not in ("0", "false", "no", "off")


def maybe_njit(func):
    """Compile ``func`` with numba when enabled; otherwise return it unchanged.

    The undecorated function stays reachable as ``.py_func`` in both cases so
    callers can run the fallback on object arrays (arbitrary-precision ints).
    """
    if JIT_ENABLED:
        compiled = numba.njit(cache=True)(func)
        return compiled
    func.py_func = func
    return func
