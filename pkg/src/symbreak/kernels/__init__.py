"""Hot enumeration kernels with a numba path and a pure-numpy fallback.

The numba path is used when numba imports and ``SYMBREAK_NUMBA`` is not set
to ``0``.  Both paths enumerate in the same order and return identical
results; ``benchmarks/bench_kernels.py`` times one against the other.
"""

import os

from . import _numpy

try:
    if os.environ.get("SYMBREAK_NUMBA", "1") == "0":
        raise ImportError("disabled by SYMBREAK_NUMBA=0")
    from . import _numba
    HAS_NUMBA = True
except ImportError:
    _numba = None
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


def get(name, backend=None):
    """Kernel ``name`` from ``backend`` ('numba' or 'numpy'; default: active backend)."""
    backend = backend or BACKEND
    if backend == "numba":
        if _numba is None:
            raise RuntimeError("numba backend unavailable")
        return getattr(_numba, name)
    if backend == "numpy":
        return getattr(_numpy, name)
    raise ValueError(f"unknown kernel backend {backend!r}")


preserved_mask = _numpy.preserved_mask
