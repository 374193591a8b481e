"""Backend selection for the hot kernels.

The compiled extension is used when it imported cleanly; otherwise the numpy
implementation takes over. Both modules stay importable so tests and the
benchmark can compare them directly.
"""

from types import ModuleType

from . import _kernels_py as python

compiled: ModuleType | None
try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

backend: ModuleType = compiled if compiled is not None else python
BACKEND = "compiled" if compiled is not None else "python"

pl_membership = backend.pl_membership
scan_vertices = backend.scan_vertices

__all__ = ["BACKEND", "compiled", "python", "pl_membership", "scan_vertices"]
