"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``KANDINSKY_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("KANDINSKY_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as backend
else:
    try:
        from . import _ckernels as backend
    except ImportError:
        from . import _pykernels as backend

BACKEND = "cython" if backend.__name__.endswith("_ckernels") else "python"

CIRCLE = 0
SQUARE = 1
TRIANGLE = 2

vertices = backend.vertices
extent = backend.extent
signed_distance = backend.signed_distance
clearance = backend.clearance
min_clearance = backend.min_clearance
contour_distance = backend.contour_distance
contour_rms = backend.contour_rms
grid_search = backend.grid_search
