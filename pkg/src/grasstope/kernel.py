"""Select the family-scan backend: compiled extension if built, else numpy.

Set GRASSTOPE_BACKEND=python or =compiled to force a choice; forcing the
compiled backend raises if the extension is missing.
"""

from __future__ import annotations

import os

_forced = os.environ.get("GRASSTOPE_BACKEND")
if _forced == "python":
    from . import _kernel_py as _impl

    BACKEND = "python"
elif _forced == "compiled":
    from . import _kernel as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _forced:
    raise ImportError(f"unknown GRASSTOPE_BACKEND {_forced!r}; use 'python' or 'compiled'")
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as _impl

        BACKEND = "python"

scan_families = _impl.scan_families
check_family = _impl.check_family
