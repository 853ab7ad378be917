"""See-saw kernel selection: compiled extension when available, numpy otherwise.

Set GRAC_BACKEND=py or GRAC_BACKEND=cy before import to force a choice;
forcing cy raises if the extension did not build.
"""

from __future__ import annotations

import os

_requested = os.environ.get("GRAC_BACKEND", "").strip().lower()

if _requested == "py":
    from . import _seesaw as _impl

    BACKEND = "py"
elif _requested in ("", "cy"):
    try:
        from . import _seesaw_cy as _impl

        BACKEND = "cy"
    except ImportError:
        if _requested == "cy":
            raise
        from . import _seesaw as _impl

        BACKEND = "py"
else:
    raise ValueError(f"GRAC_BACKEND must be 'py' or 'cy', got {_requested!r}")

run_seesaw = _impl.run_seesaw
