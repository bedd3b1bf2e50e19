"""Select the double-description kernel: compiled extension if built,
pure Python otherwise.  ALCOVE_KERNEL=python forces the fallback."""

from __future__ import annotations

import os

if os.environ.get("ALCOVE_KERNEL", "").lower() == "python":
    from . import _ddpure as _impl
else:
    try:
        from . import _ddcore as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _ddpure as _impl  # type: ignore[no-redef]

enumerate_vertices = _impl.enumerate_vertices
KERNEL_NAME = _impl.KERNEL_NAME


def available_kernels():
    """The kernels importable in this installation, for benchmarks/tests."""
    from . import _ddpure
    kernels = [("python", _ddpure.enumerate_vertices)]
    try:
        from . import _ddcore
        kernels.append(("compiled", _ddcore.enumerate_vertices))
    except ImportError:
        pass
    return kernels
