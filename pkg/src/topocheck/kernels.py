"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the
pure-Python module. Set ``TOPOCHECK_PURE=1`` to force the fallback.
"""

import os

from . import _kernels

if os.environ.get("TOPOCHECK_PURE"):
    _impl = _kernels
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _kernels

BACKEND = "cython" if _impl is not _kernels else "python"

closure_table = _impl.closure_table
interior_table = _impl.interior_table
subset_union = _impl.subset_union
superset_meet = _impl.superset_meet
all_subsets = _impl.all_subsets
enumerate_preorders = _impl.enumerate_preorders
opens_from_basis = _impl.opens_from_basis

__all__ = [
    "BACKEND",
    "closure_table",
    "interior_table",
    "subset_union",
    "superset_meet",
    "all_subsets",
    "enumerate_preorders",
    "opens_from_basis",
]
