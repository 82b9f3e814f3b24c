"""Backend selection: the compiled ``_core`` when importable, numpy otherwise.

Set RELAYSIMP_PURE=1 to force the numpy kernels.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py
if not os.environ.get("RELAYSIMP_PURE"):
    try:
        from . import _core as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

OPTIMAL, ITER_LIMIT, DIRTY = _kernels_py.OPTIMAL, _kernels_py.ITER_LIMIT, _kernels_py.DIRTY

subset_max = _impl.subset_max
cut_matrix = _impl.cut_matrix
fd_min_cut = _impl.fd_min_cut
fixed_schedule_cut_values = _impl.fixed_schedule_cut_values
solve_schedule_lp = _impl.solve_schedule_lp


def backends():
    """Name -> module for every importable backend (used by tests and benchmarks)."""
    out = {"python": _kernels_py}
    try:
        from . import _core
        out["cython"] = _core
    except ImportError:
        pass
    return out
