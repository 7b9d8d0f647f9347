"""Backend selection for the hot numeric kernels.

Two interchangeable implementations exist: a numba-compiled one
(``_numba``) and a pure numpy/scipy one (``_numpy``).  The active backend
is chosen once at import time from the ``NEXCOVER_BACKEND`` environment
variable: ``numba`` (default when numba is importable) or ``numpy``.

Both backends expose the same three functions with identical semantics:

- ``brandes_centrality(indptr, indices, n)``
- ``pdhg_block(indptr, indices, c, chat, x, y, xsum, ysum, tau, ssc, k)``
- ``greedy_extend(indptr, indices, cost, covered, selected)``

``benchmarks/backend_bench.py`` compares the two.
"""

import os
import warnings

_requested = os.environ.get("NEXCOVER_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise ValueError(
        f"NEXCOVER_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    from . import _numpy as _impl

    BACKEND = "numpy"
else:
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except ImportError as exc:  # pragma: no cover - depends on environment
        if _requested == "numba":
            raise RuntimeError(
                "NEXCOVER_BACKEND=numba but numba is not importable"
            ) from exc
        warnings.warn("numba unavailable, falling back to numpy kernels")
        from . import _numpy as _impl

        BACKEND = "numpy"

brandes_centrality = _impl.brandes_centrality
pdhg_block = _impl.pdhg_block
greedy_extend = _impl.greedy_extend
