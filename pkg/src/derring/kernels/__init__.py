"""Hot elimination kernels with a compiled core and a pure fallback.

The oracle spends nearly all of its time inside two routines: gcd-based
row echelon over Z_m and tabulated-field Gaussian elimination.  Both
exist twice with identical semantics: a Cython extension (_celim) and a
numpy implementation (python_impl).  The extension is preferred when it
imported cleanly; set DERRING_KERNEL=python or DERRING_KERNEL=c to force
a backend.  Pivoting is first-nonzero in row-major order in both, so
the two backends produce byte-identical results.
"""

import os

_choice = os.environ.get("DERRING_KERNEL", "").strip().lower()

if _choice in ("python", "py"):
    from . import python_impl as _impl

    BACKEND = "python"
elif _choice in ("c", "celim", "compiled"):
    from . import _celim as _impl  # noqa: F401

    BACKEND = "c"
elif _choice:
    raise ImportError(f"unknown DERRING_KERNEL value {_choice!r}")
else:
    try:
        from . import _celim as _impl

        BACKEND = "c"
    except ImportError:
        from . import python_impl as _impl

        BACKEND = "python"

echelon_mod = _impl.echelon_mod
rref_field = _impl.rref_field


def backend_name() -> str:
    return BACKEND
