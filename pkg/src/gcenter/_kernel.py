"""Kernel selection: compiled extension if available, pure Python otherwise.

Set GCENTER_PURE=1 to force the pure-Python kernel (used by the benchmark
to compare both implementations).
"""

import os

if os.environ.get("GCENTER_PURE") == "1":
    from gcenter import _pykernel as impl
else:
    try:
        from gcenter import _cykernel as impl  # type: ignore[attr-defined]
    except ImportError:
        from gcenter import _pykernel as impl

IS_COMPILED = impl.IS_COMPILED
normalize = impl.normalize
poly_add = impl.poly_add
poly_scale = impl.poly_scale
poly_mul_mod = impl.poly_mul_mod
poly_dot_mod = impl.poly_dot_mod
reduce_mod = impl.reduce_mod
mat_mul = impl.mat_mul
