"""Select the polynomial kernel backend at import time.

``UAWKIT_BACKEND=python`` forces the pure-Python kernels; ``compiled``
requires the Cython extension; the default uses the extension when it was
built and falls back silently otherwise.
"""

import os

_choice = os.environ.get("UAWKIT_BACKEND", "auto").lower()

if _choice == "python":
    from . import _kernels_py as _impl
elif _choice == "compiled":
    from . import _kernels_c as _impl
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
ONE = _impl.ONE
ZERO = _impl.ZERO
qpow = _impl.qpow
p_add = _impl.p_add
p_sub = _impl.p_sub
p_neg = _impl.p_neg
p_mul = _impl.p_mul
p_scale = _impl.p_scale
p_shift = _impl.p_shift
p_content = _impl.p_content
p_divexact = _impl.p_divexact
p_gcd = _impl.p_gcd
rq_canon = _impl.rq_canon
rq_add = _impl.rq_add
rq_sub = _impl.rq_sub
rq_mul = _impl.rq_mul
rq_inv = _impl.rq_inv
rq_div = _impl.rq_div
rq_shift = _impl.rq_shift
