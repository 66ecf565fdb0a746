"""Kernel selection: compiled extension when available, pure Python otherwise.

Set HURWITZREC_PURE=1 to force the pure-Python kernels.
"""

import os

from . import _pure

if os.environ.get("HURWITZREC_PURE") == "1":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speed as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

conv = _impl.conv
unit_inverse = _impl.unit_inverse
pair_sweep = _impl.pair_sweep
acc_pair = _impl.acc_pair
merge_desc = _pure.merge_desc
count_ways = _pure.count_ways
