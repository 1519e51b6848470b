"""Search-core backend selection.

Prefers the compiled extension (``semigrundy._ckernels``) and falls back to
the pure-Python twin. Set SEMIGRUNDY_PURE_PYTHON=1 to force the fallback.
Calls outside the compiled backend's size limits are routed to the pure
implementation transparently.
"""

from __future__ import annotations

import os

from semigrundy import _kernels as _pure

if os.environ.get("SEMIGRUNDY_PURE_PYTHON"):
    _impl = _pure
else:
    try:
        from semigrundy import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

BACKEND_NAME: str = _impl.BACKEND_NAME

# Predicate ids are defined once, in the pure module.
PRED_SEMIKERNEL_NOT_SEMIGRUNDY = _pure.PRED_SEMIKERNEL_NOT_SEMIGRUNDY
PRED_SEMIGRUNDY_NOT_GRUNDY = _pure.PRED_SEMIGRUNDY_NOT_GRUNDY
PRED_SEMIGRUNDY_NOT_KERNEL = _pure.PRED_SEMIGRUNDY_NOT_KERNEL
PRED_SEMIGRUNDY_NOT_HEREDITARY = _pure.PRED_SEMIGRUNDY_NOT_HEREDITARY
PRED_GRUNDY_GAP_AT_LEAST = _pure.PRED_GRUNDY_GAP_AT_LEAST
PRED_CX_HEREDITARY_SK_KERNEL = _pure.PRED_CX_HEREDITARY_SK_KERNEL
PRED_CX_GRUNDY_ZERO_KERNEL = _pure.PRED_CX_GRUNDY_ZERO_KERNEL
PRED_CX_KP_GRUNDY = _pure.PRED_CX_KP_GRUNDY
PRED_CX_SG_SK = _pure.PRED_CX_SG_SK
PRED_CX_HEREDITARY_SK_SG = _pure.PRED_CX_HEREDITARY_SK_SG

mask_bit_count = _pure.mask_bit_count
decode_mask = _pure.decode_mask
encode_rows = _pure.encode_rows


def _pick(n: int):
    return _impl if n <= _impl.MAX_N else _pure


def kernel_search(n, rows):
    return _pick(n).kernel_search(n, rows)


def semi_kernel_search(n, rows):
    return _pick(n).semi_kernel_search(n, rows)


def has_semi_grundy(n, rows):
    return _pick(n).has_semi_grundy(n, rows)


def semi_grundy_memo(n, rows):
    return _pick(n).semi_grundy_memo(n, rows)


def kernel_perfect(n, rows):
    return _pick(n).kernel_perfect(n, rows)


def hereditary_semi_kernel(n, rows):
    return _pick(n).hereditary_semi_kernel(n, rows)


def grundy_search(n, rows):
    return _pick(n).grundy_search(n, rows)


def grundy_enumerate(n, rows):
    return _pick(n).grundy_enumerate(n, rows)


def grundy_extrema(n, rows):
    return _pick(n).grundy_extrema(n, rows)


def has_grundy(n, rows):
    return _pick(n).has_grundy(n, rows)


def semi_grundy_search(n, rows):
    return _pick(n).semi_grundy_search(n, rows)


def is_canonical_mask(n, mask, include_loops):
    return _impl.is_canonical_mask(n, mask, include_loops)


def scan_digraphs(n, lo, hi, include_loops, iso, pred, param):
    return _impl.scan_digraphs(n, lo, hi, include_loops, iso, pred, param)
