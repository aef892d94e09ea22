"""Kernel dispatch: compiled Cython kernels when importable, pure Python otherwise.

Set ``TORIENTED_PURE_PYTHON=1`` to force the fallback.  The compiled path only
accepts 64-bit words, so larger problems are routed to Python transparently.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("TORIENTED_PURE_PYTHON"):
        raise ImportError("pure Python forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_WORD = 64


def echelon(rows: list[int], ncols: int):
    if _ckernels is not None and len(rows) <= _WORD and ncols <= _WORD:
        return _ckernels.echelon(rows, ncols)
    return _pykernels.echelon(rows, ncols)


def reduce_vector(prows, pcols, pcombos, target: int):
    if (_ckernels is not None and len(prows) <= _WORD
            and target.bit_length() <= _WORD
            and all(r.bit_length() <= _WORD for r in prows)
            and all(c.bit_length() <= _WORD for c in pcombos)):
        return _ckernels.reduce_vector(prows, pcols, pcombos, target)
    return _pykernels.reduce_vector(prows, pcols, pcombos, target)


def cayley_color(n: int, gens: list[int]):
    if _ckernels is not None and n <= 30:
        return _ckernels.cayley_color(n, gens)
    return _pykernels.cayley_color(n, gens)
