"""Elimination kernels, compiled when available.

The compiled extension is used unless it failed to build or the environment
variable ``LCFHOMOLOGY_PURE_PYTHON`` is set to a non-empty value.
"""
import os

from . import _pykernels

BACKEND = "python"
if not os.environ.get("LCFHOMOLOGY_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

rank_mod_p = _impl.rank_mod_p
rank_rational = _impl.rank_rational
smith_diagonal = _impl.smith_diagonal
