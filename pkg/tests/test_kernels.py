import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors

from lcfhomology import _pykernels, kernels
from lcfhomology.homology import smith_normal_form

try:
    from lcfhomology import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])
needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")

matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


def sympy_factors(rows):
    return [int(d) for d in invariant_factors(Matrix(rows), domain=ZZ) if d != 0]


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]) == ([1, 6], 2)
    assert smith_normal_form([[0, 0], [0, 0]]) == ([], 0)
    assert smith_normal_form(np.eye(4, dtype=int).tolist()) == ([1, 1, 1, 1], 4)
    assert smith_normal_form([]) == ([], 0)


def test_snf_handles_big_entries():
    big = 2 ** 70
    assert smith_normal_form([[big, 0], [0, 3 * big]]) == ([big, 3 * big], 2)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=150, deadline=None)
@given(rows=matrices)
def test_snf_against_sympy(impl, rows):
    assert impl.smith_diagonal([r[:] for r in rows]) == sympy_factors(rows)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=150, deadline=None)
@given(rows=matrices, p=st.sampled_from([2, 3, 5, 7]))
def test_field_ranks_against_sympy(impl, rows, p):
    M = Matrix(rows)
    assert impl.rank_rational([r[:] for r in rows]) == M.rank()
    expected = sum(1 for d in sympy_factors(rows) if d % p)
    assert impl.rank_mod_p(np.array(rows, dtype=np.int64), p) == expected


@needs_c
@settings(max_examples=100, deadline=None)
@given(rows=matrices, p=st.sampled_from([2, 3, 11]))
def test_backends_agree(rows, p):
    A = np.array(rows, dtype=np.int64)
    assert _ckernels.rank_mod_p(A, p) == _pykernels.rank_mod_p(A, p)
    assert _ckernels.rank_rational([r[:] for r in rows]) == _pykernels.rank_rational(rows)
    assert _ckernels.smith_diagonal([r[:] for r in rows]) == _pykernels.smith_diagonal(rows)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_empty_inputs(impl):
    assert impl.rank_mod_p(np.zeros((0, 3), dtype=np.int64), 2) == 0
    assert impl.rank_rational([]) == 0
    assert impl.smith_diagonal([[0, 0]]) == []


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, LCFHOMOLOGY_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import lcfhomology; print(lcfhomology.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
