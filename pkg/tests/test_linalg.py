"""Rank kernels: GF(p) elimination (both backends) and rational Bareiss,
cross-checked against the integer diagonalization oracle."""

import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmtkit.fields import GF2, GF5, RATIONALS, FieldSpec
from cmtkit.linalg import (
    HAS_NUMBA,
    _rank_mod_p_numpy,
    active_backend,
    rank,
    rank_mod_p,
    rank_rational,
)
from cmtkit.snf import rank_from_diagonal, smith_diagonal

TRIANGLE_D1 = np.array([
    # columns: edges 12, 13, 23 of the triangle boundary, rows: vertices
    [-1, -1, 0],
    [1, 0, -1],
    [0, 1, 1],
], dtype=np.int64)


def test_zero_matrix():
    z = np.zeros((3, 4), dtype=np.int64)
    assert rank_mod_p(z, 2) == 0
    assert rank_rational(z) == 0


def test_identity():
    e = np.eye(3, dtype=np.int64)
    assert rank_mod_p(e, 2) == 3
    assert rank_rational(e) == 3


def test_triangle_boundary_rank_gf2():
    # hand elimination: the three edge columns sum to zero mod 2
    assert rank_mod_p(TRIANGLE_D1, 2) == 2
    assert rank_rational(TRIANGLE_D1) == 2


def test_empty_shapes():
    assert rank(np.zeros((0, 5), dtype=np.int64), GF2) == 0
    assert rank(np.zeros((5, 0), dtype=np.int64), RATIONALS) == 0


def test_characteristic_sensitivity():
    a = np.array([[2, 0], [0, 3]], dtype=np.int64)
    assert rank(a, GF2) == 1
    assert rank(a, FieldSpec.gf(3)) == 1
    assert rank(a, GF5) == 2
    assert rank(a, RATIONALS) == 2


def test_negative_entries():
    a = np.array([[-1, 1], [1, -1]], dtype=np.int64)
    assert rank_mod_p(a, 3) == 1
    assert rank_rational(a) == 1


matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=m, max_size=m)))


@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_snf_oracle(rows, p):
    a = np.array(rows, dtype=np.int64)
    expected = rank_from_diagonal(smith_diagonal(rows), FieldSpec.gf(p))
    assert rank_mod_p(a, p) == expected
    assert _rank_mod_p_numpy(a, p) == expected


@given(matrices)
def test_rational_rank_matches_snf_oracle(rows):
    a = np.array(rows, dtype=np.int64)
    expected = rank_from_diagonal(smith_diagonal(rows), RATIONALS)
    assert rank_rational(a) == expected


@pytest.mark.skipif(not HAS_NUMBA, reason="numba not importable")
@given(matrices, st.sampled_from([2, 3, 5]))
def test_numba_and_numpy_backends_agree(rows, p):
    from cmtkit.linalg import _rank_mod_p_numba
    a = np.array(rows, dtype=np.int64)
    assert _rank_mod_p_numba(a, p) == _rank_mod_p_numpy(a, p)


def _backend_in_subprocess(value: str) -> str:
    import os
    code = "import cmtkit.linalg as L; print(L.active_backend())"
    env = dict(os.environ, CMTKIT_BACKEND=value)
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True, text=True, check=True, env=env,
    )
    return out.stdout.strip()


def test_backend_env_flag_selects_numpy():
    assert _backend_in_subprocess("numpy") == "numpy"


@pytest.mark.skipif(not HAS_NUMBA, reason="numba not importable")
def test_backend_env_flag_selects_numba():
    assert _backend_in_subprocess("numba") == "numba"


def test_active_backend_value():
    assert active_backend() in ("numba", "numpy")
