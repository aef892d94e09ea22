import random

import pytest
from hypothesis import given, settings, strategies as st

from toriented import _pykernels, kernels

try:
    from toriented import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@settings(max_examples=300, deadline=None)
@given(st.integers(1, 64), st.data())
def test_echelon_backends_agree(ncols, data):
    nrows = data.draw(st.integers(0, 64))
    rows = data.draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    py = _pykernels.echelon(rows, ncols)
    cy = _ckernels.echelon(rows, ncols)
    assert [list(x) for x in py] == [list(x) for x in cy]
    target = data.draw(st.integers(0, (1 << ncols) - 1))
    assert _pykernels.reduce_vector(*py[:3], target) == tuple(_ckernels.reduce_vector(*cy[:3], target))


@needs_ext
@pytest.mark.parametrize("n", range(1, 9))
def test_cayley_backends_agree(n):
    rng = random.Random(n)
    for _ in range(50):
        gens = [rng.randrange(1, 1 << n) for _ in range(rng.randrange(0, 6))]
        assert _pykernels.cayley_color(n, gens) == _ckernels.cayley_color(n, gens)


@needs_ext
def test_compiled_rejects_oversized():
    with pytest.raises(OverflowError):
        _ckernels.echelon([1] * 65, 8)


def test_echelon_independence_flags():
    prows, pcols, pcombos, indep = _pykernels.echelon([0b01, 0b10, 0b11, 0b100], 3)
    assert indep == [True, True, False, True]
    assert sorted(pcols) == [0, 1, 2]
