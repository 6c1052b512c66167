import pytest

from lambda_pfaffian import _pykernels, kernels

from conftest import brute_cross_nest, dfact

try:
    from lambda_pfaffian import _kernels
except ImportError:
    _kernels = None

needs_compiled = pytest.mark.skipif(_kernels is None, reason="compiled kernel not built")


@pytest.mark.parametrize("k", range(0, 6))
def test_python_kernel_stats_match_definition(k):
    table = _pykernels.matching_table(k)
    assert len(table) == dfact(2 * k - 1)
    for flat, c, nest in table:
        pairs = list(zip(flat[::2], flat[1::2]))
        assert brute_cross_nest(pairs) == (c, nest)


@needs_compiled
@pytest.mark.parametrize("k", range(0, 7))
def test_backends_agree(k):
    assert _kernels.matching_table(k) == _pykernels.matching_table(k)
    assert _kernels.lambda_sign_histogram(k) == _pykernels.lambda_sign_histogram(k)


def test_histogram_is_signed_count():
    hist = _pykernels.lambda_sign_histogram(3)
    expected = {}
    for _, c, nest in _pykernels.matching_table(3):
        expected[c + nest] = expected.get(c + nest, 0) + (-1) ** c
    assert hist == {key: val for key, val in expected.items() if val}


def test_selected_backend_is_reported():
    assert kernels.BACKEND in ("compiled", "python")
    if _kernels is not None and kernels.BACKEND == "compiled":
        assert kernels.matching_table(3) == _kernels.matching_table(3)
