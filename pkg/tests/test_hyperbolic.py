import mpmath as mp
import numpy as np
import pytest

from energypile import _hyperbolic as hyp

CASES = [
    ("sinh_over_cosh", mp.sinh, mp.cosh),
    ("cosh_over_cosh", mp.cosh, mp.cosh),
    ("sinh_over_sinh", mp.sinh, mp.sinh),
    ("cosh_over_sinh", mp.cosh, mp.sinh),
]


@pytest.mark.parametrize("name,f,g", CASES, ids=[c[0] for c in CASES])
@pytest.mark.parametrize("b", [1e-6, 0.5, 1.2436, 29.9, 30.1, 120.0, 699.0])
def test_ratio_matches_high_precision(name, f, g, b):
    a = np.linspace(-b, b, 41) if name.startswith("sinh_over_cosh") else np.linspace(0.0, b, 41)
    got = getattr(hyp, name)(a, b)
    with mp.workdps(50):
        want = np.array([float(f(mp.mpf(ai)) / g(mp.mpf(b))) for ai in a])
    assert np.all(np.isfinite(got))
    np.testing.assert_allclose(got, want, rtol=1e-12, atol=1e-300)


def test_no_overflow_where_numpy_would():
    with np.errstate(over="raise"):
        assert hyp.cosh_over_cosh(np.array([699.0]), 700.0)[0] == pytest.approx(np.exp(-1.0), rel=1e-12)
