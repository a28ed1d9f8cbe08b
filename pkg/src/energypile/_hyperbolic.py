"""Ratios of hyperbolic functions that stay finite for large arguments.

Each helper returns ``f(a) / g(b)`` for an array ``a`` and a scalar
``b > 0``.  Below ``DIRECT_LIMIT`` the numpy functions are used as-is;
above it the ratio is rewritten with a common factor ``exp(|a| - b)`` so
that nothing overflows before ``cosh`` would (around 710).
"""

import numpy as np

DIRECT_LIMIT = 30.0


def _scaled(a, b):
    a = np.asarray(a, dtype=float)
    m = np.abs(a)
    return a, m, np.exp(m - b)


def _direct(a, b):
    return np.max(np.abs(a), initial=0.0) <= DIRECT_LIMIT and b <= DIRECT_LIMIT


def sinh_over_cosh(a, b):
    if _direct(a, b):
        return np.sinh(a) / np.cosh(b)
    a, m, e = _scaled(a, b)
    return np.sign(a) * e * -np.expm1(-2.0 * m) / (1.0 + np.exp(-2.0 * b))


def cosh_over_cosh(a, b):
    if _direct(a, b):
        return np.cosh(a) / np.cosh(b)
    a, m, e = _scaled(a, b)
    return e * (1.0 + np.exp(-2.0 * m)) / (1.0 + np.exp(-2.0 * b))


def sinh_over_sinh(a, b):
    if _direct(a, b):
        return np.sinh(a) / np.sinh(b)
    a, m, e = _scaled(a, b)
    return np.sign(a) * e * np.expm1(-2.0 * m) / np.expm1(-2.0 * b)


def cosh_over_sinh(a, b):
    if _direct(a, b):
        return np.cosh(a) / np.sinh(b)
    a, m, e = _scaled(a, b)
    return e * (1.0 + np.exp(-2.0 * m)) / -np.expm1(-2.0 * b)
