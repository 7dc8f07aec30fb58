"""Bessel functions J_n, Y_n and first-kind Hankel functions H_n^(1).

Every kernel in this package (fundamental solution, Dirichlet-to-Neumann
symbol) reduces to these four evaluations. Values are delegated to
scipy.special, which is well below the 1e-12 relative-error budget on the
supported range; this layer adds the domain/range validation and the
negative-order reflection identities

    J_{-n} = (-1)^n J_n,    Y_{-n} = (-1)^n Y_n,

implemented exactly (sign flip of the non-negative-order value).

Supported range: |n| <= 60, 0 <= x <= 200. Inputs outside the range are
rejected rather than evaluated inaccurately; the Dirichlet-to-Neumann
ratios downstream amplify relative error by O(n/x), so silent degradation
here would be invisible until reconstructions go wrong.
"""

import numpy as np
from scipy import special

MAX_ORDER = 60
MAX_ARGUMENT = 200.0


def _check_order(n):
    n = int(n)
    if abs(n) > MAX_ORDER:
        raise ValueError(f"order |n|={abs(n)} outside supported range n <= {MAX_ORDER}")
    return n


def _check_argument(x, allow_zero):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("argument must be finite")
    if np.any(x > MAX_ARGUMENT):
        raise ValueError(f"argument exceeds supported range x <= {MAX_ARGUMENT}")
    if allow_zero:
        if np.any(x < 0):
            raise ValueError("argument must be >= 0")
    elif np.any(x <= 0):
        raise ValueError("argument must be strictly positive")
    return x


def _reflect(n, values):
    # n may be negative; parity sign makes the reflection identity exact.
    if n >= 0 or n % 2 == 0:
        return values
    return -values


def _jn(n, x):
    # orders 0/1 dominate the volume-potential kernels; the fixed-order
    # cephes routines are an order of magnitude faster than jv/yv
    if n == 0:
        return special.j0(x)
    if n == 1:
        return special.j1(x)
    return special.jv(n, x)


def _yn(n, x):
    if n == 0:
        return special.y0(x)
    if n == 1:
        return special.y1(x)
    return special.yv(n, x)


def bessel_j(n, x):
    """J_n(x) for integer n (negative orders by reflection), 0 <= x <= 200."""
    n = _check_order(n)
    x = _check_argument(x, allow_zero=True)
    return _reflect(n, _jn(abs(n), x))


def bessel_y(n, x):
    """Y_n(x) for integer n, 0 < x <= 200 (Y_n is singular at x = 0)."""
    n = _check_order(n)
    x = _check_argument(x, allow_zero=False)
    return _reflect(n, _yn(abs(n), x))


def hankel1(n, x):
    """H_n^(1)(x) = J_n(x) + i Y_n(x) for integer n, 0 < x <= 200.

    Built from the J and Y evaluations so the defining identity holds
    exactly, not just to round-off.
    """
    n = _check_order(n)
    x = _check_argument(x, allow_zero=False)
    return _reflect(n, _jn(abs(n), x) + 1j * _yn(abs(n), x))


def hankel1_derivative(n, x):
    """d/dx H_n^(1)(x), via H_n' = H_{n-1} - (n/x) H_n.

    For n = 0 the recurrence gives H_{-1} = -H_1, i.e. H_0' = -H_1.
    """
    n = _check_order(n)
    x = _check_argument(x, allow_zero=False)
    return hankel1(n - 1, x) - (n / x) * hankel1(n, x)
