"""Independent oracles the tests check the library against.

Everything here is deliberately written from defining formulas (ascending
series, adaptive quadrature of defining integrals, finite differences) and
shares no evaluation path with the code under test.
"""

import math

import numpy as np
from scipy.integrate import quad

EULER_GAMMA = 0.57721566490153286061


def bessel_j_series(n, x, terms=80):
    """Ascending power series J_n(x) = sum_m (-1)^m (x/2)^{n+2m} / (m! (n+m)!)."""
    half = x / 2.0
    total = 0.0
    for m in range(terms):
        total += (-1) ** m * half ** (n + 2 * m) / (math.factorial(m) * math.factorial(n + m))
    return total


def _digamma_int(m):
    # psi(m + 1) = -gamma + H_m for integer m >= 0
    return -EULER_GAMMA + sum(1.0 / i for i in range(1, m + 1))


def bessel_y_series(n, x, terms=80):
    """Ascending series for Y_n (A&S 9.1.11), accurate for small/moderate x."""
    half = x / 2.0
    logpart = (2.0 / math.pi) * math.log(half) * bessel_j_series(n, x, terms)
    finite = sum(math.factorial(n - m - 1) / math.factorial(m) * half ** (2 * m - n)
                 for m in range(n))
    series = sum((-1) ** m * (_digamma_int(m) + _digamma_int(n + m))
                 / (math.factorial(m) * math.factorial(n + m)) * half ** (2 * m + n)
                 for m in range(terms))
    return logpart - finite / math.pi - series / math.pi


def central_difference(fn, x, h=1e-6):
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


def complex_quad(fn, a, b, **kw):
    kw.setdefault("epsabs", 1e-13)
    kw.setdefault("limit", 400)
    val, _ = quad(fn, a, b, complex_func=True, **kw)
    return val


def quad_exp_moment(g_fn, support, s):
    """integral of g(t) e^{s t} dt by adaptive quadrature (mode-integral oracle)."""
    a, b = support
    return complex_quad(lambda t: g_fn(t) * np.exp(s * t), a, b)


def sine_coefficient(f_fn, support, n):
    """(1/pi) integral of f(x) sin(n x) dx over the support (DL coefficient oracle)."""
    a, b = support
    return complex_quad(lambda x: f_fn(x) * np.sin(n * x), a, b) / np.pi


def fourier_coefficient(f_fn, support, n):
    """(1/pi) integral of f(x) e^{-2i n x} dx over the support (FT coefficient oracle)."""
    a, b = support
    return complex_quad(lambda x: f_fn(x) * np.exp(-2j * n * x), a, b) / np.pi
