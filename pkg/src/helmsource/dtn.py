"""Dirichlet-to-Neumann map on the measurement circle, diagonal in Fourier modes.

A radiating field outside the source support expands on the circle of
radius R as a Hankel series, so its normal derivative follows from the
Dirichlet trace mode-by-mode:

    d_nu u(theta) = sum_n  k * H_n^(1)'(kR)/H_n^(1)(kR) * u_n * e^{i n theta},
    u_n = (1/M) sum_m u(theta_m) e^{-i n theta_m},

the coefficient rule being the trapezoid (equal-weight) discretization of
the defining integral, exact for band-limited traces on the equispaced
angle grid. The symbol is even in n (H_{-n} = (-1)^n H_n cancels), so only
non-negative orders are evaluated; coefficient rows for negative n are the
complex conjugates of the positive rows, which keeps the conjugate pairing
of a real trace exact in floating point.

Truncation: the series is infinite; the default order is the anti-aliasing
limit M/2 - 1 (capped at the special-function range). Smaller truncations
are dangerous downstream: reconstruction modes pair the Neumann trace
against test functions of size e^{|s| R}, so dropping Neumann modes that
are individually tiny can still wreck high reconstruction orders.
"""

import warnings
from dataclasses import dataclass, replace

import numpy as np

from .forward import NearFieldData
from .specfun import MAX_ORDER, hankel1

RELATIVE_MODE_FLOOR = 1e-14  # coefficients below this (relative) are noise floor


@dataclass(frozen=True)
class BoundaryFourierCoeffs:
    """Fourier coefficients u_n, |n| <= n_max, of one boundary trace."""

    k: float
    n_max: int
    coeffs: np.ndarray  # length 2*n_max + 1, index n + n_max

    def __getitem__(self, n: int) -> complex:
        if abs(n) > self.n_max:
            raise IndexError(f"mode {n} beyond truncation {self.n_max}")
        return self.coeffs[n + self.n_max]


def fourier_coefficients(values, angles, n_max: int, k: float = 0.0) -> BoundaryFourierCoeffs:
    """Trapezoid-rule Fourier coefficients of samples on equispaced angles."""
    values = np.asarray(values)
    M = len(values)
    if n_max > M // 2 - 1:
        raise ValueError(f"n_max={n_max} aliases on {M} samples (limit {M // 2 - 1})")
    rows = np.exp(-1j * np.outer(np.arange(n_max + 1), angles))
    pos = rows @ values / M
    neg = np.conj(rows[1:]) @ values / M
    coeffs = np.concatenate([neg[::-1], pos])
    return BoundaryFourierCoeffs(k=k, n_max=n_max, coeffs=coeffs)


def dtn_symbol(orders, k: float, radius: float):
    """k H_n'(kR)/H_n(kR) for the given orders; even in n by reflection."""
    orders = np.abs(np.asarray(orders, dtype=int))
    x = k * radius
    table = np.array([hankel1(n, x) for n in range(-1, int(orders.max()) + 1)])
    # table[n + 1] = H_n(x); the n = 0 row uses H_{-1} = -H_1
    return k * (table[orders] / table[orders + 1] - orders / x)


def default_truncation(num_angles: int) -> int:
    return min(num_angles // 2 - 1, MAX_ORDER)


def neumann_from_dirichlet(data: NearFieldData, n_max: int = None) -> NearFieldData:
    """Attach Neumann data computed from the Dirichlet data via the DtN series.

    Modes whose coefficient magnitude is below 1e-14 of the largest one are
    zeroed (pure noise floor, amplified by the O(n/R) symbol). A mode whose
    symbol fails to evaluate finitely is dropped with a warning.
    """
    u = data.dirichlet
    grid = data.grid
    if n_max is None:
        n_max = default_truncation(grid.num_angles)
    if n_max > grid.num_angles // 2 - 1:
        raise ValueError(f"n_max={n_max} aliases on {grid.num_angles} angles")
    theta = grid.angles
    orders = np.arange(-n_max, n_max + 1)
    synth = np.exp(1j * np.outer(theta, orders))
    du = np.empty_like(u)
    for j, k in enumerate(grid.wavenumbers):
        cf = fourier_coefficients(u[:, j], theta, n_max, k=k)
        coeffs = cf.coeffs.copy()
        floor = RELATIVE_MODE_FLOOR * np.max(np.abs(coeffs))
        coeffs[np.abs(coeffs) < floor] = 0.0
        symbol = dtn_symbol(orders, k, grid.radius)
        bad = ~np.isfinite(symbol)
        if np.any(bad):
            warnings.warn(f"dropping {bad.sum()} non-finite DtN modes at k={k:g}")
            symbol = np.where(bad, 0.0, symbol)
        du[:, j] = synth @ (symbol * coeffs)
    return replace(data, neumann=du)
