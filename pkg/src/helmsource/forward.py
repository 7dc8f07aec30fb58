"""Synthetic near-field data on a measurement circle by volume-potential quadrature.

The radiated field of the separable source f(x1,k) g(x2) is the outgoing
solution of the inhomogeneous Helmholtz equation, i.e. the volume potential

    u(x, k) = - integral over the support rectangle of
               Phi(x - y; k) f(y1, k) g(y2) dy,
    Phi(z; k) = (i/4) H_0^(1)(k |z|),

the minus sign because (Laplacian + k^2) Phi(. - y) = -delta_y. Dirichlet
data are u sampled at M equispaced angles on the circle of radius R about
x0; the source support must sit strictly inside that circle, which keeps
the kernel smooth on the quadrature domain (no singular quadrature needed)
and makes tensor-product Gauss-Legendre on the support rectangle
geometrically convergent. The rectangle, not the whole disc, is the
integration domain: the source vanishes elsewhere.

Normal derivatives of the same potential (the kernel gradient
grad Phi(z) = -(ik/4) H_1^(1)(k|z|) z/|z| dotted with the outward normal)
are provided as an independent oracle for validating the series-based
Dirichlet-to-Neumann map.
"""

import json
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .exceptions import ConfigurationError
from .sources import SourceSpec, TransverseProfile, eval_f, eval_g
from .specfun import hankel1

DEFAULT_CENTER = (np.pi / 2, 0.0)
DEFAULT_RADIUS = np.pi / 2
DEFAULT_NUM_ANGLES = 100
DEFAULT_K_MAX = 4.0
DEFAULT_NUM_K = 40


@dataclass(frozen=True)
class MeasurementGrid:
    """Measurement circle (center, radius), M equispaced angles, wavenumber list.

    Angles follow theta_m = 2 pi m / M for m = 1..M. The canonical
    multi-frequency grid k_j = j K / J, j = 1..J (k = 0 excluded: the
    fundamental solution degenerates there) is built by :meth:`uniform`;
    explicit wavenumber lists are allowed for single-k experiments.
    """

    center: tuple = DEFAULT_CENTER
    radius: float = DEFAULT_RADIUS
    num_angles: int = DEFAULT_NUM_ANGLES
    wavenumbers: tuple = ()

    def __post_init__(self):
        if self.radius <= 0:
            raise ConfigurationError("radius must be positive")
        if self.num_angles < 4:
            raise ConfigurationError("need at least 4 measurement angles")
        if len(self.wavenumbers) == 0:
            raise ConfigurationError("wavenumber list is empty")
        if any(k <= 0 for k in self.wavenumbers):
            raise ConfigurationError("all wavenumbers must be positive")

    @classmethod
    def uniform(cls, k_max=DEFAULT_K_MAX, num_k=DEFAULT_NUM_K, center=DEFAULT_CENTER,
                radius=DEFAULT_RADIUS, num_angles=DEFAULT_NUM_ANGLES):
        ks = tuple(j * k_max / num_k for j in range(1, num_k + 1))
        return cls(center=center, radius=radius, num_angles=num_angles, wavenumbers=ks)

    @property
    def angles(self):
        m = np.arange(1, self.num_angles + 1)
        return 2.0 * np.pi * m / self.num_angles

    @property
    def points(self):
        t = self.angles
        return np.stack([self.center[0] + self.radius * np.cos(t),
                         self.center[1] + self.radius * np.sin(t)], axis=1)

    @property
    def normals(self):
        t = self.angles
        return np.stack([np.cos(t), np.sin(t)], axis=1)

    def support_clearance(self, x1_interval, x2_interval):
        """Distance margin R - max |corner - center| of the support rectangle."""
        corners = [(a, b) for a in x1_interval for b in x2_interval]
        far = max(np.hypot(a - self.center[0], b - self.center[1]) for a, b in corners)
        return self.radius - far

    def require_contains(self, x1_interval, x2_interval):
        clearance = self.support_clearance(x1_interval, x2_interval)
        if clearance <= 0:
            raise ConfigurationError(
                f"source support rectangle {x1_interval} x {x2_interval} is not strictly "
                f"inside the measurement circle (clearance {clearance:.3g})")
        return clearance


@dataclass(frozen=True)
class QuadratureConfig:
    """Tensor Gauss-Legendre node counts over the support rectangle."""

    nodes_x1: int = 192
    nodes_x2: int = 96

    def __post_init__(self):
        if self.nodes_x1 < 8 or self.nodes_x2 < 8:
            raise ConfigurationError("need at least 8 quadrature nodes per dimension")

    def doubled(self):
        return QuadratureConfig(2 * self.nodes_x1, 2 * self.nodes_x2)


@dataclass(frozen=True)
class NearFieldData:
    """Dirichlet (and optionally Neumann) samples, shape (M, J) complex."""

    grid: MeasurementGrid
    dirichlet: np.ndarray
    neumann: Optional[np.ndarray] = None

    def __post_init__(self):
        M, J = self.grid.num_angles, len(self.grid.wavenumbers)
        for name, arr in (("dirichlet", self.dirichlet), ("neumann", self.neumann)):
            if arr is None:
                continue
            if arr.shape != (M, J):
                raise ValueError(f"{name} data shape {arr.shape} does not match grid ({M}, {J})")
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"{name} data contains non-finite entries")

    def require_neumann(self):
        if self.neumann is None:
            raise ValueError("Neumann data not set; run the Dirichlet-to-Neumann map first")
        return self.neumann


def fundamental_solution(x, y, k: float):
    """Outgoing 2-D fundamental solution (i/4) H_0^(1)(k |x - y|)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r = np.linalg.norm(np.atleast_1d(x - y), axis=-1)
    if np.any(r == 0):
        raise ValueError("fundamental solution evaluated at coincident points")
    return 0.25j * hankel1(0, k * r)


def gauss_legendre_nodes(interval, n):
    x, w = np.polynomial.legendre.leggauss(n)
    a, b = interval
    return 0.5 * (b - a) * x + 0.5 * (a + b), 0.5 * (b - a) * w


def _quadrature_geometry(source, g, grid, quad):
    grid.require_contains(source.support, g.support)
    y1, w1 = gauss_legendre_nodes(source.support, quad.nodes_x1)
    y2, w2 = gauss_legendre_nodes(g.support, quad.nodes_x2)
    pts = grid.points
    dx = pts[:, 0][:, None, None] - y1[None, :, None]
    dy = pts[:, 1][:, None, None] - y2[None, None, :]
    dist = np.hypot(dx, dy).reshape(grid.num_angles, -1)
    gw = (eval_g(g, y2) * w2)
    return y1, w1, y2, gw, dist, dx, dy


def dirichlet_data(source: SourceSpec, g: TransverseProfile, grid: MeasurementGrid,
                   quad: QuadratureConfig = QuadratureConfig()) -> NearFieldData:
    """Sample the volume potential on the measurement circle for every wavenumber."""
    y1, w1, y2, gw, dist, _, _ = _quadrature_geometry(source, g, grid, quad)
    u = np.empty((grid.num_angles, len(grid.wavenumbers)), dtype=complex)
    for j, k in enumerate(grid.wavenumbers):
        weights = np.outer(w1 * eval_f(source, y1, k), gw).ravel()
        kernel = 0.25j * hankel1(0, k * dist)
        u[:, j] = -(kernel @ weights)
    return NearFieldData(grid=grid, dirichlet=u)


def neumann_data_direct(source: SourceSpec, g: TransverseProfile, grid: MeasurementGrid,
                        quad: QuadratureConfig = QuadratureConfig()) -> np.ndarray:
    """Normal derivative of the potential by kernel-gradient quadrature.

    Independent of the Dirichlet-to-Neumann series; used as its oracle.
    """
    y1, w1, y2, gw, dist, dx, dy = _quadrature_geometry(source, g, grid, quad)
    nu = grid.normals
    proj = (dx * nu[:, 0][:, None, None] + dy * nu[:, 1][:, None, None]).reshape(
        grid.num_angles, -1) / dist
    du = np.empty((grid.num_angles, len(grid.wavenumbers)), dtype=complex)
    for j, k in enumerate(grid.wavenumbers):
        weights = np.outer(w1 * eval_f(source, y1, k), gw).ravel()
        kernel = -0.25j * k * hankel1(1, k * dist) * proj
        du[:, j] = -(kernel @ weights)
    return du


def quadrature_refinement_delta(source, g, grid, quad=QuadratureConfig()):
    """Max relative change of any data entry when both node counts double."""
    coarse = dirichlet_data(source, g, grid, quad).dirichlet
    fine = dirichlet_data(source, g, grid, quad.doubled()).dirichlet
    scale = np.max(np.abs(fine))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(fine - coarse)) / scale)


def check_convergence(source, g, grid, quad=QuadratureConfig(), tol=1e-6):
    """Raise if doubling the quadrature changes the data by more than tol."""
    delta = quadrature_refinement_delta(source, g, grid, quad)
    if delta > tol:
        raise RuntimeError(f"quadrature not converged: refinement change {delta:.3g} > {tol:.3g}")
    return delta
