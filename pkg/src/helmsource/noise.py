"""Reproducible multiplicative noise on the Dirichlet data.

Each entry of the (M, J) data matrix is perturbed as

    u_noisy[m, j] = u[m, j] + delta * zeta[m, j] * |u[m, j]|,

with zeta drawn i.i.d. uniform on [-1, 1]. The draw for entry (m, j) comes
from a Philox4x64 counter-based stream with key = (seed, 0) and counter =
(0, 0, m, j) (0-based indices), so the value depends only on (seed, m, j):
parallel and serial evaluation orders produce identical matrices, and the
stream is stable across platforms and numpy versions.

The perturbation is a real shift of size delta*zeta*|u| applied to the
complex datum, exactly as written above; an optional variant draws
independent real and imaginary shifts. Neumann data are invalidated by
noising - the pipeline recomputes them from the noisy Dirichlet trace
through the Dirichlet-to-Neumann map.
"""

from dataclasses import dataclass, replace

import numpy as np
from numpy.random import Generator, Philox

from .forward import NearFieldData


@dataclass(frozen=True)
class NoiseConfig:
    delta: float = 0.0
    seed: int = 0
    complex_noise: bool = False

    def __post_init__(self):
        if self.delta < 0:
            raise ValueError("noise level delta must be >= 0")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")


def entry_stream(seed: int, m: int, j: int) -> Generator:
    """The keyed generator for matrix entry (m, j); at most one 256-bit block is used."""
    counter = np.array([0, 0, m, j], dtype=np.uint64)
    return Generator(Philox(key=np.uint64(seed), counter=counter))


def noise_matrix(seed: int, shape, complex_noise: bool = False) -> np.ndarray:
    """zeta values for every entry, from independent keyed streams."""
    out = np.empty(shape, dtype=complex if complex_noise else float)
    for m in range(shape[0]):
        for j in range(shape[1]):
            gen = entry_stream(seed, m, j)
            if complex_noise:
                re, im = gen.uniform(-1.0, 1.0, size=2)
                out[m, j] = re + 1j * im
            else:
                out[m, j] = gen.uniform(-1.0, 1.0)
    return out


def add_noise(data: NearFieldData, cfg: NoiseConfig) -> NearFieldData:
    """Perturb the Dirichlet data; delta = 0 returns the input unchanged."""
    if cfg.delta == 0:
        return data
    zeta = noise_matrix(cfg.seed, data.dirichlet.shape, cfg.complex_noise)
    noisy = data.dirichlet + cfg.delta * zeta * np.abs(data.dirichlet)
    return replace(data, dirichlet=noisy, neumann=None)
