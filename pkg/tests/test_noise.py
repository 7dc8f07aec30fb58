import numpy as np
import pytest

from helmsource import MeasurementGrid, NearFieldData, NoiseConfig, add_noise
from helmsource.noise import entry_stream, noise_matrix


def _data(M=30, J=8, seed=11):
    rng = np.random.default_rng(seed)
    u = rng.normal(size=(M, J)) + 1j * rng.normal(size=(M, J))
    grid = MeasurementGrid(num_angles=M, wavenumbers=tuple(0.5 + 0.1 * j for j in range(J)))
    return NearFieldData(grid=grid, dirichlet=u)


def test_zero_delta_is_identity():
    data = _data()
    out = add_noise(data, NoiseConfig(delta=0.0, seed=5))
    assert out is data
    assert out.dirichlet.tobytes() == data.dirichlet.tobytes()


@pytest.mark.parametrize("delta", [0.005, 0.02, 0.3, 1.0])
@pytest.mark.parametrize("seed", [0, 1, 42])
def test_entrywise_perturbation_bound(delta, seed):
    data = _data()
    out = add_noise(data, NoiseConfig(delta=delta, seed=seed))
    assert np.all(np.abs(out.dirichlet - data.dirichlet) <= delta * np.abs(data.dirichlet) + 1e-300)


def test_fixed_seed_reproducible_and_seeds_differ():
    data = _data()
    a = add_noise(data, NoiseConfig(delta=0.02, seed=7))
    b = add_noise(data, NoiseConfig(delta=0.02, seed=7))
    c = add_noise(data, NoiseConfig(delta=0.02, seed=8))
    assert np.array_equal(a.dirichlet, b.dirichlet)
    assert not np.array_equal(a.dirichlet, c.dirichlet)


def test_neumann_invalidated():
    data = _data()
    data = NearFieldData(grid=data.grid, dirichlet=data.dirichlet,
                         neumann=np.zeros_like(data.dirichlet))
    out = add_noise(data, NoiseConfig(delta=0.1, seed=0))
    assert out.neumann is None


def test_counter_keyed_draws_are_order_independent():
    zeta = noise_matrix(123, (12, 9))
    # recompute every entry in scrambled order straight from the keyed stream
    rng = np.random.default_rng(0)
    cells = [(m, j) for m in range(12) for j in range(9)]
    rng.shuffle(cells)
    for m, j in cells:
        assert entry_stream(123, m, j).uniform(-1.0, 1.0) == zeta[m, j]


def test_zeta_statistics():
    zeta = noise_matrix(0, (100, 100))
    assert np.all(np.abs(zeta) <= 1.0)
    sigma = 1.0 / np.sqrt(3 * zeta.size)
    assert abs(zeta.mean()) <= 3 * sigma


def test_complex_variant():
    data = _data()
    out = add_noise(data, NoiseConfig(delta=0.05, seed=3, complex_noise=True))
    diff = out.dirichlet - data.dirichlet
    # both quadratures perturbed, each bounded by delta |u|
    assert np.all(np.abs(diff.real) <= 0.05 * np.abs(data.dirichlet))
    assert np.all(np.abs(diff.imag) <= 0.05 * np.abs(data.dirichlet))
    real_variant = add_noise(data, NoiseConfig(delta=0.05, seed=3))
    assert not np.array_equal(out.dirichlet, real_variant.dirichlet)


def test_invalid_config():
    with pytest.raises(ValueError):
        NoiseConfig(delta=-0.1)
    with pytest.raises(ValueError):
        NoiseConfig(delta=0.1, seed=-1)
