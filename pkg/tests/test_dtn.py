from dataclasses import replace

import numpy as np
import pytest

from helmsource import (MeasurementGrid, NearFieldData, SourceSpec, TransverseProfile,
                        dirichlet_data, fourier_coefficients, neumann_data_direct,
                        neumann_from_dirichlet)
from helmsource.dtn import default_truncation, dtn_symbol
from helmsource.specfun import hankel1, hankel1_derivative

PI = np.pi


def _angles(M):
    return 2 * PI * np.arange(1, M + 1) / M


class TestFourierCoefficients:
    def test_constant_trace(self):
        theta = _angles(64)
        cf = fourier_coefficients(np.full(64, 2.5 + 0.5j), theta, 10)
        assert abs(cf[0] - (2.5 + 0.5j)) < 1e-14
        for n in range(1, 11):
            assert abs(cf[n]) < 1e-14 and abs(cf[-n]) < 1e-14

    def test_pure_mode(self):
        theta = _angles(64)
        cf = fourier_coefficients(np.exp(3j * theta), theta, 10)
        assert abs(cf[3] - 1.0) < 1e-14
        others = [cf[n] for n in range(-10, 11) if n != 3]
        assert max(abs(c) for c in others) < 1e-14

    def test_cosine_splits(self):
        theta = _angles(100)
        cf = fourier_coefficients(np.cos(theta), theta, 5)
        assert abs(cf[1] - 0.5) < 1e-14
        assert abs(cf[-1] - 0.5) < 1e-14

    def test_aliasing_precondition(self):
        theta = _angles(16)
        with pytest.raises(ValueError):
            fourier_coefficients(np.ones(16), theta, 8)

    def test_conjugate_symmetry_exact_for_real_trace(self):
        theta = _angles(50)
        rng = np.random.default_rng(3)
        values = rng.normal(size=50)  # real trace
        cf = fourier_coefficients(values, theta, 20)
        for n in range(1, 21):
            assert cf[-n] == np.conj(cf[n])


class TestDtnSymbol:
    def test_even_in_order(self):
        orders = np.array([-5, -2, 0, 2, 5])
        sym = dtn_symbol(orders, 1.5, PI / 2)
        assert sym[0] == sym[4] and sym[1] == sym[3]

    def test_order_zero_value(self):
        k, R = 0.7, PI / 2
        expected = k * hankel1_derivative(0, k * R) / hankel1(0, k * R)
        assert abs(dtn_symbol(np.array([0]), k, R)[0] - expected) < 1e-14

    def test_large_order_behaves_like_minus_n_over_r(self):
        R = PI / 2
        sym = dtn_symbol(np.array([40]), 0.5, R)[0]
        assert sym.real == pytest.approx(-40 / R, rel=0.05)


class TestNeumannFromDirichlet:
    @pytest.mark.parametrize("k", [0.5, 1.5, 3.5])
    def test_centered_point_source_oracle(self, k):
        # trace of (i/4)H_0(k r) about the center: constant; exact Neumann known
        grid = MeasurementGrid(center=(0.0, 0.0), wavenumbers=(k,))
        u = np.full((grid.num_angles, 1), 0.25j * hankel1(0, k * grid.radius))
        out = neumann_from_dirichlet(NearFieldData(grid=grid, dirichlet=u))
        expected = 0.25j * k * hankel1_derivative(0, k * grid.radius)
        assert np.max(np.abs(out.neumann - expected)) <= 1e-10

    def test_zero_data(self):
        grid = MeasurementGrid(wavenumbers=(1.0, 2.0))
        data = NearFieldData(grid=grid, dirichlet=np.zeros((100, 2), dtype=complex))
        out = neumann_from_dirichlet(data)
        assert np.all(out.neumann == 0)

    def test_against_kernel_gradient_oracle(self, pipeline_data):
        data, source, g = pipeline_data("f1", ks=(0.5,))
        du_direct = neumann_data_direct(source, g, data.grid)
        scale = np.max(np.abs(du_direct))
        assert np.max(np.abs(data.neumann - du_direct)) <= 1e-6 * scale

    def test_undertruncated_map_fails_oracle(self, pipeline_data):
        # negative control: 2 modes cannot represent an off-center source
        data, source, g = pipeline_data("f1", ks=(0.5,))
        bad = neumann_from_dirichlet(replace(data, neumann=None), n_max=2)
        du_direct = neumann_data_direct(source, g, data.grid)
        scale = np.max(np.abs(du_direct))
        assert np.max(np.abs(bad.neumann - du_direct)) > 1e-3 * scale

    def test_truncation_stability_dense_grid(self):
        # on a 256-angle grid the tail beyond order 60 is far below 1e-8
        grid = MeasurementGrid(num_angles=256, wavenumbers=(0.5,))
        data = dirichlet_data(SourceSpec("f1"), TransverseProfile(), grid)
        lo = neumann_from_dirichlet(data, n_max=60).neumann
        hi = neumann_from_dirichlet(data, n_max=70).neumann
        assert np.max(np.abs(hi - lo)) <= 1e-8 * np.max(np.abs(hi))

    def test_default_truncation_rule(self):
        assert default_truncation(100) == 49
        assert default_truncation(256) == 60  # capped at the specfun order range

    def test_aliasing_rejected(self):
        grid = MeasurementGrid(wavenumbers=(1.0,))
        data = NearFieldData(grid=grid, dirichlet=np.ones((100, 1), dtype=complex))
        with pytest.raises(ValueError):
            neumann_from_dirichlet(data, n_max=50)

    def test_noise_floor_modes_are_zeroed(self):
        grid = MeasurementGrid(wavenumbers=(1.0,))
        theta = grid.angles
        trace = np.exp(2j * theta) + 1e-16 * np.exp(5j * theta)
        data = NearFieldData(grid=grid, dirichlet=trace[:, None].astype(complex))
        out = neumann_from_dirichlet(data, n_max=10)
        clean = np.exp(2j * theta) * dtn_symbol(np.array([2]), 1.0, grid.radius)[0]
        assert np.max(np.abs(out.neumann[:, 0] - clean)) < 1e-13

    def test_conjugate_pairing_preserved(self):
        # real trace in, coefficient symmetry in: the two mode amplitudes of the
        # output stay an exact conjugate pair scaled by the (shared) symbol
        grid = MeasurementGrid(wavenumbers=(1.3,))
        theta = grid.angles
        trace = np.cos(3 * theta) + 0.2 * np.sin(7 * theta)
        cf = fourier_coefficients(trace, theta, 10, k=1.3)
        sym = dtn_symbol(np.arange(-10, 11), 1.3, grid.radius)
        out_modes = sym * cf.coeffs
        for n in range(1, 11):
            assert out_modes[10 - n] == sym[10 + n] * np.conj(cf[n])
