import numpy as np
import pytest

from helmsource import (ConfigurationError, SourceSpec, TransverseProfile, eval_f, eval_g,
                        g_mode_integral_dl, g_mode_integral_ft)
from helmsource.sources import weighted_exp_integral

from _oracles import quad_exp_moment

PI = np.pi


class TestCatalog:
    def test_f1_peak_value(self):
        assert eval_f(SourceSpec("f1"), PI / 2, 0.5) == 1.0

    def test_f1_outside_support(self):
        assert eval_f(SourceSpec("f1"), 0.1, 0.5) == 0.0

    def test_f2_quarter_pi(self):
        # cos(4 * 0.5 * pi/4) = cos(pi/2)
        assert abs(eval_f(SourceSpec("f2"), PI / 4, 0.5)) < 1e-15

    def test_f3_f4_f5_formulas(self):
        x = np.linspace(PI / 4, 3 * PI / 4, 7)
        k = 1.3
        assert np.allclose(eval_f(SourceSpec("f3"), x, k), np.sin(8 * k * x), atol=0)
        f4 = eval_f(SourceSpec("f4"), x, k)
        expected = np.exp(-20 * k * (x - PI / 2) ** 2) + np.sin(8 * k * x)
        assert np.allclose(f4, expected, rtol=0, atol=1e-15)
        assert np.allclose(eval_f(SourceSpec("f5"), x, k), np.cos((2 / 3) * k * x), atol=1e-15)

    def test_parameterized_profiles(self):
        x = np.linspace(PI / 4, 3 * PI / 4, 5)
        k = 0.99
        spec = SourceSpec("f4", params={"width": 10, "factor": 4})
        expected = np.exp(-10 * k * (x - PI / 2) ** 2) + np.sin(4 * k * x)
        assert np.allclose(eval_f(spec, x, k), expected, rtol=0, atol=1e-15)

    @pytest.mark.parametrize("profile", ["f1", "f2", "f3", "f4", "f5"])
    def test_compact_support(self, profile):
        xs = np.array([0.0, 0.1, PI / 4 - 1e-9, 3 * PI / 4 + 1e-9, 3.0, PI])
        assert np.all(eval_f(SourceSpec(profile), xs, 2.0) == 0.0)

    def test_custom_terms_and_callable(self):
        spec = SourceSpec("custom", terms=[{"kind": "gaussian", "width": 20},
                                           {"kind": "cos", "factor": 12}])
        x = 1.1
        k = 0.5
        expected = np.exp(-20 * k * (x - PI / 2) ** 2) + np.cos(12 * k * x)
        assert abs(eval_f(spec, x, k) - expected) < 1e-15
        spec2 = SourceSpec("custom", fn=lambda x, k: np.exp(2j * x))
        assert eval_f(spec2, 1.0, 1.0) == np.exp(2j)
        assert eval_f(spec2, 0.1, 1.0) == 0.0

    def test_unknown_profile_is_config_error(self):
        with pytest.raises(ConfigurationError):
            SourceSpec("f9")
        with pytest.raises(ConfigurationError):
            SourceSpec("f1", params={"wobble": 3.0})
        with pytest.raises(ConfigurationError):
            SourceSpec("custom")  # neither terms nor fn

    def test_support_must_sit_in_interval(self):
        with pytest.raises(ConfigurationError):
            SourceSpec("f1", support=(-0.1, 1.0))
        with pytest.raises(ConfigurationError):
            SourceSpec("f1", support=(1.0, 4.0))


class TestTransverse:
    def test_indicator_values(self):
        g = TransverseProfile()
        assert eval_g(g, 0.0) == 1.0
        assert eval_g(g, PI / 3) == 0.0
        # closed support: endpoints included
        assert eval_g(g, -PI / 4) == 1.0
        assert eval_g(g, PI / 4) == 1.0

    def test_custom_profile_requires_nonzero(self):
        with pytest.raises(ConfigurationError):
            TransverseProfile(kind="custom", fn=lambda t: 0.0 * t)
        g = TransverseProfile(kind="custom", fn=lambda t: np.cos(t))
        assert eval_g(g, 0.1) == pytest.approx(np.cos(0.1))


class TestModeIntegrals:
    def test_dl_sinh_limit_value(self):
        # s -> 2 as k -> 0+: closed form 2 sinh(s pi/4)/s at s = 2
        val = g_mode_integral_dl(TransverseProfile(), 2, 1e-8)
        assert abs(val - np.sinh(PI / 2)) < 1e-12
        assert abs(np.sinh(PI / 2) - 2.301298902307295) < 1e-14

    def test_dl_removable_singularity(self):
        # n = k = 1 gives s = 0: integrand is 1 over an interval of length pi/2
        val = g_mode_integral_dl(TransverseProfile(), 1, 1.0)
        assert abs(val - PI / 2) < 1e-15

    def test_dl_genuine_zero(self):
        # s = 4i: 2 sin(pi)/4 = 0 is a true degenerate mode
        val = g_mode_integral_dl(TransverseProfile(), 3, 5.0)
        assert abs(val) < 1e-14

    def test_ft_values(self):
        g = TransverseProfile()
        assert abs(g_mode_integral_ft(g, 0, 2.0) - 1.0) < 1e-15
        assert abs(g_mode_integral_ft(g, 1, 2.0) - PI / 2) < 1e-15
        assert abs(g_mode_integral_ft(g, 1, np.sqrt(20.0))) < 1e-14

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    @pytest.mark.parametrize("k", [0.3, 0.9999, 1.5, 2.99, 4.2])
    def test_dl_against_quadrature_oracle(self, n, k):
        g = TransverseProfile()
        s = np.sqrt(complex(n * n - k * k))
        oracle = quad_exp_moment(lambda t: 1.0, g.support, s)
        assert abs(g_mode_integral_dl(g, n, k) - oracle) <= 1e-10 * max(1.0, abs(oracle))

    @pytest.mark.parametrize("n", [0, 1, 2, 4])
    @pytest.mark.parametrize("k", [0.5, 1.9999, 3.5, 6.0])
    def test_ft_against_quadrature_oracle(self, n, k):
        g = TransverseProfile()
        xi2 = np.sqrt(complex(k * k - 4 * n * n))
        oracle = quad_exp_moment(lambda t: 1.0, g.support, -1j * xi2)
        assert abs(g_mode_integral_ft(g, n, k) - oracle) <= 1e-10 * max(1.0, abs(oracle))

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_dl_branch_continuity(self, n):
        g = TransverseProfile()
        left = g_mode_integral_dl(g, n, n - 1e-10)
        right = g_mode_integral_dl(g, n, n + 1e-10)
        assert abs(left - right) <= 1e-9

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_ft_branch_continuity(self, n):
        g = TransverseProfile()
        left = g_mode_integral_ft(g, n, 2 * n - 1e-10)
        right = g_mode_integral_ft(g, n, 2 * n + 1e-10)
        assert abs(left - right) <= 1e-9

    def test_custom_profile_integral(self):
        g = TransverseProfile(kind="custom", support=(-0.5, 0.7), fn=lambda t: np.cos(t))
        for s in (0.0, 1.3, 2.7j, 1.0 + 2.0j):
            oracle = quad_exp_moment(lambda t: np.cos(t), g.support, s)
            assert abs(weighted_exp_integral(g, s) - oracle) <= 1e-10 * max(1.0, abs(oracle))

    def test_preconditions(self):
        g = TransverseProfile()
        with pytest.raises(ValueError):
            g_mode_integral_dl(g, 0, 1.0)
        with pytest.raises(ValueError):
            g_mode_integral_dl(g, 1, 0.0)
        with pytest.raises(ValueError):
            g_mode_integral_ft(g, 1, -2.0)
