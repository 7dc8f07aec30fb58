"""Source catalog f(x1, k) g(x2) and the transverse mode integrals.

The longitudinal factor f is one of five catalog profiles supported on an
interval of [0, pi] (default [pi/4, 3pi/4]), all wavenumber-dependent:

    f1 : exp(-w k (x1 - c)^2)            Gaussian, width w (default 20),
                                         c = support midpoint
    f2 : cos(a k x1)                     oscillation factor a (default 4)
    f3 : sin(b k x1)                     factor b (default 8)
    f4 : f1-profile + sin(b k x1)        width 20, factor 8 by default
    f5 : cos(a k x1)                     factor a = 2/3

plus ``custom`` sources assembled from gaussian/cos/sin terms (so they are
addressable from config files) or given as a callable f(x1, k).

The transverse factor g is known a-priori; the default is the indicator of
[-pi/4, pi/4]. The reconstruction formulas divide by the mode integrals

    DL:  integral of g(t) e^{s t} dt,         s   = sqrt(n^2 - k^2),
    FT:  integral of g(t) e^{-i xi2 t} dt,    xi2 = sqrt(k^2 - 4 n^2),

with principal complex square roots, so sqrt(n^2 - k^2) = i sqrt(k^2 - n^2)
for k > n. For the indicator the closed form is 2 sinh(s L/2)/s on a
symmetric interval of half-length L/2; the integrand is entire in s and the
s -> 0 limit (the interval length) is evaluated by series, not left as a
numerical 0/0.
"""

from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

import numpy as np
from scipy.integrate import quad

from .exceptions import ConfigurationError

DEFAULT_SUPPORT = (np.pi / 4, 3 * np.pi / 4)
DEFAULT_G_SUPPORT = (-np.pi / 4, np.pi / 4)

# default parameters of the catalog profiles
_CATALOG = {
    "f1": ({"width": 20.0}, ("gaussian",)),
    "f2": ({"factor": 4.0}, ("cos",)),
    "f3": ({"factor": 8.0}, ("sin",)),
    "f4": ({"width": 20.0, "factor": 8.0}, ("gaussian", "sin")),
    "f5": ({"factor": 2.0 / 3.0}, ("cos",)),
}


@dataclass(frozen=True)
class SourceSpec:
    """One longitudinal source profile f(x1, k) with compact support in (0, pi)."""

    profile: str = "f1"
    support: tuple = DEFAULT_SUPPORT
    params: Optional[Mapping[str, float]] = None
    terms: Optional[Sequence[Mapping[str, float]]] = None  # custom only
    fn: Optional[Callable] = None                          # custom only

    def __post_init__(self):
        a, b = self.support
        if not (0.0 <= a < b <= np.pi):
            raise ConfigurationError(f"source support {self.support} not within [0, pi]")
        if self.profile in _CATALOG:
            defaults = _CATALOG[self.profile][0]
            unknown = set(self.params or {}) - set(defaults)
            if unknown:
                raise ConfigurationError(f"unknown parameters {sorted(unknown)} for {self.profile}")
        elif self.profile == "custom":
            if (self.terms is None) == (self.fn is None):
                raise ConfigurationError("custom source needs exactly one of terms/fn")
        else:
            raise ConfigurationError(f"unknown source profile {self.profile!r}")

    @property
    def center(self):
        return 0.5 * (self.support[0] + self.support[1])

    def _term_list(self):
        if self.profile == "custom":
            return self.terms
        defaults, kinds = _CATALOG[self.profile]
        p = dict(defaults)
        p.update(self.params or {})
        out = []
        for kind in kinds:
            if kind == "gaussian":
                out.append({"kind": "gaussian", "width": p["width"]})
            else:
                out.append({"kind": kind, "factor": p["factor"]})
        return out

    def label(self):
        """Short human-readable formula, used in summaries."""
        if self.profile == "custom" and self.fn is not None:
            return "custom callable"
        parts = []
        for t in self._term_list():
            if t["kind"] == "gaussian":
                parts.append(f"exp(-{t['width']:g}*k*(x1-c)^2)")
            else:
                parts.append(f"{t['kind']}({t['factor']:g}*k*x1)")
        return " + ".join(parts)


def eval_f(spec: SourceSpec, x1, k: float):
    """Evaluate f(x1, k); exactly zero outside the support interval.

    Returns a float array for catalog profiles; custom callables may
    return complex values.
    """
    if k <= 0:
        raise ValueError("wavenumber k must be positive")
    x1 = np.asarray(x1, dtype=float)
    a, b = spec.support
    inside = (x1 >= a) & (x1 <= b)
    if spec.profile == "custom" and spec.fn is not None:
        raw = np.asarray(spec.fn(x1, k))
        return np.where(inside, raw, np.zeros_like(raw))
    vals = np.zeros_like(x1)
    for t in spec._term_list():
        if t["kind"] == "gaussian":
            vals = vals + np.exp(-t["width"] * k * (x1 - spec.center) ** 2)
        elif t["kind"] == "cos":
            vals = vals + np.cos(t["factor"] * k * x1)
        elif t["kind"] == "sin":
            vals = vals + np.sin(t["factor"] * k * x1)
        else:
            raise ConfigurationError(f"unknown custom term kind {t['kind']!r}")
    return np.where(inside, vals, 0.0)


@dataclass(frozen=True)
class TransverseProfile:
    """The a-priori known transverse factor g(x2); must not vanish identically."""

    kind: str = "indicator"
    support: tuple = DEFAULT_G_SUPPORT
    fn: Optional[Callable] = None

    def __post_init__(self):
        a, b = self.support
        if not a < b:
            raise ConfigurationError(f"empty g support {self.support}")
        if self.kind == "indicator":
            return
        if self.kind != "custom":
            raise ConfigurationError(f"unknown transverse profile kind {self.kind!r}")
        if self.fn is None:
            raise ConfigurationError("custom transverse profile needs a callable")
        t = np.linspace(a, b, 64)
        if not np.any(np.abs(self.fn(t)) > 0):
            raise ConfigurationError("transverse profile vanishes identically on its support")


def eval_g(profile: TransverseProfile, x2):
    """Evaluate g(x2); support endpoints are included (closed interval)."""
    x2 = np.asarray(x2, dtype=float)
    a, b = profile.support
    inside = (x2 >= a) & (x2 <= b)
    if profile.kind == "indicator":
        return np.where(inside, 1.0, 0.0)
    return np.where(inside, np.asarray(profile.fn(x2), dtype=float), 0.0)


def _expm1_over_z(z):
    # (e^z - 1)/z for complex z, series below |z| = 1e-3 to kill the 0/0.
    if abs(z) < 1e-3:
        return 1.0 + z / 2.0 * (1.0 + z / 3.0 * (1.0 + z / 4.0 * (1.0 + z / 5.0)))
    return (np.exp(z) - 1.0) / z


def weighted_exp_integral(profile: TransverseProfile, s: complex) -> complex:
    """integral of g(t) e^{s t} dt over the support of g, entire in s.

    Indicator profiles use the closed form e^{s a} (b - a) (e^{s(b-a)}-1)/(s(b-a));
    custom profiles use adaptive quadrature (absolute tolerance 1e-12).
    """
    a, b = profile.support
    s = complex(s)
    if profile.kind == "indicator":
        return np.exp(s * a) * (b - a) * _expm1_over_z(s * (b - a))
    val, _ = quad(lambda t: profile.fn(t) * np.exp(s * t), a, b,
                  complex_func=True, epsabs=1e-12, limit=200)
    return val


def g_mode_integral_dl(profile: TransverseProfile, n: int, k: float) -> complex:
    """Transverse integral for the Dirichlet-Laplacian mode n >= 1 at wavenumber k."""
    if n < 1:
        raise ValueError("mode index n must be >= 1")
    if k <= 0:
        raise ValueError("wavenumber k must be positive")
    s = np.sqrt(complex(n * n - k * k))
    return weighted_exp_integral(profile, s)


def g_mode_integral_ft(profile: TransverseProfile, n: int, k: float) -> complex:
    """Transverse integral for the Fourier mode n (any integer) at wavenumber k."""
    if k <= 0:
        raise ValueError("wavenumber k must be positive")
    xi2 = np.sqrt(complex(k * k - 4.0 * n * n))
    return weighted_exp_integral(profile, -1j * xi2)
