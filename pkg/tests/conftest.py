"""Shared fixtures: cached forward/DtN data for the standard experiment setups."""

from dataclasses import replace

import numpy as np
import pytest

from helmsource import (MeasurementGrid, QuadratureConfig, SourceSpec, TransverseProfile,
                        dirichlet_data, neumann_data_direct, neumann_from_dirichlet)


def _key(source: SourceSpec, g: TransverseProfile, ks, num_angles):
    return (source.profile, tuple(sorted((source.params or {}).items())),
            tuple(tuple(sorted(t.items())) for t in (source.terms or ())),
            source.support, g.kind, g.support, tuple(ks), num_angles)


@pytest.fixture(scope="session")
def pipeline_data():
    """Factory returning (data, source, g) with DtN Neumann attached; cached."""
    cache = {}

    def make(profile="f1", params=None, terms=None, ks=(0.5,), num_angles=100):
        source = SourceSpec(profile=profile, params=params, terms=terms)
        g = TransverseProfile()
        key = _key(source, g, ks, num_angles)
        if key not in cache:
            grid = MeasurementGrid(num_angles=num_angles, wavenumbers=tuple(ks))
            data = dirichlet_data(source, g, grid)
            cache[key] = (neumann_from_dirichlet(data), source, g)
        return cache[key]

    return make


MANUFACTURED_SUPPORT = (0.02, np.pi - 0.02)
MANUFACTURED_G_SUPPORT = (-0.2, 0.2)


@pytest.fixture(scope="session")
def manufactured_data():
    """Nearly-full-support custom sources with Neumann by kernel-gradient quadrature.

    A support touching [0, pi] cannot sit strictly inside the measurement
    circle, and supports close to the boundary exceed what M = 100 angles
    can represent, so the manufactured-coefficient tests use a slightly
    trimmed support, a dense angle grid, and the direct (series-free)
    Neumann oracle.
    """
    cache = {}

    def make(name, fn, ks):
        key = (name, tuple(ks))
        if key not in cache:
            source = SourceSpec(profile="custom", support=MANUFACTURED_SUPPORT, fn=fn)
            g = TransverseProfile(support=MANUFACTURED_G_SUPPORT)
            grid = MeasurementGrid(num_angles=1600, wavenumbers=tuple(ks))
            quad = QuadratureConfig(nodes_x1=128, nodes_x2=64)
            data = dirichlet_data(source, g, grid, quad)
            du = neumann_data_direct(source, g, grid, quad)
            cache[key] = (replace(data, neumann=du), source, g)
        return cache[key]

    return make
