"""Smoke tests for the python bindings.

Importable either as the installed ``cpnano`` package or straight from a
CMake build tree (point CPNANO_MODULE_DIR at the directory containing the
compiled ``_core`` module).
"""

import math
import os
import sys

import pytest

_module_dir = os.environ.get("CPNANO_MODULE_DIR")
if _module_dir:
    sys.path.insert(0, _module_dir)

try:
    import cpnano as m
except ImportError:
    _core = pytest.importorskip("_core")
    m = _core


def test_plate_normalization():
    assert m.f_plate(1.0, 0.0) == 1.0
    assert m.f_plate(2.0, 0.0) == pytest.approx(5.0 / 3.0, rel=1e-15)
    assert m.s_plate(1.0, 0.0) == 0.0


def test_plate_zero_crossing():
    roots = m.zero_crossings(lambda y: m.s_plate(1.0, y), 0.1, 50.0, tol=1e-6)
    assert len(roots) == 1
    assert roots[0].value == pytest.approx(2.97169, abs=1e-4)


def test_vectorized_curves():
    import numpy as np

    y = np.linspace(0.1, 50.0, 64)
    s = m.s_plate(2.0, y)
    assert s.shape == y.shape
    assert s[-1] == pytest.approx(3.0 / 12.0, abs=1e-8)


def test_free_energy_and_entropy():
    geom = m.ThermalGeometry(1.0, 0.0)
    p = m.Polarizability.electric(1.0)
    assert m.plate_free_energy(p, geom) == pytest.approx(
        -3.0 / (8.0 * math.pi), rel=1e-12
    )
    assert m.plate_entropy(p, geom) == 0.0

    pc = m.Polarizability.conducting_sphere(1.0)
    pair = m.ParticlePair(pc, pc, m.ThermalGeometry.from_y(1.0, 5.0))
    assert m.pair_entropy(pair) < 0.0  # the PC/PC negative window


def test_oracle_agreement():
    p = m.Polarizability(2.0, 1.0, -0.5, -0.5)
    geom = m.ThermalGeometry.from_y(1.0, 1.0)
    closed = m.plate_free_energy(p, geom)
    oracle = m.plate_free_energy_oracle(p, geom, tol=1e-13)
    assert oracle == pytest.approx(closed, rel=1e-10)


def test_critical_anisotropy():
    cfg = m.SystemConfig()
    cfg.kind = m.SystemConfig.Kind.pair
    cfg.sweep = m.SystemConfig.Sweep.alpha_both
    cfg.p1 = m.Polarizability.conducting_sphere(1.0)
    cfg.p2 = m.Polarizability.conducting_sphere(1.0)
    result = m.critical_anisotropy(cfg, 0.5, 1.0, tol=1e-4)
    assert result is not None
    assert result.value == pytest.approx(0.7427, abs=1e-3)


def test_figures():
    ids = m.figure_ids()
    assert len(ids) == 12
    columns, data = m.figure_data("fig1")
    assert columns[0] == "ZT"
    assert data.shape[0] >= 400
    assert data[:, 4].min() < 0.0  # gamma = 2 curve turns negative
    csv = m.figure_csv("fig1")
    assert csv.startswith("ZT,")


def test_duality():
    p1 = m.Polarizability(1.0, 0.5, -0.2, 0.8)
    p2 = m.Polarizability(0.3, 1.1, 0.6, -0.4)
    s = m.pair_scaled_entropy(p1, p2, 1.3)
    assert m.pair_scaled_entropy(p1.dual(), p2.dual(), 1.3) == pytest.approx(
        s, rel=1e-13
    )
