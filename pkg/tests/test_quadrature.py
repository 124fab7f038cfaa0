import math

import numpy as np
import pytest
from scipy.integrate import quad

from liouville_lab.errors import QuadratureError
from liouville_lab.quadrature import (geometric_edges, integrate,
                                      log_spaced_edges, merged_edges)


def test_polynomial_exact():
    res = integrate(lambda t: 3 * t ** 2, 0.0, 2.0)
    assert abs(res.value - 8.0) < 1e-12
    assert res.converged


def test_oscillatory_against_quadpack():
    f = lambda t: np.sin(7.3 * t) * np.exp(-0.2 * t)
    mine = integrate(f, 0.0, 30.0, seed_edges=np.linspace(0, 30, 40))
    ref, _ = quad(lambda t: math.sin(7.3 * t) * math.exp(-0.2 * t), 0, 30,
                  limit=200)
    assert abs(mine.value - ref) < 1e-10


def test_endpoint_cusp_with_graded_seeds():
    # int_0^1 sqrt(t) dt = 2/3; the cusp needs grading at 0
    edges = geometric_edges(0.0, 1.0, anchor=0.0, levels=40)
    res = integrate(lambda t: np.sqrt(t), 0.0, 1.0, seed_edges=edges)
    assert abs(res.value - 2.0 / 3.0) < 1e-12


def test_interior_log_singularity_adaptive():
    # int_-1^1 log|t| dt = -2
    res = integrate(lambda t: np.log(np.maximum(np.abs(t), 1e-300)),
                    -1.0, 1.0, rel_tol=1e-10)
    assert abs(res.value + 2.0) < 1e-8


def test_invalid_interval_raises():
    with pytest.raises(QuadratureError):
        integrate(lambda t: t, 1.0, 0.0)
    with pytest.raises(QuadratureError):
        geometric_edges(1.0, 1.0, anchor=1.0)


def test_edge_helpers():
    e = log_spaced_edges(1.0, 1024.0, per_octave=1)
    assert e[0] == 1.0 and e[-1] == 1024.0
    m = merged_edges(0.0, 10.0, [3.0, 5.0], [20.0, -5.0])
    assert m[0] == 0.0 and m[-1] == 10.0
    assert np.all(np.diff(m) > 0)
    assert 3.0 in m and 20.0 not in m
