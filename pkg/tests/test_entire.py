import json
import math

import numpy as np
import pytest

from liouville_lab.entire import (PolyExpSum, derivative, function_from_json,
                                  function_to_json, growth_constant, kappa,
                                  outer_function, outer_log_modulus,
                                  poisson_extension, poisson_majorant_margin,
                                  polydisc_derivative, random_sum,
                                  restrict_to_line, verify_tent,
                                  weighted_sup_norm)
from liouville_lab.errors import ArgumentError
from liouville_lab.weights import (BorderlineExpWeight, ProductWeight,
                                   SampledWeight, compute_profile)


def harmonic(k):
    return (PolyExpSum.monomial([1, 0]) + 1j * PolyExpSum.monomial([0, 1])) ** k


TWO_COS = PolyExpSum.exponential([1.0]) + PolyExpSum.exponential([-1.0])


# ---------------------------------------------------------------------------
# evaluation and algebra
# ---------------------------------------------------------------------------

def test_eval_constant():
    f = PolyExpSum.constant(1.0, 1)
    assert f.eval(np.array([[0.3 + 9.1j]]))[0] == pytest.approx(1.0)


def test_eval_exponential_at_i():
    f = PolyExpSum.exponential([1.0])
    assert f.eval(np.array([[1j]]))[0] == pytest.approx(math.exp(-1.0))


def test_eval_harmonic_square():
    assert harmonic(2).eval(np.array([[1.0, 1.0]]))[0] == pytest.approx(2j)


def test_normalization_merges_terms():
    f = PolyExpSum.from_terms(1, [(1.0, (0,), (2.0,)), (2.0, (0,), (2.0,)),
                                  (-3.0, (0,), (2.0,))])
    assert f.is_zero


def test_restrict_to_line():
    f = PolyExpSum.from_terms(2, [(2.0, (1, 2), (0.5, 1.5))])
    g = restrict_to_line(f, (0.7,))
    z = np.array([[1.3 + 0.2j]])
    full = f.eval(np.array([[1.3 + 0.2j, 0.7]]))
    assert g.eval(z)[0] == pytest.approx(full[0])


# ---------------------------------------------------------------------------
# derivatives
# ---------------------------------------------------------------------------

def test_derivative_exponential():
    f = PolyExpSum.exponential([2.5])
    df = derivative(f, [1])
    ((c, a, x),) = df.terms
    assert c == pytest.approx(2.5j)
    assert a == (0,) and x == (2.5,)


def test_derivative_square_is_constant():
    d = derivative(PolyExpSum.monomial([2]), [2])
    assert d.terms == (((2 + 0j), (0,), (0.0,)),)


def test_derivative_product_rule():
    f = PolyExpSum.from_terms(1, [(1.0, (1,), (1.0,))])  # z e^{iz}
    df = derivative(f, [1])
    z = np.array([[0.7 + 0j]])
    expected = (1 + 1j * 0.7) * np.exp(1j * 0.7)
    assert df.eval(z)[0] == pytest.approx(expected)


def test_derivative_matches_central_differences():
    rng = np.random.default_rng(11)
    h = 1e-5
    for _ in range(10):
        f = random_sum(rng, n=1, max_terms=3, max_degree=2)
        df = derivative(f, [1])
        x0 = float(rng.uniform(-2, 2))
        fd = (f.eval(np.array([[x0 + h]])) - f.eval(np.array([[x0 - h]]))) \
            / (2 * h)
        val = df.eval(np.array([[x0 + 0j]]))[0]
        scale = max(abs(val), 1.0)
        assert abs(val - fd[0]) / scale < 1e-6


# ---------------------------------------------------------------------------
# directional growth rate
# ---------------------------------------------------------------------------

def test_kappa_constant_zero():
    assert kappa(PolyExpSum.constant(1.0, 1), [1.0]) == 0.0


def test_kappa_exponential_direct_limit():
    gamma = np.array([1.5, -0.5])
    f = PolyExpSum.exponential(gamma)
    omega = np.array([0.6, 0.8])
    k = kappa(f, omega)
    assert k == pytest.approx(-(gamma @ omega))
    # direct limit of log|f(i t omega)| / t
    t = 40.0
    val = abs(f.eval((1j * t * omega)[None, :])[0])
    assert math.log(val) / t == pytest.approx(k, rel=1e-12)


def test_kappa_polynomial_zero_rate():
    f = harmonic(3)
    assert kappa(f, [1.0, 0.0]) == 0.0
    t = 1e6
    val = abs(f.eval((1j * t * np.array([1.0, 0.0]))[None, :])[0])
    assert math.log(val) / t < 1e-4


def test_kappa_zero_function_rejected():
    with pytest.raises(ArgumentError):
        kappa(PolyExpSum.from_terms(1, []), [1.0])


# ---------------------------------------------------------------------------
# weighted sup norms
# ---------------------------------------------------------------------------

def test_norm_of_one():
    est = weighted_sup_norm(PolyExpSum.constant(1.0, 1), ProductWeight(s=2.0))
    assert est.value == pytest.approx(1.0)
    assert est.certified
    assert abs(est.argmax_point[0]) < 1e-6


def test_norm_harmonic_vs_matching_weight():
    est = weighted_sup_norm(harmonic(3), ProductWeight(s=3.0, n=2))
    assert not est.certified  # supremum only approached as |x| -> oo
    assert est.value == pytest.approx(1.0, abs=5e-3)


def test_norm_two_cos():
    est = weighted_sup_norm(TWO_COS, ProductWeight(s=2.0, n=1))
    assert est.certified
    assert est.value == pytest.approx(2.0, rel=1e-10)
    assert abs(est.argmax_point[0]) < 1e-6


def test_norm_against_fine_grid_oracle():
    rng = np.random.default_rng(23)
    w = ProductWeight(s=2.0, n=1)
    for _ in range(3):
        f = random_sum(rng, n=1, max_terms=4, max_degree=0, min_gap=0.4)
        est = weighted_sup_norm(f, w, np.array([0.7]))
        xs = np.linspace(-30, 30, 300001)
        vals = np.abs(f.eval((xs + 0.7j)[:, None])) / (1 + np.abs(xs)) ** 2
        k = int(np.argmax(vals))
        # parabolic peak polish
        if 0 < k < len(xs) - 1:
            y0, y1, y2 = vals[k - 1], vals[k], vals[k + 1]
            denom = y0 - 2 * y1 + y2
            peak = y1 - 0.125 * (y2 - y0) ** 2 / denom if denom else y1
        else:
            peak = vals[k]
        assert est.value == pytest.approx(peak, rel=1e-6)
        assert est.certified


# ---------------------------------------------------------------------------
# half-plane majorant
# ---------------------------------------------------------------------------

def test_poisson_constant():
    pb = poisson_extension(PolyExpSum.constant(1.0, 1), 0.0, 1.0)
    assert pb.value == pytest.approx(0.0, abs=1e-12)
    assert pb.k == 0.0


def test_poisson_pure_exponential_margin():
    # log|e^{i z}| = -y; bound with k = max(0, kappa) = 0 and P = 0
    f = PolyExpSum.exponential([1.0])
    m, pb = poisson_majorant_margin(f, 0.4, 2.0)
    assert pb.integral == pytest.approx(0.0, abs=1e-10)
    assert m == pytest.approx(2.0, abs=1e-10)


def test_poisson_two_cos_value():
    exact = math.log(2 * math.cosh(1.0))
    m, pb = poisson_majorant_margin(TWO_COS, 0.0, 1.0)
    assert pb.value >= exact - 1e-6
    assert pb.value == pytest.approx(exact, abs=1e-4)
    assert m >= -1e-6


def test_poisson_margins_on_random_sums():
    rng = np.random.default_rng(4)
    for _ in range(3):
        f = random_sum(rng, n=1, max_terms=4, max_degree=0, min_gap=0.5)
        for y in (0.1, 1.0, 10.0):
            for x in (-3.0, 0.0, 2.0):
                m, _ = poisson_majorant_margin(f, x, y)
                assert m >= -1e-6


def test_poisson_bad_height_rejected():
    with pytest.raises(ArgumentError):
        poisson_extension(TWO_COS, 0.0, 0.0)


# ---------------------------------------------------------------------------
# outer function
# ---------------------------------------------------------------------------

def test_outer_trivial_weight():
    val = outer_function(ProductWeight(), 0.3 + 1.0j)
    assert val == pytest.approx(1.0 + 0.0j, abs=1e-9)


def test_outer_boundary_modulus_smooth_point():
    w = ProductWeight(s=2.0)
    lm = outer_log_modulus(w, 1.0, 1e-3)
    assert math.exp(lm) == pytest.approx(4.0, rel=1e-3)


def test_outer_imaginary_axis_matches_profile():
    w = ProductWeight(s=2.0)
    prof = compute_profile(w, np.array([5.0]))
    lm = outer_log_modulus(w, 0.0, 5.0)
    assert math.exp(lm) == pytest.approx(math.exp(prof.S[0] * 5.0), rel=1e-4)


def test_outer_optimality_ratio():
    # ||phi(.+iy)|| >= |phi(iy)| = e^{S(y) y} while ||phi|| = 1
    w = ProductWeight(s=2.0)
    for y in (1.0, 2.0, 5.0):
        prof_S = compute_profile(w, np.array([float(y)])).S[0]
        lm = outer_log_modulus(w, 0.0, y)
        assert lm - prof_S * y == pytest.approx(0.0, abs=1e-5)


def test_outer_requires_normalized_weight():
    xs = np.linspace(-4, 4, 201)
    w = SampledWeight(xs[:, None], np.full(201, 2.0))
    with pytest.raises(ArgumentError, match="normalize"):
        outer_function(w, 1j)


# ---------------------------------------------------------------------------
# polydisc derivatives
# ---------------------------------------------------------------------------

def test_polydisc_constant_zero():
    assert polydisc_derivative(PolyExpSum.constant(1.0, 2), [0, 0], [1, 1]) \
        == pytest.approx(0.0, abs=1e-14)


def test_polydisc_exact_exponential():
    f = PolyExpSum.exponential([1.0, 2.0])
    val = polydisc_derivative(f, [0.3, -0.2], [2, 1], nodes_per_circle=256)
    want = (1j) ** 2 * (2j) * f.eval(np.array([[0.3, -0.2]], dtype=complex))[0]
    assert val == pytest.approx(want, rel=1e-10)


def test_polydisc_cube():
    assert polydisc_derivative(PolyExpSum.monomial([3]), [1.0], [3]) \
        == pytest.approx(6.0, rel=1e-12)


def test_polydisc_matches_symbolic_derivative():
    rng = np.random.default_rng(7)
    for _ in range(6):
        n = int(rng.integers(1, 3))
        f = random_sum(rng, n=n, max_terms=3, max_degree=2, freq_scale=2.0)
        alpha = tuple(int(a) for a in rng.integers(0, 3, size=n))
        if sum(alpha) > 4:
            continue
        z = rng.uniform(-1, 1, size=n) + 1j * rng.uniform(-0.3, 0.3, size=n)
        direct = derivative(f, alpha).eval(z[None, :])[0]
        via_disc = polydisc_derivative(f, z, alpha, nodes_per_circle=64)
        scale = max(abs(direct), 1e-6)
        assert abs(via_disc - direct) / scale < 1e-8


def test_polydisc_node_floor():
    with pytest.raises(ArgumentError):
        polydisc_derivative(PolyExpSum.constant(1.0, 1), [0.0], [1],
                            nodes_per_circle=8)


# ---------------------------------------------------------------------------
# the shifted-derivative bound
# ---------------------------------------------------------------------------

def test_tent_constant_function():
    rep = verify_tent(PolyExpSum.constant(1.0, 1), ProductWeight(s=2.0), [0.0])
    assert rep.passed and rep.ratio <= 1.0


def test_tent_exponential_zero_rate_direction():
    f = PolyExpSum.exponential([1.0, 0.0], n=2)
    rep = verify_tent(f, ProductWeight(a=1.0, b=0.5, n=2), [0.0, 2.0])
    assert rep.constants["kappa"] == pytest.approx(0.0)
    assert rep.passed


def test_tent_two_cos_first_derivative():
    rep = verify_tent(TWO_COS, ProductWeight(s=2.0), [3.0], alpha=[1])
    assert rep.passed
    assert rep.tag == "entest"


def test_shift_estimate_consistency():
    # || phi(.+iy) || <= C_g e^{(k + S(y)) y} || phi ||  directly
    w = ProductWeight(s=2.0)
    prof = compute_profile(w, np.array([1.0, 2.0]))
    for f in (TWO_COS, PolyExpSum.exponential([2.0]) * 0.7 + 0.2):
        base = weighted_sup_norm(f, w, None).value
        for y, S in zip(prof.r_grid, prof.S):
            shifted = weighted_sup_norm(f, w, np.array([y])).value
            e1 = np.zeros(1)
            e1[0] = 1.0
            k = max(0.0, kappa(f, e1))
            assert shifted <= prof.C_g * math.exp((k + S) * y) * base * (1 + 1e-9)


def test_growth_constant_formula():
    f = PolyExpSum.from_terms(1, [(1.0, (2,), (3.0,))])
    assert growth_constant(f) == pytest.approx(3.0 + 2.0 / math.e)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_function_json_roundtrip():
    rng = np.random.default_rng(1)
    f = random_sum(rng, n=2, max_terms=4, max_degree=2)
    f2 = function_from_json(json.loads(json.dumps(function_to_json(f))))
    z = rng.uniform(-1, 1, size=(3, 2)) + 0j
    assert np.allclose(f.eval(z), f2.eval(z))
