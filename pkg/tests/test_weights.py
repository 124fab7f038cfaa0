import json
import math

import numpy as np
import pytest
from scipy.integrate import quad

from liouville_lab.errors import (ArgumentError, DivergentWeightError,
                                  HullDomainError)
from liouville_lab.weights import (BorderlineExpWeight, ProductWeight,
                                   RotatedWeight, SampledWeight,
                                   beurling_domar_series, box_log_sup,
                                   check_beurling_domar,
                                   check_submultiplicative, compute_profile,
                                   eval_weight, find_uniform_tail_radius,
                                   growth_factor, log_weight,
                                   product_exp_rate_closed_form, profile_point,
                                   weight_from_json, weight_to_json)

FAMILIES = [ProductWeight(s=2.0), ProductWeight(t=1.5),
            ProductWeight(a=1.0, b=0.5), BorderlineExpWeight(gamma=2.0)]


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def test_eval_trivial_weight_is_one():
    w = ProductWeight()
    assert eval_weight(w, np.array([7.3])) == pytest.approx(1.0)


def test_eval_polynomial_weight():
    w = ProductWeight(s=2.0)
    assert eval_weight(w, np.array([3.0])) == pytest.approx(16.0)
    assert eval_weight(w, np.array([-3.0])) == pytest.approx(16.0)


def test_eval_borderline_at_origin():
    w = BorderlineExpWeight(gamma=2.0)
    assert eval_weight(w, np.array([0.0])) == pytest.approx(1.0)


def test_weights_are_at_least_one_and_radial():
    rng = np.random.default_rng(0)
    for w2 in [ProductWeight(a=0.7, b=0.3, s=1.0, t=0.5, n=2),
               BorderlineExpWeight(gamma=1.5, n=2)]:
        pts = rng.uniform(-20, 20, size=(200, 2))
        vals = eval_weight(w2, pts)
        assert np.all(vals >= 1.0 - 1e-12)
        # rotation sampling: value depends on |x| only
        ang = rng.uniform(0, 2 * math.pi, 50)
        circ = 5.0 * np.column_stack([np.cos(ang), np.sin(ang)])
        assert np.ptp(eval_weight(w2, circ)) < 1e-12


def test_parameter_validation():
    with pytest.raises(ArgumentError):
        ProductWeight(b=1.0)
    with pytest.raises(ArgumentError):
        ProductWeight(a=-1.0)
    with pytest.raises(ArgumentError):
        BorderlineExpWeight(gamma=0.0)


def test_sampled_weight_hull_error_names_radius():
    xs = np.linspace(-3, 3, 601)
    w = SampledWeight(xs[:, None], np.exp(xs ** 2))
    assert eval_weight(w, np.array([1.0])) == pytest.approx(math.e, rel=1e-4)
    with pytest.raises(HullDomainError, match="radius 3"):
        eval_weight(w, np.array([4.0]))


# ---------------------------------------------------------------------------
# submultiplicativity
# ---------------------------------------------------------------------------

def test_submultiplicative_product_family_clean():
    rep = check_submultiplicative(ProductWeight(s=2.0), count=10000,
                                  radius=10.0, seed=1)
    assert rep.checked == 10000
    assert rep.violations == []


def test_submultiplicative_gaussian_violates():
    xs = np.linspace(-3, 3, 1201)
    w = SampledWeight(xs[:, None], np.exp(xs ** 2))
    # direct arithmetic at x = y = 1: e^4 > e * e
    gxy = eval_weight(w, np.array([2.0]))
    gx = eval_weight(w, np.array([1.0]))
    assert gxy > gx * gx * (1 + 1e-12)
    rep = check_submultiplicative(w, count=4000, seed=2)
    assert len(rep.violations) > 0
    x, y, ratio = rep.violations[0]
    assert ratio > 1.0


def test_submultiplicative_trivial_clean():
    rep = check_submultiplicative(ProductWeight(), count=500, seed=3)
    assert rep.violations == []


# ---------------------------------------------------------------------------
# growth-integral classification
# ---------------------------------------------------------------------------

def test_borderline_gamma2_converges():
    rep = check_beurling_domar(BorderlineExpWeight(gamma=2.0))
    assert rep.verdict == "converges"
    assert rep.tail_bound < math.inf


def test_borderline_gamma1_diverges():
    rep = check_beurling_domar(BorderlineExpWeight(gamma=1.0), horizon=1e12)
    assert rep.verdict == "diverges"
    assert rep.heuristic
    assert rep.partial_value > math.log(math.log(1e12)) - 1.0


def test_product_family_converges():
    rep = check_beurling_domar(ProductWeight(a=1.0, b=0.5, s=2.0, t=1.0))
    assert rep.verdict == "converges"


def test_direction_must_be_unit():
    with pytest.raises(ArgumentError):
        check_beurling_domar(ProductWeight(s=1.0), direction=[2.0])


def test_grs_estimate_near_one_for_convergent():
    rep = check_beurling_domar(BorderlineExpWeight(gamma=2.0))
    assert 1.0 < rep.grs_estimate < 1.01


def test_integral_series_bracketing():
    # On a common horizon the integral and the series differ by at most
    # M * sum 1/l^2 <= M/(L-1); the integral oracle is QUADPACK.
    L_max = 20000
    for w in FAMILIES:
        prof = compute_profile(w, np.array([1.0]))
        phi = lambda tau: float(log_weight(w, np.array([[tau]]))[0])
        for L in (10, 100):
            integral = quad(lambda t: phi(t) / t ** 2, L, L_max, limit=400)[0]
            series = beurling_domar_series(w, np.array([1.0]), L, L_max - 1)
            assert abs(integral - series) <= prof.M / (L - 1) + 1e-6


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def ab_profile():
    return compute_profile(ProductWeight(a=1.0, b=0.5),
                           np.arange(1.0, 41.0))


def test_closed_form_equality_pure_exponential(ab_profile):
    closed = np.array([product_exp_rate_closed_form(1.0, 0.5, r)
                       for r in ab_profile.r_grid])
    rel = np.abs(ab_profile.S - closed) / closed
    assert rel.max() < 1e-8
    assert ab_profile.certified.all()


def test_closed_form_other_exponents():
    for a, b in [(0.5, 0.0), (2.0, 0.25), (1.0, 0.9)]:
        S, cert = profile_point(ProductWeight(a=a, b=b), 7.0)
        assert cert
        assert S == pytest.approx(product_exp_rate_closed_form(a, b, 7.0),
                                  rel=1e-8)


def test_profile_value_at_4(ab_profile):
    assert ab_profile.S[3] == pytest.approx(0.5 / math.sin(math.pi / 4),
                                            rel=1e-9)


def test_trivial_profile_all_zero():
    prof = compute_profile(ProductWeight(), np.array([0.5, 1.0, 3.0]))
    assert np.all(prof.I == 0) and np.all(prof.J == 0) and np.all(prof.S == 0)


def test_S_constant_below_one():
    for w in FAMILIES:
        prof = compute_profile(w, np.array([0.1, 0.5, 0.9, 1.0, 2.0]))
        assert np.ptp(prof.S[:4]) < 1e-10
        assert prof.S[4] < prof.S[3]


@pytest.mark.parametrize("w", FAMILIES, ids=["poly", "log", "exp", "borderline"])
def test_sandwich_and_monotonicity(w):
    grid = np.unique(np.concatenate([np.linspace(1.0, 30.0, 20), [50.0]]))
    prof = compute_profile(w, grid)
    lo = np.maximum(prof.I, prof.J) / (2 * math.pi)
    hi = (2 / math.pi) * (prof.I + prof.J)
    assert np.all(prof.S >= lo - 1e-9)
    assert np.all(prof.S <= hi + 1e-9)
    assert np.all(np.diff(prof.S) <= 1e-12)
    assert np.all(np.diff(prof.I) <= 1e-12)


@pytest.mark.parametrize("w", FAMILIES, ids=["poly", "log", "exp", "borderline"])
def test_J_bound_via_I(w):
    # J(r) <= M/r^2 + I(1)/r + I(sqrt(r)) for r > 1 (beta = 1/2)
    from liouville_lab.weights import _ray, _tail_integral

    prof = compute_profile(w, np.array([4.0, 9.0, 25.0]))
    ray = _ray(w, np.array([1.0]))
    I1 = _tail_integral(ray, 1.0)[0]
    for r, J in zip(prof.r_grid, prof.J):
        bound = prof.M / r ** 2 + I1 / r + _tail_integral(ray, math.sqrt(r))[0]
        assert J <= bound + 1e-9


def test_decay_S_vanishes_at_infinity():
    for w, rmax in [(ProductWeight(s=2.0), 200.0),
                    (ProductWeight(a=1.0, b=0.5), 200.0),
                    (BorderlineExpWeight(gamma=2.0), 5000.0)]:
        prof = compute_profile(w, np.array([1.0, rmax]))
        assert prof.S[1] < 0.1 * prof.S[0]


def test_polynomial_upper_bound_s():
    # S(r) <= c1 s / r + s log(1+r) / r with the quadrature constant c1
    c1 = quad(lambda lam: math.log1p(abs(lam)) / (lam ** 2 + 1),
              -np.inf, np.inf, limit=200)[0] / math.pi
    s = 2.0
    prof = compute_profile(ProductWeight(s=s), np.array([2.0, 10.0, 50.0]))
    for r, S in zip(prof.r_grid, prof.S):
        assert S <= (c1 * s + s * math.log1p(r)) / r + 1e-9


def test_loglog_upper_bound_t():
    c2 = quad(lambda lam: math.log(2 * math.log(math.e + abs(lam)))
              / (lam ** 2 + 1), -np.inf, np.inf, limit=200)[0] / math.pi
    t = 1.5
    prof = compute_profile(ProductWeight(t=t), np.array([2.0, 10.0, 50.0]))
    for r, S in zip(prof.r_grid, prof.S):
        bound = (c2 * t + t * math.log(math.log(math.e + r))) / r
        assert S <= bound + 1e-9


def test_borderline_upper_bound_gamma():
    gamma = 2.0
    prof = compute_profile(BorderlineExpWeight(gamma=gamma),
                           np.array([1e3, 1e4, 1e5]))
    for r, S in zip(prof.r_grid, prof.S):
        lg = math.log(math.e + r)
        bound = lg ** -gamma / math.pi \
            + (2 / math.pi) * (1 + math.e / r) * lg ** (1 - gamma) / (gamma - 1)
        assert S <= bound


def test_constants_M_and_Cg(ab_profile):
    assert ab_profile.M == pytest.approx(1.0, rel=1e-10)
    assert ab_profile.C_g == pytest.approx(
        math.exp(1.0 + 2.0 / math.pi), rel=1e-8)


def test_box_sup():
    # sup over the unit square of (1+|x|)^2 is at the corner |x| = sqrt(2)
    val = box_log_sup(ProductWeight(s=2.0, n=2))
    assert val == pytest.approx(2 * math.log1p(math.sqrt(2)), rel=1e-9)


def test_empty_grid_rejected():
    with pytest.raises(ArgumentError):
        compute_profile(ProductWeight(s=1.0), np.array([]))


def test_rotation_invariance_sampled_2d():
    rng = np.random.default_rng(5)
    pts = rng.uniform(-8, 8, size=(600, 2))
    pts = np.vstack([pts, [[0.0, 0.0]]])
    vals = (1 + np.linalg.norm(pts, axis=1)) ** 1.5
    w = SampledWeight(pts, vals)
    ang = 0.7
    A = np.array([[math.cos(ang), -math.sin(ang)],
                  [math.sin(ang), math.cos(ang)]])
    wr = RotatedWeight(w, A)
    grid = np.array([1.0, 2.0])
    p1 = compute_profile(w, grid)
    p2 = compute_profile(wr, grid)
    assert np.allclose(p1.S, p2.S, rtol=0.05, atol=0.01)


# ---------------------------------------------------------------------------
# growth factor and uniform tail radius
# ---------------------------------------------------------------------------

def test_growth_factor_closed_form():
    w = ProductWeight(a=1.0, b=0.5)
    assert growth_factor(w, [9.0]) == pytest.approx(
        math.exp(math.sqrt(2.0) * 3.0), rel=1e-8)


def test_growth_factor_trivial():
    assert growth_factor(ProductWeight(), [4.0]) == 1.0
    assert growth_factor(ProductWeight(s=2.0), [0.0]) == 1.0


def test_growth_factor_polynomial_bound():
    c1 = quad(lambda lam: math.log1p(abs(lam)) / (lam ** 2 + 1),
              -np.inf, np.inf, limit=200)[0] / math.pi
    val = growth_factor(ProductWeight(s=2.0), [10.0])
    assert val <= math.exp(2 * c1) * (1 + 10.0) ** 2 * (1 + 1e-9)


def test_tail_radius_trivial():
    assert find_uniform_tail_radius(ProductWeight(), 0.1) == 1.0


def test_tail_radius_borderline_postcondition():
    w = BorderlineExpWeight(gamma=2.0)
    R = find_uniform_tail_radius(w, 0.1)
    # independent fine-grid oracle in u = log(tau)
    f = lambda u: 1.0 / math.log(math.e + math.exp(u)) ** 2
    val = quad(f, math.log(R), math.log(1e280), limit=800)[0]
    val += 1.0 / math.log(1e280)  # v-substitution tail, near exact
    assert val < 0.1
    assert val > 0.1 * 0.95  # the radius is within ~5% of sharp


def test_tail_radius_polynomial_postcondition():
    w = ProductWeight(s=2.0)
    R = find_uniform_tail_radius(w, 0.5)
    val = quad(lambda tau: 2 * math.log1p(tau) / tau ** 2, R, np.inf,
               limit=400)[0]
    assert val < 0.5


def test_tail_radius_divergent_weight_errors():
    with pytest.raises(DivergentWeightError, match="Beurling-Domar violated"):
        find_uniform_tail_radius(BorderlineExpWeight(gamma=1.0), 0.1)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_weight_json_roundtrip(tmp_path):
    for w in FAMILIES:
        data = weight_to_json(w)
        w2 = weight_from_json(json.loads(json.dumps(data)))
        x = np.array([1.7] + [0.0] * (w.n - 1))
        assert eval_weight(w2, x) == pytest.approx(eval_weight(w, x))
    xs = np.linspace(-2, 2, 41)
    ws = SampledWeight(xs[:, None], np.exp(np.abs(xs)))
    ws2 = weight_from_json(weight_to_json(ws))
    assert eval_weight(ws2, np.array([0.5])) == pytest.approx(
        eval_weight(ws, np.array([0.5])))


def test_profile_csv_header(tmp_path, ab_profile):
    path = tmp_path / "prof.csv"
    ab_profile.to_csv(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "r,I,J,S,certified"
    assert len(lines) == len(ab_profile.r_grid) + 1
