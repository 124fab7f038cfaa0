"""Explicit constructions probing sharpness and failure of the bounds.

Four constructions are implemented, each returning a report whose pass
flags are all backed by stored numeric margins:

* ``harmonic_power``     -- (x1 + i x2)^k against (1+|x|)^k: the kernel
  bound's polynomial growth factor is attained in the limit;
* ``sqrt_cosine``        -- cos(i sqrt(x1 + i kappa x2)), an elliptic
  kernel element showing the exponent 1/sin((1-b)pi/2) cannot be
  lowered for g = exp(a |x|^(1/2));
* ``nonanalytic_series`` -- a lacunary exponential series built from
  complex zeros approaching the real axis; infra-exponential with all
  derivatives, yet not real-analytic (directional derivatives at 0 grow
  like ell^(2 ell));
* ``semi_elliptic``      -- the operator d^2/dx1^2 + d^(4l+2)/dx2^(4l+2)
  admits a smooth kernel element of finite-order growth that blows up
  at the strip boundary Im z1 = 1, so no entire continuation exists.

Quantities like ell^(2 ell) and exp(k^(2l+1)) overflow doubles, so the
checks run in signed log-domain arithmetic throughout.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, ConstructionError
from .logdomain import LogFloat, log_abs_cosh, log_sum
from .entire import PolyExpSum, weighted_sup_norm
from .multiplier import apply_symbol, laplacian_symbol, eval_symbol
from .weights import ProductWeight


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

@dataclass
class MarginRow:
    tag: str
    name: str
    margin: float
    passed: bool


@dataclass
class CounterexampleReport:
    construction: str
    values: dict
    margins: list
    passed: bool = True

    def add(self, tag, name, margin, tol=0.0):
        ok = bool(margin >= -tol)
        self.margins.append(MarginRow(tag=tag, name=name,
                                      margin=float(margin), passed=ok))
        self.passed = self.passed and ok
        return ok


def _new_report(name, **values):
    return CounterexampleReport(construction=name, values=values, margins=[])


# ---------------------------------------------------------------------------
# harmonic powers
# ---------------------------------------------------------------------------

def harmonic_power_function(k):
    """(x1 + i x2)^k as a PolyExpSum."""
    base = PolyExpSum.monomial([1, 0]) + 1j * PolyExpSum.monomial([0, 1])
    return base ** int(k)


def harmonic_power(k, t_list=(1.0, 10.0, 100.0, 1000.0)):
    """Harmonic kernel element whose weighted shift ratio attains 1.

    Verifies the exact vanishing under the Laplacian symbol and, for
    each t in ``t_list``, the lower bound

        ||f(. + i t e_1)|| / g(t e_1) >= t^k / (1+t)^k  ->  1 = ||f||.
    """
    if k < 0:
        raise ArgumentError("power must be a non-negative integer")
    rep = _new_report("harmonic-power", k=int(k), t_list=list(map(float, t_list)))
    f = harmonic_power_function(k)
    residual = apply_symbol(laplacian_symbol(2), f)
    rep.values["laplacian_residual"] = residual.coeff_scale()
    rep.add("Hentest0", "laplacian residual exactly zero",
            0.0 if residual.is_zero else -residual.coeff_scale())
    w = ProductWeight(s=float(k), n=2)
    ratios = []
    for t in t_list:
        if k == 0:
            ratios.append(1.0)
            rep.add("gpol", f"shift ratio lower bound at t={t:g}", 0.0)
            continue
        est = weighted_sup_norm(f, w, np.array([float(t), 0.0]))
        ratio = est.value / (1.0 + t) ** k
        bound = (t / (1.0 + t)) ** k
        ratios.append(ratio)
        rep.add("gpol", f"shift ratio lower bound at t={t:g}", ratio - bound,
                tol=1e-12)
    rep.values["ratios"] = ratios
    rep.values["final_gap_to_one"] = abs(ratios[-1] - 1.0)
    rep.add("gpol", "ratio approaches the norm 1",
            0.02 - abs(ratios[-1] - 1.0))
    return rep


# ---------------------------------------------------------------------------
# the square-root cosine construction
# ---------------------------------------------------------------------------

def _sqrt_threshold(tau):
    return (1.0 + tau ** 2) ** 0.25 * math.cos(0.5 * math.atan2(1.0, tau))


def sqrt_cosine_parameters(eps):
    """(tau_eps, kappa_eps) for the anisotropy of the construction.

    tau_eps is the largest tau with
    (1+tau^2)^(1/4) cos(arctan(1/tau)/2) <= (1+eps)/sqrt(2), found by
    bisection (the left side decreases to 1/sqrt(2) as tau -> 0), and
    kappa_eps = max(1, (sqrt(2) (1+1/tau^2)^(1/4) / (1+eps))^2).
    """
    if eps <= 0:
        raise ArgumentError("eps must be positive")
    target = (1.0 + eps) / math.sqrt(2.0)
    hi = 1e8
    if _sqrt_threshold(hi) <= target:
        return math.inf, 1.0
    lo = 1e-12
    if _sqrt_threshold(lo) > target:
        raise ArgumentError("threshold function did not bracket the target")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _sqrt_threshold(mid) <= target:
            lo = mid
        else:
            hi = mid
    tau = lo
    kappa = max(1.0, (math.sqrt(2.0) * (1.0 + 1.0 / tau ** 2) ** 0.25
                      / (1.0 + eps)) ** 2)
    return tau, kappa


def _sqrt_cosine_value(x1, x2, kappa):
    """cos(i sqrt(x1 + i kappa x2)) = cosh(sqrt(x1 + i kappa x2))."""
    w = np.sqrt(np.asarray(x1, dtype=complex) + 1j * kappa * np.asarray(x2))
    return np.cosh(w)


def sqrt_cosine(eps=1.0, sample_count=10000, sample_radius=100.0,
                pde_points=100, pde_step=1e-3,
                y2_list=(-1e2, -1e4), seed=0):
    """Sharpness of the exponent for g = exp(a |x|^(1/2)); see module doc.

    Checks, with explicit margins: the square-root real-part inequality
    at random samples covering all three argument regimes; the
    anisotropic Laplace equation via fourth-order differences; and the
    divergence of the shifted-norm ratio against g^(sqrt(2)(1-eps)).
    """
    tau, kappa = sqrt_cosine_parameters(eps)
    rep = _new_report("sqrt-cosine", eps=float(eps), tau_eps=tau,
                      kappa_eps=kappa)
    rng = np.random.default_rng(seed)
    a_coef = (1.0 + eps) / math.sqrt(2.0) * math.sqrt(kappa)

    # regime-stratified samples: x1 >= tau kappa |x2|, the middle wedge,
    # and x1 <= 0
    xs = rng.uniform(-sample_radius, sample_radius, size=(sample_count, 2))
    if math.isfinite(tau):
        wedge = rng.uniform(0.0, 1.0, size=(sample_count // 10, 2))
        x2w = rng.uniform(-sample_radius, sample_radius, sample_count // 10)
        mid = np.column_stack([wedge[:, 0] * tau * kappa * np.abs(x2w), x2w])
        steep = np.column_stack([
            tau * kappa * np.abs(x2w) * (1.0 + wedge[:, 1]), x2w])
        xs = np.vstack([xs, mid, steep])
    with np.errstate(invalid="ignore"):
        re_sqrt = np.real(np.sqrt(xs[:, 0] + 1j * kappa * xs[:, 1]))
    bound = a_coef * np.linalg.norm(xs, axis=1) ** 0.5
    margins = bound - re_sqrt
    for name, mask in [
            ("flat regime x1 >= tau k |x2|",
             xs[:, 0] >= tau * kappa * np.abs(xs[:, 1])
             if math.isfinite(tau) else xs[:, 0] >= 0),
            ("wedge regime 0 < x1 < tau k |x2|",
             (xs[:, 0] > 0) & (xs[:, 0] < (tau if math.isfinite(tau) else
                                           math.inf) * kappa * np.abs(xs[:, 1]))),
            ("left regime x1 <= 0", xs[:, 0] <= 0)]:
        if mask.any():
            rep.add("sqrt", f"real-part bound, {name}",
                    float(margins[mask].min()), tol=1e-12)
    rep.values["sqrt_samples"] = int(xs.shape[0])

    # fourth-order finite-difference residual of d11 f + kappa^-2 d22 f
    pts = rng.uniform(-20.0, 20.0, size=(pde_points, 2))
    h = pde_step
    worst = 0.0
    for x1, x2 in pts:
        f0 = _sqrt_cosine_value(x1, x2, kappa)
        d11 = (-_sqrt_cosine_value(x1 + 2 * h, x2, kappa)
               + 16 * _sqrt_cosine_value(x1 + h, x2, kappa) - 30 * f0
               + 16 * _sqrt_cosine_value(x1 - h, x2, kappa)
               - _sqrt_cosine_value(x1 - 2 * h, x2, kappa)) / (12 * h * h)
        d22 = (-_sqrt_cosine_value(x1, x2 + 2 * h, kappa)
               + 16 * _sqrt_cosine_value(x1, x2 + h, kappa) - 30 * f0
               + 16 * _sqrt_cosine_value(x1, x2 - h, kappa)
               - _sqrt_cosine_value(x1, x2 - 2 * h, kappa)) / (12 * h * h)
        resid = abs(d11 + d22 / kappa ** 2)
        scale = abs(d11) + abs(d22) / kappa ** 2 + 1e-30
        worst = max(worst, resid / scale)
    rep.values["pde_worst_relative_residual"] = worst
    rep.add("sqrt", "anisotropic Laplace residual <= 1e-5 relative",
            1e-5 - worst)

    # divergence of the shifted ratio against g^(sqrt(2)(1-eps))
    probe_x = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [5.0, -3.0]])
    glog_probe = a_coef * np.linalg.norm(probe_x, axis=1) ** 0.5
    ratio_logs = []
    for y2 in y2_list:
        if y2 >= 0:
            raise ArgumentError("divergence probes need y2 < 0")
        # imaginary shift of x2: the argument becomes x1 - kappa y2 + i kappa x2
        w_args = probe_x[:, 0] - kappa * y2 + 1j * kappa * probe_x[:, 1]
        logf = np.array([log_abs_cosh(complex(np.sqrt(wv))) for wv in w_args])
        ratio_log = float(np.max(logf - glog_probe)) \
            - math.sqrt(2.0) * (1.0 - eps) * a_coef * abs(y2) ** 0.5
        bound_log = math.log(0.5) + eps ** 2 * math.sqrt(kappa) * abs(y2) ** 0.5
        ratio_logs.append(ratio_log)
        rep.add("sqrt", f"divergence lower bound at y2={y2:g}",
                ratio_log - bound_log, tol=1e-12)
    for a, b in zip(ratio_logs, ratio_logs[1:]):
        rep.add("sqrt", "divergence ratio increasing along y2 list", b - a)
    rep.values["ratio_logs"] = ratio_logs
    return rep


# ---------------------------------------------------------------------------
# the non-analytic lacunary series
# ---------------------------------------------------------------------------

@dataclass
class ZeroSequence:
    """Complex frequency sequence zeta_k = xi_k + i eta_k approaching R^n.

    Invariants (validated): |eta_k| < 1/k, |xi_k| >= k, and the
    directions xi_k/|xi_k| stay within 60 degrees of omega0
    (omega_k . omega0 > 1/2).
    """

    xi: np.ndarray      # (K, n)
    eta: np.ndarray     # (K, n)
    omega0: np.ndarray  # (n,)

    def __post_init__(self):
        self.xi = np.atleast_2d(np.asarray(self.xi, dtype=float))
        self.eta = np.atleast_2d(np.asarray(self.eta, dtype=float))
        self.omega0 = np.asarray(self.omega0, dtype=float)
        if self.xi.shape != self.eta.shape:
            raise ConstructionError("xi/eta shape mismatch")
        if abs(np.linalg.norm(self.omega0) - 1.0) > 1e-9:
            raise ConstructionError("omega0 must be a unit vector")
        self.validate()

    @property
    def count(self):
        return self.xi.shape[0]

    def validate(self):
        ks = np.arange(1, self.count + 1, dtype=float)
        eta_norm = np.linalg.norm(self.eta, axis=1)
        xi_norm = np.linalg.norm(self.xi, axis=1)
        bad = np.nonzero(eta_norm >= 1.0 / ks)[0]
        if bad.size:
            raise ConstructionError(
                f"|eta_k| < 1/k fails at k = {bad[0] + 1}")
        bad = np.nonzero(xi_norm < ks * (1.0 - 1e-12))[0]
        if bad.size:
            raise ConstructionError(f"|xi_k| >= k fails at k = {bad[0] + 1}")
        cosines = (self.xi @ self.omega0) / xi_norm
        bad = np.nonzero(cosines <= 0.5)[0]
        if bad.size:
            raise ConstructionError(
                f"omega_k . omega0 > 1/2 fails at k = {bad[0] + 1}")

    def ell(self, j):
        """ell_j with ell_j <= |xi_j|^(1/2) < ell_j + 1 (1-based j)."""
        if not 1 <= j <= self.count:
            raise ArgumentError(f"index j={j} outside stored range")
        return int(math.floor(math.sqrt(np.linalg.norm(self.xi[j - 1]))))


def demo_zero_sequence(count=10000):
    """Synthetic sequence zeta_k = (k, i/(2k)) in C^2, omega0 = e_1.

    Not attached to any concrete symbol: every checked inequality
    depends only on the sequence's structural invariants.
    """
    ks = np.arange(1, count + 1, dtype=float)
    xi = np.column_stack([ks, np.zeros_like(ks)])
    eta = np.column_stack([np.zeros_like(ks), 1.0 / (2.0 * ks)])
    return ZeroSequence(xi=xi, eta=eta, omega0=np.array([1.0, 0.0]))


def zero_sequence_to_json(zs):
    return {"omega0": list(map(float, zs.omega0)),
            "entries": [{"xi": list(map(float, x)), "eta": list(map(float, e))}
                        for x, e in zip(zs.xi, zs.eta)]}


def zero_sequence_from_json(data):
    entries = data["entries"]
    xi = np.array([e["xi"] for e in entries], dtype=float)
    eta = np.array([e["eta"] for e in entries], dtype=float)
    return ZeroSequence(xi=xi, eta=eta,
                        omega0=np.asarray(data["omega0"], dtype=float))


def load_zero_sequence(path):
    with open(path) as fh:
        return zero_sequence_from_json(json.load(fh))


def save_zero_sequence(zs, path):
    with open(path, "w") as fh:
        json.dump(zero_sequence_to_json(zs), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _series_indices(zs, eps):
    start = int(math.floor(1.0 / eps)) + 1
    if start > zs.count:
        raise ArgumentError("no stored entries beyond k = 1/eps")
    return np.arange(start, zs.count + 1)


def nonanalytic_series(zs, eps=1.0, K_terms=None, j_list=(10, 100, 1000),
                       m=None, sample_count=100, sample_radius=20.0,
                       max_alpha=3, seed=0):
    """Check the lacunary series f = sum_{k>1/eps} e^{i zeta_k . x -
    |xi_k|^(1/2)} for infra-exponential growth yet non-analyticity.

    (i)   |d^a f(x)| <= C_a e^{eps |x|} with the explicit C_a;
    (ii)  optional termwise kernel membership max_k |m(zeta_k)|;
    (iii) Re (omega0 . zeta_k)^(ell_j) >= |xi_k|^(ell_j) / 2^(ell_j + 1)
          whenever |xi_k| >= 6 ell_j / (pi k), in log arithmetic;
    (iv)  the directional-derivative lower bound at 0 whose growth
          ell_j^(2 ell_j) defeats every analyticity radius, with the
          final ell_j^(3 ell_j / 2) comparison reported per j.
    """
    idx = _series_indices(zs, eps)
    if K_terms is not None:
        idx = idx[:int(K_terms)]
    ks = idx.astype(float)
    xi = zs.xi[idx - 1]
    eta = zs.eta[idx - 1]
    xi_norm = np.linalg.norm(xi, axis=1)
    damp = np.exp(-np.sqrt(xi_norm))
    n = zs.omega0.shape[0]
    rep = _new_report("nonanalytic-series", eps=float(eps),
                      terms=int(len(idx)), dimension=n)

    # truncation tail of the coefficient sums, using |xi_k| >= k
    K_last = int(idx[-1])
    tail = {}
    for d in range(max_alpha + 1):
        kk = np.arange(K_last + 1, K_last + 200000)
        vals = (kk + 1.0) ** d * np.exp(-np.sqrt(kk))
        tail[d] = float(vals.sum())
    rep.values["coefficient_tail_bounds"] = tail

    # (i) growth bound at samples
    rng = np.random.default_rng(seed)
    xs = rng.uniform(-sample_radius, sample_radius, size=(sample_count, n))
    phases = np.exp(1j * (xi @ xs.T) - eta @ xs.T)      # (K, S)
    alphas = [tuple(a) for a in _multi_indices(n, max_alpha)]
    zeta = xi + 1j * eta
    worst = math.inf
    for alpha in alphas:
        pref = np.ones(len(idx), dtype=complex)
        for j, a in enumerate(alpha):
            if a:
                pref = pref * (1j * zeta[:, j]) ** a
        deriv = (pref * damp) @ phases                  # (S,)
        d = sum(alpha)
        C_alpha = float(((xi_norm + 1.0) ** d * damp).sum()) + tail[d]
        margin = float(np.min(
            C_alpha * np.exp(eps * np.linalg.norm(xs, axis=1))
            - np.abs(deriv)))
        worst = min(worst, margin)
        rep.add("f1", f"growth |d^{alpha} f| <= C e^(eps|x|)", margin,
                tol=1e-9 * C_alpha)
    rep.values["growth_worst_margin"] = worst

    # (ii) termwise kernel membership
    if m is not None:
        vals = np.abs(eval_symbol(m, zeta))
        rep.values["max_symbol_at_zeros"] = float(vals.max())
        rep.add("f1", "termwise kernel membership max |m(zeta_k)|",
                1e-9 - float(vals.max()))

    # (iii) and (iv) per j
    w_dir = zeta @ zs.omega0.astype(complex)            # omega0 . zeta_k
    arg = np.angle(w_dir)
    logabs = np.log(np.abs(w_dir))
    iii_margins = {}
    iv_rows = {}
    C_small = float((damp / ks ** 2).sum())
    for j in j_list:
        ell = zs.ell(int(j))
        mask = xi_norm >= 6.0 * ell / (math.pi * ks)
        cos_term = np.cos(ell * arg[mask])
        if np.any(cos_term <= 0):
            iii = -math.inf
        else:
            lhs_log = ell * logabs[mask] + np.log(cos_term)
            rhs_log = ell * np.log(xi_norm[mask]) - (ell + 1) * math.log(2.0)
            iii = float(np.min(lhs_log - rhs_log))
        iii_margins[int(j)] = iii
        rep.add("f1", f"interior real-part bound at j={j}", iii)

        # |(-i d_omega0)^ell f(0)| in signed log arithmetic; the k-th
        # term is (omega0.zeta_k)^ell e^{-|xi_k|^(1/2)}, phase ell*arg
        term_logs = ell * logabs - np.sqrt(xi_norm)
        re_val = log_sum(
            LogFloat.from_log(lg + _log_abs(math.cos(ph)), _sgn(math.cos(ph)))
            for lg, ph in zip(term_logs, ell * arg))
        im_val = log_sum(
            LogFloat.from_log(lg + _log_abs(math.sin(ph)), _sgn(math.sin(ph)))
            for lg, ph in zip(term_logs, ell * arg))
        mag2 = re_val * re_val + im_val * im_val
        deriv_log = 0.5 * mag2.log if mag2.sign > 0 else -math.inf
        main = LogFloat.from_log(2.0 * ell * math.log(ell)
                                 - (ell + 1) * math.log(2.0 * math.e))
        noise = LogFloat.from_log(math.log(C_small) + ell * math.log(10.0 * ell))
        lower = main - noise
        margin_iv = LogFloat.from_log(deriv_log) - lower
        ok_iv = margin_iv.sign >= 0
        rep.add("f1", f"derivative lower bound at j={j}",
                margin_iv.sign * math.exp(min(margin_iv.log, 700.0))
                if margin_iv.sign else 0.0)
        final = deriv_log - 1.5 * ell * math.log(ell)
        iv_rows[int(j)] = {"ell": ell, "log_derivative": deriv_log,
                           "log_main": main.log,
                           "log_noise": noise.log if noise.sign else None,
                           "exceeds_l_3l2": bool(final >= 0),
                           "log_final_margin": final}
    rep.values["interior_margins"] = iii_margins
    rep.values["derivative_rows"] = iv_rows
    return rep


def _multi_indices(n, max_total):
    if n == 1:
        return [(d,) for d in range(max_total + 1)]
    out = []
    for total in range(max_total + 1):
        for first in range(total + 1):
            for rest in _multi_indices(n - 1, total - first):
                if sum(rest) == total - first:
                    out.append((first,) + rest)
    return sorted(set(out))


def _sgn(x):
    return 1 if x > 0 else (-1 if x < 0 else 0)


def _log_abs(x):
    ax = abs(x)
    return math.log(ax) if ax > 0 else -math.inf


# ---------------------------------------------------------------------------
# the semi-elliptic strip example
# ---------------------------------------------------------------------------

def semi_elliptic_rate(ell):
    """c_l = 2l (1/(2l+1))^(1 + 1/(2l)), the sharp growth rate in x2."""
    if ell < 1:
        raise ArgumentError("ell must be a positive integer")
    return 2.0 * ell * (1.0 / (2.0 * ell + 1.0)) ** (1.0 + 1.0 / (2.0 * ell))


def _semi_elliptic_deriv_log(ell, alpha, x1, x2, K):
    """log |d^alpha f(x)| via scaled summation; f = sum e^{-i k^m x1 + k x2 - k^m},
    m = 2l+1."""
    mdeg = 2 * ell + 1
    ks = np.arange(1.0, K + 1.0)
    logmag = (mdeg * alpha[0] + alpha[1]) * np.log(ks) + ks * x2 - ks ** mdeg
    phase = -ks ** mdeg * x1 + alpha[0] * (-math.pi / 2)
    top = float(np.max(logmag))
    scaled = np.exp(logmag - top) * np.exp(1j * phase)
    total = complex(scaled.sum())
    if total == 0:
        return -math.inf
    return top + math.log(abs(total))


def semi_elliptic(ell=1, K_terms=1000, N_list=(100,), alphas=None,
                  sample_count=50, seed=0):
    """Kernel element of d11 + d2^(4l+2) analytic only in a strip.

    (i)   termwise operator residual vanishes in exact integer
          arithmetic: (-i k^(2l+1))^2 + k^(4l+2) = 0;
    (ii)  |d^a f| <= C_{l,a} e^{(c_l + 1) x2^(1+1/(2l))} for x2 > 0, with
          the proof's split at k0 = floor(x2^(1/(2l))) + 1 checked too;
    (iii) for each N, the partial sum at z1 = i(1 - N^-(2l+1)/2), x2 = 0
          exceeds N/e (log-domain summation), witnessing the blow-up at
          the strip boundary;
    (iv)  for x2 <= 0 all derivatives are bounded by the explicit
          constant series.
    """
    ell = int(ell)
    if ell < 1:
        raise ArgumentError("ell must be a positive integer")
    N_max = max(int(N) for N in N_list)
    if K_terms < 2 * N_max:
        raise ArgumentError(
            f"K_terms too small for N = {N_max}; need at least {2 * N_max}")
    mdeg = 2 * ell + 1
    c_l = semi_elliptic_rate(ell)
    rep = _new_report("semi-elliptic", ell=ell, c_l=c_l, K_terms=int(K_terms),
                      N_list=[int(N) for N in N_list])
    if alphas is None:
        alphas = [(0, 0), (1, 0), (0, 1), (0, 2)]

    # (i) exact termwise residual, in python integers
    worst_resid = 0
    for k in range(1, min(K_terms, 50) + 1):
        resid = (-1) * (k ** mdeg) ** 2 + k ** (4 * ell + 2)
        worst_resid = max(worst_resid, abs(resid))
    rep.values["termwise_residual"] = worst_resid
    rep.add("Hentest", "termwise operator residual exactly zero",
            0.0 if worst_resid == 0 else -float(worst_resid))

    # (ii) growth bound for x2 > 0 with the proof's split
    rng = np.random.default_rng(seed)
    x1s = rng.uniform(-10.0, 10.0, sample_count)
    x2s = rng.uniform(0.0, 40.0, sample_count)
    from scipy.optimize import minimize_scalar

    for alpha in alphas:
        d = sum(alpha)
        p = (2 * ell + 1) * d + 1
        ks = np.arange(1.0, 2000.0)
        c_small = float(np.sum(ks ** ((2 * ell + 1) * d) * np.exp(-ks)))
        sup_fn = lambda t: -((t ** (2 * d + 1) + 1.0)
                             * math.exp(-t ** (1.0 + 1.0 / (2 * ell))))
        res = minimize_scalar(sup_fn, bounds=(1e-9, 50.0), method="bounded")
        sup_val = -float(res.fun)
        C_la = 2.0 ** p * sup_val + c_small
        worst = math.inf
        worst_split = math.inf
        for x1, x2 in zip(x1s, x2s):
            lhs_log = _semi_elliptic_deriv_log(ell, alpha, x1, x2, K_terms)
            rhs_log = math.log(C_la) + (c_l + 1.0) * x2 ** (1.0 + 1.0 / (2 * ell))
            worst = min(worst, rhs_log - lhs_log)
            # proof split: head <= k0^p e^(c_l x2^(1+1/2l)), tail <= c_small
            k0 = int(math.floor(x2 ** (1.0 / (2 * ell)))) + 1
            ks_head = np.arange(1.0, k0 + 1.0)
            head = float(np.sum(ks_head ** ((2 * ell + 1) * d)
                                * np.exp(ks_head * x2 - ks_head ** mdeg)))
            head_bound = k0 ** p * math.exp(c_l * x2 ** (1.0 + 1.0 / (2 * ell)))
            worst_split = min(worst_split, head_bound - head)
        rep.add("gab", f"growth bound for alpha={alpha}, x2 > 0", worst)
        rep.add("gab", f"split head bound for alpha={alpha}", worst_split,
                tol=1e-9)

    # (iii) blow-up at the strip boundary
    for N in N_list:
        N = int(N)
        y1 = 1.0 - 0.5 * N ** (-float(mdeg))
        ks = np.arange(1.0, K_terms + 1.0)
        exponents = ks ** mdeg * (y1 - 1.0)
        total = log_sum(LogFloat.from_log(e) for e in exponents)
        target = math.log(N) - 1.0
        rep.values[f"log_partial_sum_N{N}"] = total.log
        rep.add("Hentest", f"strip-boundary blow-up exceeds N/e at N={N}",
                total.log - target)

    # (iv) x2 <= 0: uniform derivative bounds
    x1s = rng.uniform(-10.0, 10.0, sample_count)
    x2s = rng.uniform(-40.0, 0.0, sample_count)
    for alpha in alphas:
        d = sum(alpha)
        ks = np.arange(1.0, K_terms + 1.0)
        bound = float(np.sum(ks ** ((2 * ell + 1) * d) * np.exp(-ks ** mdeg)))
        worst = math.inf
        for x1, x2 in zip(x1s, x2s):
            lhs_log = _semi_elliptic_deriv_log(ell, alpha, x1, x2, K_terms)
            worst = min(worst, math.log(bound) - lhs_log)
        rep.add("gab", f"half-plane bound x2 <= 0 for alpha={alpha}", worst,
                tol=1e-12)
    return rep
