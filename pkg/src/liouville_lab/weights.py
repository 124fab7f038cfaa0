"""Submultiplicative weights and their growth functionals.

A weight g : R^n -> [1, oo) controls the admissible growth of the
solutions studied by the rest of the package.  Three families are
built in:

* ``ProductWeight``      g(x) = exp(a|x|^b) (1+|x|)^s log(e+|x|)^t,
                         a, s, t >= 0, 0 <= b < 1;
* ``BorderlineExpWeight`` g(x) = exp(|x| / log(e+|x|)^gamma), gamma > 0,
                         which has summable log-growth iff gamma > 1;
* ``SampledWeight``      tabulated values with log-linear interpolation.

For each ray direction x the module computes the three growth
functionals that appear in all the estimates downstream::

    I(r) = int_{max(r,1)}^oo  log g(tau x) / tau^2          dtau
    J(r) = max(r,1)^{-2} int_0^r log g(tau x)               dtau
    S(r) = (1/pi) int_{-oo}^oo log g(tau x) / (tau^2 + max(r,1)^2) dtau

together with M = sup_{|y|<=1} log g(y) and the constant
C_g = exp(M + I(1)/pi).  Improper integrals are truncated at a horizon
chosen so that a closed-form antiderivative bound on the remainder is
below 1e-10 of the running value; profile entries carry a ``certified``
flag recording whether such a bound was available.
"""

import csv
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (ArgumentError, DivergentWeightError, HullDomainError,
                     QuadratureError)
from .quadrature import geometric_edges, integrate, log_spaced_edges, merged_edges

_TAIL_REL = 1e-10          # analytic tail bound target, relative to the value
_DIVERGENT_HORIZON = 1e15  # truncation used when no tail bound exists
_QUAD_REL = 1e-11


# ---------------------------------------------------------------------------
# weight families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProductWeight:
    """g(x) = exp(a|x|^b) * (1+|x|)^s * log(e+|x|)^t on R^n."""

    a: float = 0.0
    b: float = 0.0
    s: float = 0.0
    t: float = 0.0
    n: int = 1

    def __post_init__(self):
        if self.a < 0 or self.s < 0 or self.t < 0:
            raise ArgumentError("product weight needs a, s, t >= 0")
        if not 0.0 <= self.b < 1.0:
            raise ArgumentError("product weight needs b in [0, 1)")
        if self.n < 1:
            raise ArgumentError("dimension must be a positive integer")

    def log_radial(self, tau):
        tau = np.asarray(tau, dtype=float)
        out = np.zeros_like(tau)
        if self.a:
            out = out + self.a * np.power(tau, self.b)
        if self.s:
            out = out + self.s * np.log1p(tau)
        if self.t:
            out = out + self.t * np.log(np.log(math.e + tau))
        return out

    def log_radial_slope(self, tau):
        """d/dtau log g along a ray; used for norm certification."""
        tau = np.asarray(tau, dtype=float)
        out = np.zeros_like(tau)
        if self.a and self.b > 0:
            out = out + self.a * self.b * np.power(tau, self.b - 1.0)
        if self.s:
            out = out + self.s / (1.0 + tau)
        if self.t:
            out = out + self.t / ((math.e + tau) * np.log(math.e + tau))
        return out

    @property
    def is_radial(self):
        return True

    @property
    def is_trivial(self):
        return self.a == 0 and self.s == 0 and self.t == 0


@dataclass(frozen=True)
class BorderlineExpWeight:
    """g(x) = exp(|x| / log(e+|x|)^gamma); summable log-growth iff gamma > 1."""

    gamma: float
    n: int = 1

    def __post_init__(self):
        if self.gamma <= 0:
            raise ArgumentError("borderline weight needs gamma > 0")
        if self.n < 1:
            raise ArgumentError("dimension must be a positive integer")

    def log_radial(self, tau):
        tau = np.asarray(tau, dtype=float)
        return tau / np.log(math.e + tau) ** self.gamma

    def log_radial_slope(self, tau):
        tau = np.asarray(tau, dtype=float)
        lg = np.log(math.e + tau)
        return (lg - self.gamma * tau / (math.e + tau)) / lg ** (self.gamma + 1.0)

    @property
    def is_radial(self):
        return True

    @property
    def is_trivial(self):
        return False


class SampledWeight:
    """Weight tabulated on scattered points, interpolated linearly in log g.

    Parameters
    ----------
    points : (m, n) array
        Sample locations.  The hull must contain the origin.
    values : (m,) array
        Weight values, all >= 1.
    radial : bool
        Declares that the value depends on |x| only; evaluation then
        interpolates the radial profile and any direction is admissible
        up to the largest sampled radius.
    """

    def __init__(self, points, values, radial=False):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        values = np.asarray(values, dtype=float)
        if points.shape[0] != values.shape[0]:
            raise ArgumentError("points and values must have equal length")
        if np.any(values < 1.0 - 1e-12):
            raise ArgumentError("sampled weight values must be >= 1")
        self.n = points.shape[1]
        self.points = points
        self.values = np.maximum(values, 1.0)
        self.radial = bool(radial)
        logs = np.log(self.values)
        if self.radial:
            radii = np.linalg.norm(points, axis=1)
            order = np.argsort(radii)
            self._radii = radii[order]
            self._rlogs = logs[order]
            self.hull_radius = float(self._radii[-1])
            if self._radii[0] > 1e-9:
                # anchor the profile at the origin with g(0) >= 1
                self._radii = np.concatenate([[0.0], self._radii])
                self._rlogs = np.concatenate([[0.0], self._rlogs])
        elif self.n == 1:
            x = points[:, 0]
            order = np.argsort(x)
            self._x1 = x[order]
            self._logs1 = logs[order]
            if not self._x1[0] <= 0.0 <= self._x1[-1]:
                raise ArgumentError("sample hull must contain the origin")
            self.hull_radius = float(np.max(np.abs(x)))
        else:
            from scipy.interpolate import LinearNDInterpolator

            self._interp = LinearNDInterpolator(points, logs)
            if not np.isfinite(self._interp(np.zeros(self.n))[()]):
                raise ArgumentError("sample hull must contain the origin")
            self.hull_radius = float(np.max(np.linalg.norm(points, axis=1)))

    @property
    def is_radial(self):
        return self.radial

    @property
    def is_trivial(self):
        return False

    def log_radial(self, tau):
        if not self.radial:
            raise ArgumentError("weight is not declared radial")
        tau = np.asarray(tau, dtype=float)
        if np.any(tau > self.hull_radius * (1 + 1e-12)):
            raise HullDomainError(
                f"query outside sampled hull (radius {self.hull_radius:g})")
        return np.interp(tau, self._radii, self._rlogs)

    def log_at(self, x):
        """log g at points x, shape (..., n)."""
        x = np.asarray(x, dtype=float)
        if self.radial:
            return self.log_radial(np.linalg.norm(x, axis=-1))
        if self.n == 1:
            xx = x[..., 0]
            if np.any(xx < self._x1[0] - 1e-12) or np.any(xx > self._x1[-1] + 1e-12):
                raise HullDomainError(
                    f"query outside sampled hull (radius {self.hull_radius:g})")
            return np.interp(xx, self._x1, self._logs1)
        vals = self._interp(x.reshape(-1, self.n)).reshape(x.shape[:-1])
        if np.any(~np.isfinite(vals)):
            raise HullDomainError(
                f"query outside sampled hull (radius {self.hull_radius:g})")
        return vals

    def ray_exit(self, direction):
        """Largest tau with tau*direction inside the hull."""
        if self.radial:
            return self.hull_radius
        lo, hi = 0.0, self.hull_radius * (1 + 1e-9)
        if self._ray_ok(direction, hi):
            return hi
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if self._ray_ok(direction, mid):
                lo = mid
            else:
                hi = mid
        return lo

    def _ray_ok(self, direction, tau):
        try:
            v = self.log_at(np.asarray(direction) * tau)
        except HullDomainError:
            return False
        return bool(np.all(np.isfinite(v)))


class RotatedWeight:
    """View of ``base`` composed with an orthogonal matrix: g(Ax)."""

    def __init__(self, base, matrix):
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (base.n, base.n):
            raise ArgumentError("rotation matrix has wrong shape")
        if not np.allclose(matrix @ matrix.T, np.eye(base.n), atol=1e-10):
            raise ArgumentError("matrix is not orthogonal")
        self.base = base
        self.matrix = matrix
        self.n = base.n

    @property
    def is_radial(self):
        return self.base.is_radial

    @property
    def is_trivial(self):
        return getattr(self.base, "is_trivial", False)


def eval_weight(w, x):
    """Evaluate g at a single point or an array of points (..., n)."""
    return np.exp(log_weight(w, x))


def log_weight(w, x):
    x = np.asarray(x, dtype=float)
    if x.shape == () and w.n == 1:
        x = x.reshape(1)
    if x.shape[-1] != w.n:
        raise ArgumentError(f"point dimension {x.shape[-1]} != weight dimension {w.n}")
    if isinstance(w, RotatedWeight):
        return log_weight(w.base, x @ w.matrix.T)
    if isinstance(w, SampledWeight):
        return w.log_at(x)
    return w.log_radial(np.linalg.norm(x, axis=-1))


def default_directions(n):
    """Direction set used for sphere suprema of non-radial weights."""
    if n == 1:
        return np.array([[1.0], [-1.0]])
    if n == 2:
        ang = np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False)
        return np.column_stack([np.cos(ang), np.sin(ang)])
    if n == 3:
        dirs = []
        for i in range(3):
            for sgn in (1.0, -1.0):
                e = np.zeros(3)
                e[i] = sgn
                dirs.append(e)
        for sx in (1.0, -1.0):
            for sy in (1.0, -1.0):
                for sz in (1.0, -1.0):
                    dirs.append(np.array([sx, sy, sz]) / math.sqrt(3.0))
        return np.array(dirs)
    raise ArgumentError("numerical sphere suprema support n <= 3 only")


# ---------------------------------------------------------------------------
# ray integrand with analytic tails
# ---------------------------------------------------------------------------

class _Ray:
    """log g along one ray, extended past a sampled hull by an envelope.

    Provides ``phi`` (vectorized), an analytic bound on
    int_T^oo phi/tau^2 (or None when the integral diverges), and flags
    describing whether the tail control is certified.
    """

    def __init__(self, w, direction):
        direction = np.asarray(direction, dtype=float)
        if abs(np.linalg.norm(direction) - 1.0) > 1e-9:
            raise ArgumentError("direction must be a unit vector")
        while isinstance(w, RotatedWeight):
            direction = w.matrix @ direction
            w = w.base
        self.weight = w
        self.direction = direction
        self.summable = True
        self.certified = True
        self.envelope = None
        self.hull_exit = math.inf
        if isinstance(w, BorderlineExpWeight) and w.gamma <= 1.0:
            self.summable = False
            self.certified = False
        if isinstance(w, SampledWeight):
            self.hull_exit = w.ray_exit(direction)
            self._fit_envelope()

    # -- evaluation ----------------------------------------------------
    def phi(self, tau):
        tau = np.asarray(tau, dtype=float)
        w = self.weight
        if isinstance(w, SampledWeight):
            inside = tau <= self.hull_exit
            out = np.empty_like(tau)
            if np.any(inside):
                pts = tau[inside, None] * self.direction[None, :]
                out[inside] = w.log_at(pts)
            if np.any(~inside):
                A, p = self.envelope
                out[~inside] = A + p * np.log1p(tau[~inside])
            return out
        return w.log_radial(tau)

    def _fit_envelope(self):
        """Least-squares power-growth envelope A + p*log(1+tau) past the hull."""
        exit_r = self.hull_exit
        if exit_r <= 0:
            self.envelope = (0.0, 0.0)
            self.certified = False
            return
        taus = np.linspace(max(exit_r * 0.5, exit_r - 10.0, 1e-3), exit_r, 33)
        pts = taus[:, None] * self.direction[None, :]
        phis = self.weight.log_at(pts)
        basis = np.column_stack([np.ones_like(taus), np.log1p(taus)])
        coef, *_ = np.linalg.lstsq(basis, phis, rcond=None)
        resid = phis - basis @ coef
        A = float(coef[0] + max(0.0, resid.max()))
        p = float(coef[1])
        scale = max(1.0, float(np.max(np.abs(phis))))
        ok = float(np.max(np.abs(resid))) <= 0.15 * scale and p > -1e-9
        self.envelope = (A, max(p, 0.0))
        self.certified = ok
        self.summable = True  # power growth always integrates

    # -- analytic tails -------------------------------------------------
    def tail_bracket(self, T):
        """Closed-form bracket (lo, hi) for int_T^oo phi(tau)/tau^2 dtau.

        Product weights: the a- and s-parts have exact antiderivatives;
        only the iterated-log part carries a (tiny) one-sided slack.
        Borderline weights: substituting v = log(e+tau) gives
        dtau = (1 + e/tau) dv, so the remainder is squeezed between
        v_T^(1-gamma)/(gamma-1) and (1+e/T) times the same.
        Returns None when the integral diverges (gamma <= 1).
        """
        w = self.weight
        if isinstance(w, ProductWeight):
            lo = hi = 0.0
            if w.a:
                exact = w.a * T ** (w.b - 1.0) / (1.0 - w.b)
                lo += exact
                hi += exact
            if w.s:
                exact = w.s * (math.log1p(T) / T + math.log1p(1.0 / T))
                lo += exact
                hi += exact
            if w.t:
                lg = math.log(math.e + T)
                lo += w.t * math.log(lg) / T
                hi += w.t * (math.log(lg) / T + 1.0 / (T * lg))
            return lo, hi
        if isinstance(w, BorderlineExpWeight):
            if w.gamma <= 1.0:
                return None
            v = math.log(math.e + T)
            lo = v ** (1.0 - w.gamma) / (w.gamma - 1.0)
            return lo, lo * (1.0 + math.e / T)
        A, p = self.envelope
        exact = max(A / T + p * (math.log1p(T) / T + math.log1p(1.0 / T)), 0.0)
        return exact, exact

    def tail_bound(self, T):
        """Upper bound for int_T^oo phi(tau)/tau^2 dtau, or None."""
        br = self.tail_bracket(T)
        return None if br is None else br[1]


def _ray(w, direction):
    return _Ray(w, direction)


def _solve_horizon(ray, T0, value_estimate, extra_halfwidth=None):
    """Smallest power-of-4 multiple of T0 whose tail bracket is tight.

    "Tight" means the bracket half-width (plus any kernel-replacement
    slack supplied by ``extra_halfwidth(T, hi)``) drops below _TAIL_REL
    of the running value.  Bracket calls are closed-form scalars, so the
    search costs nothing compared to quadrature sweeps.
    """
    T = T0
    target = max(_TAIL_REL * abs(value_estimate), 1e-300)
    for _ in range(60):
        br = ray.tail_bracket(T)
        if br is None:
            return _DIVERGENT_HORIZON, False
        lo, hi = br
        halfw = 0.5 * (hi - lo)
        if extra_halfwidth is not None:
            halfw += extra_halfwidth(T, hi)
        if halfw <= target:
            return T, ray.certified
        T *= 4.0
    return T, False


def _tail_integral(ray, L, rel=_QUAD_REL):
    """(int_L^oo phi/tau^2, certified, residual_halfwidth).

    The mass of phi(tau)/tau^2 sits near L, so a first pass over
    [L, 64 L] estimates the value, the analytic bracket then fixes the
    truncation horizon, one log-spaced sweep covers the rest, and the
    bracket midpoint accounts for the remainder.
    """
    if getattr(ray.weight, "is_trivial", False):
        return 0.0, True, 0.0
    f = lambda tau: ray.phi(tau) / tau ** 2
    T0 = max(64.0 * L, 1e4)
    acc = integrate(f, L, T0, rel_tol=rel,
                    seed_edges=log_spaced_edges(L, T0, per_octave=2)).value
    T, certified = _solve_horizon(ray, T0, acc)
    if T > T0:
        acc += integrate(f, T0, T, rel_tol=rel,
                         seed_edges=log_spaced_edges(T0, T, per_octave=1)).value
    br = ray.tail_bracket(T)
    if br is None:
        return acc, False, math.inf
    lo, hi = br
    return acc + 0.5 * (lo + hi), certified, 0.5 * (hi - lo)


def _poisson_side(ray, R, rel=_QUAD_REL):
    """int_0^oo phi(tau)/(tau^2+R^2) dtau with certified truncation.

    Past the horizon the kernel is replaced by 1/tau^2, which brackets
    the true tail between T^2/(T^2+R^2) and 1 times the 1/tau^2 tail.
    """
    if getattr(ray.weight, "is_trivial", False):
        return 0.0, True
    f = lambda tau: ray.phi(tau) / (tau ** 2 + R ** 2)
    inner_edges = geometric_edges(0.0, R, anchor=0.0, levels=40)
    acc = integrate(f, 0.0, R, rel_tol=rel, seed_edges=inner_edges).value
    T0 = max(64.0 * R, 1e4)
    acc += integrate(f, R, T0, rel_tol=rel,
                     seed_edges=log_spaced_edges(R, T0, per_octave=2)).value
    kernel_slack = lambda T, hi: 0.5 * hi * R ** 2 / (T ** 2 + R ** 2)
    T, certified = _solve_horizon(ray, T0, acc, extra_halfwidth=kernel_slack)
    if T > T0:
        acc += integrate(f, T0, T, rel_tol=rel,
                         seed_edges=log_spaced_edges(T0, T, per_octave=1)).value
    br = ray.tail_bracket(T)
    if br is None:
        return acc, False
    lo, hi = br
    lo *= T ** 2 / (T ** 2 + R ** 2)
    return acc + 0.5 * (lo + hi), certified


def _window_integral(ray, r, rel=_QUAD_REL):
    """int_0^r phi(tau) dtau (the numerator of J)."""
    if r <= 0 or getattr(ray.weight, "is_trivial", False):
        return 0.0
    edges = geometric_edges(0.0, r, anchor=0.0, levels=40)
    return integrate(ray.phi, 0.0, r, rel_tol=rel, seed_edges=edges).value


def _ray_max(ray, lo, hi):
    """max of phi over [lo, hi] by grid plus parabolic refinement."""
    taus = np.linspace(lo, hi, 2049)
    vals = ray.phi(taus)
    k = int(np.argmax(vals))
    best = float(vals[k])
    a = taus[max(k - 1, 0)]
    b = taus[min(k + 1, len(taus) - 1)]
    if b > a:
        from scipy.optimize import minimize_scalar

        res = minimize_scalar(lambda t: -float(ray.phi(np.array([t]))[0]),
                              bounds=(a, b), method="bounded",
                              options={"xatol": 1e-12})
        best = max(best, float(-res.fun))
    return best


# ---------------------------------------------------------------------------
# submultiplicativity
# ---------------------------------------------------------------------------

@dataclass
class SubmultReport:
    checked: int
    radius: float
    tol: float
    violations: list


def check_submultiplicative(w, count=10000, radius=None, seed=0, tol=1e-12):
    """Sample pairs (x, y) and list every g(x+y) > g(x) g(y) (1+tol).

    Report-only: built-in families are submultiplicative, so an empty
    violation list is the expected outcome for them; sampled weights may
    genuinely fail (e.g. super-exponential tables).
    """
    if count < 1:
        raise ArgumentError("sample count must be positive")
    if radius is None:
        radius = 10.0
        hull = getattr(w, "hull_radius", None)
        if hull is not None:
            radius = hull / 2.0
    rng = np.random.default_rng(seed)
    x = rng.uniform(-radius, radius, size=(count, w.n))
    y = rng.uniform(-radius, radius, size=(count, w.n))
    lx = log_weight(w, x)
    ly = log_weight(w, y)
    lxy = log_weight(w, x + y)
    excess = lxy - lx - ly
    bad = excess > math.log1p(tol)
    violations = [(x[i].copy(), y[i].copy(), float(math.exp(excess[i])))
                  for i in np.nonzero(bad)[0][:1000]]
    return SubmultReport(checked=count, radius=radius, tol=tol,
                         violations=violations)


# ---------------------------------------------------------------------------
# Beurling-Domar classification
# ---------------------------------------------------------------------------

@dataclass
class BeurlingDomarReport:
    verdict: str              # "converges" | "diverges" | "inconclusive"
    partial_value: float      # int_1^T log g(tau x)/tau^2 dtau
    tail_window: float        # contribution of [T/2, T]
    tail_bound: float         # analytic bound past T (inf if none)
    lower_bound_growth: float # relative increment per squaring of horizon
    grs_estimate: float       # g(l x)^{1/l} at the largest probed l
    heuristic: bool
    horizon: float
    direction: np.ndarray = field(repr=False, default=None)


def check_beurling_domar(w, direction=None, horizon=1e12, tol=5e-3,
                         divergence_threshold=None):
    """Classify the log-growth integral int_1^oo log g(tau x)/tau^2 dtau.

    The integral criterion is equivalent to the defining series up to
    +-M/L, so a single quadrature in u = log(tau) settles both.  Verdicts:

    * ``converges``  -- the family tail is analytically summable and the
      contribution of [T/2, T] is below ``tol``;
    * ``diverges``   -- the running integral exceeds the divergence
      threshold and is still growing by more than 5% per squaring of the
      horizon (a heuristic: divergence has no finite certificate);
    * ``inconclusive`` otherwise.

    Also reports the multiplicative-limit estimate g(l x)^{1/l} at the
    largest probed l (advisory: the condition is a limit statement).
    """
    if horizon < math.e:
        raise ArgumentError("horizon must be at least e")
    if direction is None:
        direction = np.zeros(w.n)
        direction[0] = 1.0
    direction = np.asarray(direction, dtype=float)
    if abs(np.linalg.norm(direction) - 1.0) > 1e-9:
        raise ArgumentError("direction must be a unit vector")
    ray = _ray(w, direction)

    u_end = math.log(horizon)
    g = lambda u: ray.phi(np.exp(u)) * np.exp(-u)

    def seg(u0, u1):
        if u1 <= u0:
            return 0.0
        edges = np.linspace(u0, u1, max(3, int(math.ceil(u1 - u0)) + 1))
        return integrate(g, u0, u1, rel_tol=1e-10, seed_edges=edges).value

    f_half = seg(0.0, u_end / 2.0)                      # up to sqrt(T)
    f_mid = f_half + seg(u_end / 2.0, u_end - math.log(2.0))
    tail_window = seg(u_end - math.log(2.0), u_end)     # [T/2, T]
    f_full = f_mid + tail_window

    bound = ray.tail_bound(horizon)
    bound = math.inf if bound is None else bound
    growth = (f_full - f_half) / f_half if f_half > 0 else 0.0

    if divergence_threshold is None:
        divergence_threshold = max(1.0, math.log(math.log(horizon)) - 1.0)

    heuristic = False
    if ray.summable and tail_window < tol:
        verdict = "converges"
    elif f_full > divergence_threshold and growth > 0.05:
        verdict = "diverges"
        heuristic = True
    else:
        verdict = "inconclusive"

    l_probe = 2.0 ** min(38, int(math.log2(horizon)))
    grs = math.exp(float(ray.phi(np.array([l_probe]))[0]) / l_probe)

    return BeurlingDomarReport(
        verdict=verdict, partial_value=f_full, tail_window=tail_window,
        tail_bound=bound, lower_bound_growth=growth, grs_estimate=grs,
        heuristic=heuristic, horizon=horizon, direction=direction)


def beurling_domar_series(w, direction, l_start, l_stop):
    """Partial sum of log g(l x)/l^2 for l in [l_start, l_stop]."""
    ray = _ray(w, direction)
    ls = np.arange(l_start, l_stop + 1, dtype=float)
    return float(np.sum(ray.phi(ls) / ls ** 2))


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

@dataclass
class WeightProfile:
    """Tabulated growth functionals of one weight on a radius grid."""

    r_grid: np.ndarray
    I: np.ndarray
    J: np.ndarray
    S: np.ndarray
    certified: np.ndarray
    M: float
    C_g: float
    directions: np.ndarray
    argmax_direction: np.ndarray  # index of the direction achieving S
    weight: object = field(repr=False, default=None)
    _r_eps_cache: dict = field(default_factory=dict, repr=False)

    def r_eps(self, eps):
        """Uniform tail radius R_eps (cached)."""
        key = float(eps)
        if key not in self._r_eps_cache:
            self._r_eps_cache[key] = find_uniform_tail_radius(
                self.weight, eps, directions=self.directions)
        return self._r_eps_cache[key]

    def to_csv(self, path):
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["r", "I", "J", "S", "certified"])
            for r, i, j, s, c in zip(self.r_grid, self.I, self.J, self.S,
                                     self.certified):
                writer.writerow([repr(float(r)), repr(float(i)),
                                 repr(float(j)), repr(float(s)),
                                 "true" if c else "false"])

    def interp_S(self, r):
        return float(np.interp(max(float(r), self.r_grid[0]), self.r_grid, self.S))


def _profile_directions(w, directions):
    if directions is not None:
        dirs = np.atleast_2d(np.asarray(directions, dtype=float))
        if dirs.shape[1] != w.n:
            raise ArgumentError("direction dimension mismatch")
        return dirs
    if w.is_radial:
        e1 = np.zeros(w.n)
        e1[0] = 1.0
        return e1[None, :]
    return default_directions(w.n)


def compute_profile(w, r_grid, directions=None):
    """Compute I, J, S (sphere suprema) on ``r_grid`` plus M and C_g.

    For radial weights a single direction carries the supremum; sampled
    non-radial weights are scanned over a fixed direction set and the
    maximizing direction is recorded per radius.
    """
    r_grid = np.asarray(r_grid, dtype=float)
    if r_grid.size == 0:
        raise ArgumentError("r_grid must be non-empty")
    if np.any(np.diff(r_grid) <= 0) or np.any(r_grid < 0):
        raise ArgumentError("r_grid must be strictly increasing and >= 0")
    dirs = _profile_directions(w, directions)
    rays = [_ray(w, d) for d in dirs]
    # Opposite rays feed the two half-lines of S; match them up.
    opp = []
    for d in dirs:
        cand = [k for k, e in enumerate(dirs) if np.allclose(e, -d, atol=1e-12)]
        opp.append(cand[0] if cand else None)

    n_r = len(r_grid)
    I = np.zeros(n_r)
    J = np.zeros(n_r)
    S = np.zeros(n_r)
    cert = np.ones(n_r, dtype=bool)
    argmax = np.zeros(n_r, dtype=int)

    side_cache = {}

    def poisson_side(k, R):
        key = (k, R)
        if key not in side_cache:
            side_cache[key] = _poisson_side(rays[k], R)
        return side_cache[key]

    for idx, r in enumerate(r_grid):
        R = max(r, 1.0)
        best_S = -math.inf
        for k, ray in enumerate(rays):
            val_I, ok_I, _ = _tail_integral(ray, R)
            val_J = _window_integral(ray, r) / R ** 2
            plus, ok_p = poisson_side(k, R)
            if opp[k] is not None:
                minus, ok_m = poisson_side(opp[k], R)
            elif w.is_radial:
                minus, ok_m = plus, ok_p
            else:
                mirror = _ray(w, -ray.direction)
                minus, ok_m = _poisson_side(mirror, R)
            val_S = (plus + minus) / math.pi
            I[idx] = max(I[idx], val_I)
            J[idx] = max(J[idx], val_J)
            if val_S > best_S:
                best_S = val_S
                argmax[idx] = k
            cert[idx] &= ok_I and ok_p and ok_m
        S[idx] = best_S

    M = max(_ray_max(ray, 0.0, 1.0) for ray in rays)
    I1 = max(_tail_integral(ray, 1.0)[0] for ray in rays)
    C_g = math.exp(M + I1 / math.pi)
    return WeightProfile(r_grid=r_grid, I=I, J=J, S=S, certified=cert, M=M,
                         C_g=C_g, directions=dirs, argmax_direction=argmax,
                         weight=w)


def profile_point(w, r, directions=None):
    """S_g at a single radius (sphere supremum), without a full profile."""
    prof = compute_profile(w, np.array([max(float(r), 0.0) if r > 0 else 0.0]),
                           directions=directions)
    return float(prof.S[0]), bool(prof.certified[0])


def box_log_sup(w, directions=None):
    """sup of log g over the unit cube [-1, 1]^n (the constant M_1)."""
    if w.is_radial:
        ray = _ray(w, _profile_directions(w, None)[0])
        return _ray_max(ray, 0.0, math.sqrt(w.n))
    dirs = _profile_directions(w, directions)
    best = 0.0
    for d in dirs:
        # largest tau with tau*d inside the cube
        tmax = 1.0 / float(np.max(np.abs(d)))
        ray = _ray(w, d)
        hull = getattr(ray, "hull_exit", math.inf)
        best = max(best, _ray_max(ray, 0.0, min(tmax, hull)))
    return best


def growth_factor(w, y, directions=None):
    """The multiplicative factor exp(S(|y|) |y|) used by every main bound."""
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if y.shape != (w.n,):
        raise ArgumentError("y must be a point in R^n")
    r = float(np.linalg.norm(y))
    if r == 0.0:
        return 1.0
    S, cert = profile_point(w, r, directions=directions)
    if not cert:
        raise QuadratureError("uncertified growth functional at |y|="
                              f"{r:g}; tail bound unavailable")
    exponent = S * r
    return math.exp(exponent) if exponent < 709 else math.inf


def find_uniform_tail_radius(w, eps, directions=None):
    """Smallest radius R (up to 1%) with int_R^oo log g(tau x)/tau^2 < eps
    simultaneously over the supplied directions.

    Raises DivergentWeightError when any direction fails the convergence
    classification, since then no finite radius exists.
    """
    if eps <= 0:
        raise ArgumentError("eps must be positive")
    dirs = _profile_directions(w, directions)
    rays = []
    for d in dirs:
        report = check_beurling_domar(w, d)
        if report.verdict != "converges":
            raise DivergentWeightError(
                "Beurling-Domar violated along direction "
                f"{np.array2string(d, precision=3)}")
        rays.append(_ray(w, d))
        if w.is_radial:
            break

    def worst_tail(R):
        worst = 0.0
        for ray in rays:
            val, _, halfw = _tail_integral(ray, R)
            worst = max(worst, val + halfw)
        return worst

    lo = 1.0
    if worst_tail(lo) < eps:
        return lo
    hi = 2.0
    for _ in range(80):
        if worst_tail(hi) < eps:
            break
        hi *= 2.0
    else:
        raise QuadratureError("tail radius search did not converge")
    lo = hi / 2.0
    while hi / lo > 1.01:
        mid = math.sqrt(lo * hi)
        if worst_tail(mid) < eps:
            hi = mid
        else:
            lo = mid
    return hi


def product_exp_rate_closed_form(a, b, r):
    """Closed form of S for the pure-exponential weight exp(a|x|^b)."""
    R = max(float(r), 1.0)
    return a * R ** (b - 1.0) / math.sin((1.0 - b) * math.pi / 2.0)


# ---------------------------------------------------------------------------
# JSON schema
# ---------------------------------------------------------------------------

def weight_to_json(w):
    if isinstance(w, ProductWeight):
        return {"family": "product", "n": w.n, "a": w.a, "b": w.b,
                "s": w.s, "t": w.t}
    if isinstance(w, BorderlineExpWeight):
        return {"family": "borderline", "n": w.n, "gamma": w.gamma}
    if isinstance(w, SampledWeight):
        return {"family": "sampled", "n": w.n, "radial": w.radial,
                "samples": [[list(map(float, p)), float(v)]
                            for p, v in zip(w.points, w.values)]}
    raise ArgumentError(f"cannot serialize weight of type {type(w).__name__}")


def weight_from_json(data):
    family = data.get("family")
    n = int(data.get("n", 1))
    if family == "product":
        return ProductWeight(a=float(data.get("a", 0.0)),
                             b=float(data.get("b", 0.0)),
                             s=float(data.get("s", 0.0)),
                             t=float(data.get("t", 0.0)), n=n)
    if family == "borderline":
        return BorderlineExpWeight(gamma=float(data["gamma"]), n=n)
    if family == "sampled":
        pts = [p for p, _ in data["samples"]]
        vals = [v for _, v in data["samples"]]
        return SampledWeight(np.asarray(pts, dtype=float).reshape(len(vals), n),
                             vals, radial=bool(data.get("radial", False)))
    raise ArgumentError(f"unknown weight family {family!r}")


def load_weight(path):
    with open(path) as fh:
        return weight_from_json(json.load(fh))


def save_weight(w, path):
    with open(path, "w") as fh:
        json.dump(weight_to_json(w), fh, indent=2, sort_keys=True)
        fh.write("\n")
