"""Command-line driver: load JSON configs, run verifications, emit reports.

Subcommands::

    weights        check | profile
    estimate       tent | outer | lemma-x1
    multiplier     zeros | mollifier | tauberian | liouville | converse
    counterexample harmonic-power | sqrt-cosine | series | semi-elliptic

Exit status: 0 when every checked inequality passes, 1 on a verification
failure (stdout names the failing inequality by its tag), 2 on a
configuration error.  Reports are byte-deterministic for a fixed config
and seed.  LIOUVILLE_LAB_THREADS caps worker threads.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import counterexamples as cex
from . import entire as emod
from . import multiplier as mmod
from . import weights as wmod
from ._parallel import parallel_map
from .errors import HypothesisViolationError, LiouvilleLabError
from .reports import ReportRow, row_from_bound, rows_from_margins, write_report
from .svg import write_svg


class ConfigError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc


def _resolve(args, key, loader, required=True):
    """Fetch an input object from a flag path or the --config payload."""
    value = getattr(args, key, None)
    if value is None and getattr(args, "config", None):
        cfg = _load_json(args.config)
        value = cfg.get(key)
    if value is None:
        if required:
            raise ConfigError(f"missing required input --{key}")
        return None
    if isinstance(value, str):
        return loader(_load_json(value))
    return loader(value)


def _config_option(args, key, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if getattr(args, "config", None):
        cfg = _load_json(args.config)
        if key in cfg:
            return cfg[key]
    return default


def _parse_floats(text):
    return [float(v) for v in str(text).split(",") if str(v).strip()]


def _emit(args, subcommand, rows, extra=None):
    text = write_report(getattr(args, "out", None) if str(
        getattr(args, "out", "") or "").endswith(".json") else None,
        subcommand, rows, seed=getattr(args, "seed", 0), extra=extra)
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        cert = "" if r.certified else " [uncertified]"
        margin = "" if r.margin is None else f" margin={_fmt(r.margin)}"
        print(f"{status} [{r.tag}] {r.name}{margin}{cert}")
    n_unc = sum(1 for r in rows if not r.certified)
    if n_unc:
        print(f"note: {n_unc} uncertified entr{'y' if n_unc == 1 else 'ies'}")
    ok = all(r.passed for r in rows)
    print(("OK" if ok else "FAILED") + f": {subcommand}")
    return 0 if ok else 1


def _fmt(v):
    try:
        return f"{float(v):.6g}"
    except (TypeError, ValueError):
        return str(v)


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def cmd_weights_check(args):
    w = _resolve(args, "weight", wmod.weight_from_json)
    seed = int(_config_option(args, "seed", 0) or 0)
    tol = float(_config_option(args, "tol", 1e-12) or 1e-12)
    rows = []
    sub = wmod.check_submultiplicative(w, count=10000, seed=seed, tol=tol)
    rows.append(ReportRow(tag="submult", name="sampled submultiplicativity",
                          margin=-len(sub.violations),
                          passed=not sub.violations))
    bd = wmod.check_beurling_domar(w)
    rows.append(ReportRow(
        tag="B-D", name=f"log-growth integral verdict: {bd.verdict}",
        lhs=bd.partial_value, rhs=bd.tail_window,
        margin=None, certified=not bd.heuristic,
        passed=bd.verdict == "converges"))
    rows.append(ReportRow(tag="B-D", name="multiplicative limit estimate "
                          f"g(lx)^(1/l) = {bd.grs_estimate:.8f}",
                          margin=None, passed=True))
    return _emit(args, "weights check", rows,
                 extra={"verdict": bd.verdict,
                        "partial_value": bd.partial_value,
                        "grs_estimate": bd.grs_estimate})


def cmd_weights_profile(args):
    w = _resolve(args, "weight", wmod.weight_from_json)
    rmax = float(_config_option(args, "rmax", 100.0) or 100.0)
    grid = np.unique(np.concatenate([[0.25, 0.5, 0.75],
                                     np.arange(1.0, rmax + 0.5)]))
    prof = wmod.compute_profile(w, grid)
    out = _config_option(args, "out")
    if out:
        prof.to_csv(out)
    rows = []
    r1 = grid >= 1.0
    lo = np.maximum(prof.I, prof.J) / (2 * math.pi)
    hi = (2 / math.pi) * (prof.I + prof.J)
    rows.append(ReportRow(tag="upperx", name="sandwich upper bound",
                          margin=float(np.min((hi - prof.S)[r1])),
                          certified=bool(prof.certified.all()),
                          passed=bool(np.all(prof.S[r1] <= hi[r1] + 1e-9))))
    rows.append(ReportRow(tag="lowerx", name="sandwich lower bound",
                          margin=float(np.min((prof.S - lo)[r1])),
                          passed=bool(np.all(prof.S[r1] >= lo[r1] - 1e-9))))
    rows.append(ReportRow(tag="Sgdecr", name="profile nonincreasing, "
                          "constant below 1",
                          margin=float(-max(np.max(np.diff(prof.S)), 0.0)),
                          passed=bool(np.all(np.diff(prof.S) <= 1e-12))))
    if args.svg:
        write_svg(args.svg, [("S(r)", grid, prof.S), ("I(r)", grid, prof.I),
                             ("J(r)", grid, prof.J)],
                  title="growth functionals", xlabel="r")
    return _emit(args, "weights profile", rows,
                 extra={"M": prof.M, "C_g": prof.C_g})


# ---------------------------------------------------------------------------
# estimates
# ---------------------------------------------------------------------------

def cmd_estimate_tent(args):
    f = _resolve(args, "function", emod.function_from_json)
    w = _resolve(args, "weight", wmod.weight_from_json)
    ys = _parse_floats(_config_option(args, "ygrid", "0.5,1,2,5"))
    order = int(_config_option(args, "k", 0) or 0)
    alpha = tuple([order] + [0] * (f.n - 1))

    def one(r):
        y = np.zeros(f.n)
        y[0] = r
        return row_from_bound(emod.verify_tent(f, w, y, alpha=alpha),
                              name=f"shifted-derivative bound at y={r:g} e1")

    rows = parallel_map(one, ys)
    return _emit(args, "estimate tent", rows)


def cmd_estimate_outer(args):
    w = _resolve(args, "weight", wmod.weight_from_json)
    xs = _parse_floats(_config_option(args, "ygrid", "0,1,-1,5,-5"))
    rows = []
    for x in xs:
        lm = emod.outer_log_modulus(w, x, 1e-3)
        g = float(np.exp(wmod.log_weight(w, np.array([x]))))
        rel = abs(math.exp(lm) - g) / g
        rows.append(ReportRow(tag="optimal",
                              name=f"boundary modulus at x={x:g}",
                              lhs=math.exp(lm), rhs=g, margin=1e-3 - rel,
                              passed=rel <= 1e-3))
    for y in (1.0, 2.0, 5.0, 10.0):
        S, cert = wmod.profile_point(w, y)
        lm = emod.outer_log_modulus(w, 0.0, y)
        rel = abs(math.expm1(lm - S * y))
        rows.append(ReportRow(tag="optimal",
                              name=f"imaginary-axis modulus at y={y:g}",
                              lhs=lm, rhs=S * y, margin=1e-4 - rel,
                              certified=cert, passed=rel <= 1e-4))
    if args.svg:
        ys = np.linspace(1.0, 10.0, 19)
        write_svg(args.svg,
                  [("log|phi(iy)|", ys,
                    [emod.outer_log_modulus(w, 0.0, float(y)) for y in ys])],
                  title="outer function on the imaginary axis", xlabel="y")
    return _emit(args, "estimate outer", rows)


def cmd_estimate_lemma_x1(args):
    f = _resolve(args, "function", emod.function_from_json)
    if f.n != 1:
        raise ConfigError("lemma-x1 verification runs on n = 1 functions")
    ys = _parse_floats(_config_option(args, "ygrid", "0.1,0.5,1,2,5,10"))
    xs = np.arange(-5.0, 5.01, 0.5)
    rows = []
    for y in ys:
        margins = [emod.poisson_majorant_margin(f, float(x), y)[0] for x in xs]
        rows.append(ReportRow(tag="k", name=f"half-plane majorant at y={y:g}",
                              margin=float(min(margins)),
                              passed=min(margins) >= -1e-6))
    return _emit(args, "estimate lemma-x1", rows)


# ---------------------------------------------------------------------------
# multipliers
# ---------------------------------------------------------------------------

def cmd_multiplier_zeros(args):
    m = _resolve(args, "symbol", mmod.symbol_from_json)
    box = float(_config_option(args, "rmax", 10.0) or 10.0)
    tol = float(_config_option(args, "tol", 1e-9) or 1e-9)
    zs = mmod.zero_set(m, box=box, tol=tol)
    out = _config_option(args, "out")
    payload = {"classification": zs.classification,
               "points": zs.points.tolist(),
               "hull_points": zs.hull_points.tolist(),
               "resolution": zs.resolution, "box": zs.box,
               "min_boundary_abs": zs.min_boundary_abs}
    if out:
        with open(out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _mollifier_from_args(args, m):
    eps = float(_config_option(args, "epsilon", 0.5) or 0.5)
    zeros = _config_option(args, "zeros")
    if zeros:
        data = _load_json(zeros) if isinstance(zeros, str) else zeros
        pts = np.asarray(data["points"] if isinstance(data, dict) else data,
                         dtype=float)
    else:
        zs = mmod.zero_set(m, box=float(_config_option(args, "rmax", 10.0)
                                        or 10.0))
        if zs.classification not in ("origin-only", "compact"):
            raise ConfigError(f"zero set is {zs.classification}; supply "
                              "--zeros explicitly for unbounded symbols")
        pts = zs.points
    return mmod.build_mollifier(pts, eps), eps


def cmd_multiplier_mollifier(args):
    m = _resolve(args, "symbol", mmod.symbol_from_json)
    moll, eps = _mollifier_from_args(args, m)
    rows = [
        ReportRow(tag="Taub", name="profile within [0, 1]",
                  margin=float(min(moll.u_hat.min(),
                                   1.0 - moll.u_hat.max())), passed=True),
        ReportRow(tag="Taub", name="space-grid mass equals profile at 0",
                  margin=1e-6 - moll.alias_defect,
                  passed=moll.alias_defect <= 1e-6),
    ]
    out = _config_option(args, "out")
    if out and str(out).endswith(".csv"):
        import csv as _csv

        with open(out, "w", newline="") as fh:
            writer = _csv.writer(fh)
            if moll.n == 1:
                writer.writerow(["xi", "u_hat"])
                for xi, v in zip(moll.freq_axes[0], moll.u_hat):
                    writer.writerow([repr(float(xi)), repr(float(v))])
            else:
                writer.writerow(["xi1", "xi2", "u_hat"])
                for i, x1 in enumerate(moll.freq_axes[0]):
                    for j, x2 in enumerate(moll.freq_axes[1]):
                        writer.writerow([repr(float(x1)), repr(float(x2)),
                                         repr(float(moll.u_hat[i, j]))])
    return _emit(args, "multiplier mollifier", rows,
                 extra={"eps": eps, "l1_mass": moll.l1_mass,
                        "edge_magnitude": moll.edge_magnitude})


def cmd_multiplier_tauberian(args):
    m = _resolve(args, "symbol", mmod.symbol_from_json)
    f = _resolve(args, "function", emod.function_from_json)
    moll, eps = _mollifier_from_args(args, m)
    seed = int(_config_option(args, "seed", 0) or 0)
    rep = mmod.verify_tauberian(f, moll, seed=seed)
    rows = [
        ReportRow(tag=rep.tag, name="exact reproducing path",
                  margin=1e-12 - rep.exact_path_defect,
                  passed=rep.exact_path_defect <= 1e-12),
        ReportRow(tag=rep.tag, name="grid convolution defect",
                  margin=1e-6 - rep.max_defect,
                  passed=rep.max_defect <= 1e-6),
    ]
    return _emit(args, "multiplier tauberian", rows,
                 extra={"eps": eps, "samples": rep.samples})


def cmd_multiplier_liouville(args):
    m = _resolve(args, "symbol", mmod.symbol_from_json)
    f = _resolve(args, "function", emod.function_from_json)
    w = _resolve(args, "weight", wmod.weight_from_json)
    ys = _parse_floats(_config_option(args, "ygrid", "1,10"))
    order = int(_config_option(args, "k", 0) or 0)
    alpha = tuple([order] + [0] * (f.n - 1))
    box = float(_config_option(args, "rmax", 10.0) or 10.0)
    zs = mmod.zero_set(m, box=box)
    rows = []
    for r in ys:
        y = np.zeros(f.n)
        y[0] = r
        rep = mmod.verify_liouville_bound(f, m, w, y, alpha=alpha, zeros=zs)
        rows.append(row_from_bound(rep, name=f"kernel bound at y={r:g} e1"))
    return _emit(args, "multiplier liouville", rows)


def cmd_multiplier_converse(args):
    w = _resolve(args, "weight", wmod.weight_from_json)
    cfg = _load_json(args.config) if args.config else {}
    gamma = cfg.get("gamma")
    K_points = cfg.get("K_points")
    y0 = cfg.get("y0")
    if gamma is None or K_points is None or y0 is None:
        raise ConfigError("converse needs gamma, K_points, y0 in --config")
    eps = float(_config_option(args, "epsilon", cfg.get("epsilon", 0.5)))
    taus = np.asarray(cfg.get("taus", list(range(1, 21))), dtype=float)
    m = None
    if cfg.get("symbol"):
        m = mmod.symbol_from_json(cfg["symbol"]) if isinstance(
            cfg["symbol"], dict) else mmod.load_symbol(cfg["symbol"])
    rep = mmod.converse_divergence(gamma, K_points, w, eps, y0, taus=taus, m=m)
    rows = [ReportRow(tag=rep.tag, name="divergence slope matches "
                      f"{rep.predicted_slope:.12g}",
                      lhs=rep.slope, rhs=rep.predicted_slope,
                      margin=-abs(rep.slope - rep.predicted_slope),
                      passed=rep.match)]
    if args.svg:
        write_svg(args.svg, [("log ratio", rep.taus, rep.log_ratios)],
                  title="converse divergence", xlabel="tau")
    return _emit(args, "multiplier converse", rows)


# ---------------------------------------------------------------------------
# counterexamples
# ---------------------------------------------------------------------------

def cmd_cex_harmonic(args):
    k = int(_config_option(args, "k", 3) or 3)
    rep = cex.harmonic_power(k)
    return _emit(args, "counterexample harmonic-power",
                 rows_from_margins(rep), extra=_plain(rep.values))


def cmd_cex_sqrt(args):
    eps = float(_config_option(args, "epsilon", 1.0) or 1.0)
    seed = int(_config_option(args, "seed", 0) or 0)
    rep = cex.sqrt_cosine(eps, seed=seed)
    return _emit(args, "counterexample sqrt-cosine",
                 rows_from_margins(rep), extra=_plain(rep.values))


def cmd_cex_series(args):
    eps = float(_config_option(args, "epsilon", 1.0) or 1.0)
    count = int(_config_option(args, "N", 10000) or 10000)
    zeros = _config_option(args, "zeros")
    zs = cex.zero_sequence_from_json(_load_json(zeros)) if zeros \
        else cex.demo_zero_sequence(count)
    m = _resolve(args, "symbol", mmod.symbol_from_json, required=False)
    seed = int(_config_option(args, "seed", 0) or 0)
    rep = cex.nonanalytic_series(zs, eps=eps, m=m, seed=seed)
    return _emit(args, "counterexample series", rows_from_margins(rep),
                 extra=_plain(rep.values))


def cmd_cex_semi(args):
    ell = int(_config_option(args, "ell", 1) or 1)
    N = int(_config_option(args, "N", 100) or 100)
    seed = int(_config_option(args, "seed", 0) or 0)
    rep = cex.semi_elliptic(ell, K_terms=max(1000, 2 * N), N_list=(N,),
                            seed=seed)
    return _emit(args, "counterexample semi-elliptic",
                 rows_from_margins(rep), extra=_plain(rep.values))


def _plain(values):
    out = {}
    for k, v in values.items():
        try:
            json.dumps(v)
            out[k] = v
        except TypeError:
            continue
    return out


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def _add_common(p):
    p.add_argument("--config", help="JSON config supplying any input")
    p.add_argument("--weight", help="weight JSON path")
    p.add_argument("--function", help="function JSON path")
    p.add_argument("--symbol", help="symbol JSON path")
    p.add_argument("--zeros", help="zero set / zero sequence JSON path")
    p.add_argument("--out", help="report output path (.json or .csv)")
    p.add_argument("--svg", help="optional SVG plot path")
    p.add_argument("--seed", type=int, help="random seed (default 0)")
    p.add_argument("--tol", type=float, help="tolerance override")
    p.add_argument("--rmax", type=float, help="radius / box half-width")
    p.add_argument("--ygrid", help="comma-separated radii or points")
    p.add_argument("--epsilon", type=float, help="epsilon parameter")
    p.add_argument("--ell", type=int, help="semi-elliptic order parameter")
    p.add_argument("--N", type=int, help="count parameter")
    p.add_argument("--k", type=int, help="power / derivative order")


_HANDLERS = {
    ("weights", "check"): cmd_weights_check,
    ("weights", "profile"): cmd_weights_profile,
    ("estimate", "tent"): cmd_estimate_tent,
    ("estimate", "outer"): cmd_estimate_outer,
    ("estimate", "lemma-x1"): cmd_estimate_lemma_x1,
    ("multiplier", "zeros"): cmd_multiplier_zeros,
    ("multiplier", "mollifier"): cmd_multiplier_mollifier,
    ("multiplier", "tauberian"): cmd_multiplier_tauberian,
    ("multiplier", "liouville"): cmd_multiplier_liouville,
    ("multiplier", "converse"): cmd_multiplier_converse,
    ("counterexample", "harmonic-power"): cmd_cex_harmonic,
    ("counterexample", "sqrt-cosine"): cmd_cex_sqrt,
    ("counterexample", "series"): cmd_cex_series,
    ("counterexample", "semi-elliptic"): cmd_cex_semi,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liouville-lab",
        description="verification suites for weighted kernel growth bounds")
    groups = parser.add_subparsers(dest="group", required=True)
    for group in ("weights", "estimate", "multiplier", "counterexample"):
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="action", required=True)
        for (g, action), handler in _HANDLERS.items():
            if g == group:
                ap = sub.add_parser(action)
                _add_common(ap)
                ap.set_defaults(handler=handler)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConfigError, HypothesisViolationError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except LiouvilleLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
