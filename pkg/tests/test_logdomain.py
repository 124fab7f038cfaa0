import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from liouville_lab.logdomain import LogFloat, log_abs_cosh, log_sum


def test_basic_arithmetic():
    a = LogFloat.from_float(3.0)
    b = LogFloat.from_float(-2.0)
    assert abs((a * b).to_float() + 6.0) < 1e-12
    assert abs((a + b).to_float() - 1.0) < 1e-12
    assert abs((a - b).to_float() - 5.0) < 1e-12
    assert (a / b).sign == -1
    assert (b ** 2).to_float() == pytest.approx(4.0)
    assert LogFloat.from_float(0.0).sign == 0


def test_huge_magnitudes_stay_exact_in_log():
    # exp(k^3) at k = 12 overflows double but not its log
    v = LogFloat.exp(12.0 ** 3)
    w = v * v
    assert w.log == pytest.approx(2 * 12.0 ** 3, rel=1e-15)
    assert w.to_float() == math.inf  # saturates on export only
    assert (w / w).to_float() == pytest.approx(1.0)


def test_against_mpmath_oracle_20_cases():
    # exp/log round trips of ell^(2 ell) magnitudes up to ell = 40
    rng = np.random.default_rng(3)
    mp.mp.dps = 60
    for _ in range(20):
        ell = int(rng.integers(2, 41))
        a = float(rng.uniform(0.5, 3.0))
        b = float(rng.uniform(0.5, 3.0))
        x = LogFloat.from_log(2 * ell * math.log(ell) + math.log(a))
        y = LogFloat.from_log(ell * math.log(10.0 * ell) + math.log(b))
        diff = x - y
        ref = a * mp.mpf(ell) ** (2 * ell) - b * (10 * mp.mpf(ell)) ** ell
        if ref == 0:
            assert diff.sign == 0
            continue
        ref_log = float(mp.log(abs(ref)))
        assert diff.sign == (1 if ref > 0 else -1)
        assert diff.log == pytest.approx(ref_log, rel=1e-10, abs=1e-10)


@given(st.floats(min_value=-700, max_value=700),
       st.floats(min_value=-700, max_value=700))
def test_signed_addition_matches_mpmath(la, lb):
    a = LogFloat.from_log(la)
    b = LogFloat.from_log(lb, sign=-1)
    got = a + b
    mp.mp.dps = 40
    # e^la - e^lb = e^lb (e^(la-lb) - 1); expm1 keeps tiny differences
    delta = mp.expm1(mp.mpf(la) - mp.mpf(lb))
    if delta == 0:
        assert got.sign == 0
    else:
        assert got.sign == (1 if delta > 0 else -1)
        want_log = float(mp.mpf(lb) + mp.log(abs(delta)))
        assert got.log == pytest.approx(want_log, rel=1e-10, abs=1e-10)


def test_log_sum_and_comparisons():
    total = log_sum([1.0, LogFloat.from_float(2.0), 3.0])
    assert total.to_float() == pytest.approx(6.0)
    assert LogFloat.from_float(2.0) > LogFloat.from_float(1.5)
    assert LogFloat.from_float(-2.0) < LogFloat.from_float(1e-300)


def test_log_abs_cosh():
    mp.mp.dps = 40
    for w in [0.3 + 0.2j, 5.0 + 1.0j, 200.0 + 0.7j, -300.0 + 2.0j, 1j * 1.5]:
        ref = float(mp.log(abs(mp.cosh(mp.mpc(w.real, w.imag)))))
        assert log_abs_cosh(w) == pytest.approx(ref, rel=1e-12, abs=1e-12)
