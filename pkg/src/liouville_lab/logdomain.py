"""Signed log-domain scalars.

Several counterexample checks compare quantities like ell**(2*ell) or
exp(k**(2*ell + 1)) whose magnitudes leave the double range long before
the inequalities themselves become uninteresting.  A ``LogFloat`` stores
a sign and the natural log of the magnitude, which keeps every
comparison exact up to ~1e-15 relative in the log.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=False)
class LogFloat:
    """A real number represented as sign * exp(log)."""

    sign: int
    log: float

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_float(x):
        x = float(x)
        if x == 0.0:
            return LogFloat(0, -math.inf)
        return LogFloat(1 if x > 0 else -1, math.log(abs(x)))

    @staticmethod
    def from_log(log, sign=1):
        if sign == 0 or log == -math.inf:
            return LogFloat(0, -math.inf)
        return LogFloat(1 if sign > 0 else -1, float(log))

    @staticmethod
    def exp(exponent):
        """exp(exponent) as a LogFloat, valid for any float exponent."""
        return LogFloat(1, float(exponent))

    # -- ring operations ----------------------------------------------
    def __mul__(self, other):
        other = _coerce(other)
        if self.sign == 0 or other.sign == 0:
            return LogFloat(0, -math.inf)
        return LogFloat(self.sign * other.sign, self.log + other.log)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.sign == 0:
            raise ZeroDivisionError("LogFloat division by zero")
        if self.sign == 0:
            return LogFloat(0, -math.inf)
        return LogFloat(self.sign * other.sign, self.log - other.log)

    def __pow__(self, k):
        if self.sign == 0:
            if k == 0:
                return LogFloat(1, 0.0)
            return LogFloat(0, -math.inf)
        if self.sign < 0 and not float(k).is_integer():
            raise ValueError("fractional power of a negative LogFloat")
        sign = self.sign if int(k) % 2 else 1
        if not float(k).is_integer():
            sign = 1
        return LogFloat(sign, self.log * float(k))

    def __neg__(self):
        return LogFloat(-self.sign, self.log)

    def __add__(self, other):
        other = _coerce(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        big, small = (self, other) if self.log >= other.log else (other, self)
        diff = small.log - big.log  # <= 0
        if self.sign == other.sign:
            return LogFloat(self.sign, big.log + math.log1p(math.exp(diff)))
        inner = -math.expm1(diff)  # 1 - exp(diff) in [0, 1]
        if inner == 0.0:
            return LogFloat(0, -math.inf)
        return LogFloat(big.sign, big.log + math.log(inner))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    # -- comparisons ----------------------------------------------------
    def _key(self):
        return (self.sign, self.sign * self.log if self.sign else 0.0)

    def __lt__(self, other):
        return self._key() < _coerce(other)._key()

    def __le__(self, other):
        return self._key() <= _coerce(other)._key()

    def __gt__(self, other):
        return self._key() > _coerce(other)._key()

    def __ge__(self, other):
        return self._key() >= _coerce(other)._key()

    # -- export ---------------------------------------------------------
    def to_float(self):
        """Collapse to a float; overflows saturate to +-inf."""
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log)
        except OverflowError:
            return self.sign * math.inf

    def as_json(self):
        """Serialization used in reports: {"log": v[, "sign": -1]}."""
        if self.sign == 0:
            return {"log": None}
        out = {"log": self.log}
        if self.sign < 0:
            out["sign"] = -1
        return out

    def __repr__(self):
        if self.sign == 0:
            return "LogFloat(0)"
        return f"LogFloat({'+' if self.sign > 0 else '-'}exp({self.log:.6g}))"


def _coerce(x):
    if isinstance(x, LogFloat):
        return x
    return LogFloat.from_float(x)


def log_sum(values):
    """Sum an iterable of LogFloats / floats in the log domain."""
    acc = LogFloat(0, -math.inf)
    for v in values:
        acc = acc + _coerce(v)
    return acc


def log_abs_cosh(w):
    """log |cosh(w)| for complex w, stable for large |Re w|.

    |cosh(p + iq)|^2 = cosh(p)^2 - sin(q)^2
                     = e^{2|p|}/4 * (1 + e^{-2|p|})^2 - sin(q)^2.
    """
    p = abs(w.real)
    q = w.imag
    # |cosh|^2 = (e^p + e^-p)^2/4 - sin^2 q ; factor out e^{2p}/4
    inner = (1.0 + math.exp(-2.0 * p)) ** 2 - 4.0 * math.exp(-2.0 * p) * math.sin(q) ** 2
    if inner <= 0.0:
        # Only possible very close to a zero of cosh; fall back to direct.
        import cmath

        val = abs(cmath.cosh(complex(min(p, 700.0), q)))
        return math.log(val) if val > 0 else -math.inf
    return p - math.log(2.0) + 0.5 * math.log(inner)
