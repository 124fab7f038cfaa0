"""Report rows and deterministic JSON emission.

Every verification result is flattened into rows of the shape

    {"tag": ..., "lhs": ..., "rhs": ..., "margin": ..., "certified": ...,
     "pass": ...}

where the tag names the inequality being checked.  Values outside double
range are serialized in the log domain as {"log": v} (with "sign": -1
when negative).  Serialization is byte-deterministic for a fixed input
and seed: keys are sorted and floats use the repr round-trip format.
"""

import json
import math
from dataclasses import dataclass

from .logdomain import LogFloat


@dataclass
class ReportRow:
    tag: str
    name: str
    lhs: object = None
    rhs: object = None
    margin: object = None
    certified: bool = True
    passed: bool = True

    def as_dict(self):
        return {"tag": self.tag, "name": self.name,
                "lhs": _encode(self.lhs), "rhs": _encode(self.rhs),
                "margin": _encode(self.margin),
                "certified": bool(self.certified), "pass": bool(self.passed)}


def _encode(v):
    if v is None:
        return None
    if isinstance(v, LogFloat):
        return v.as_json()
    v = float(v)
    if math.isfinite(v):
        return v
    if math.isnan(v):
        return None
    return {"inf": v > 0}


def rows_from_margins(report):
    """Rows from a counterexample-style report with MarginRow entries."""
    return [ReportRow(tag=r.tag, name=r.name, margin=r.margin,
                      passed=r.passed) for r in report.margins]


def row_from_bound(report, name=None):
    """Row from a lhs/rhs/ratio-style report (tent or kernel bound)."""
    return ReportRow(tag=report.tag, name=name or report.tag,
                     lhs=report.lhs, rhs=report.rhs,
                     margin=report.rhs - report.lhs,
                     certified=getattr(report, "certified", True),
                     passed=report.passed)


def write_report(path, subcommand, rows, seed=None, extra=None):
    payload = {
        "subcommand": subcommand,
        "seed": seed,
        "rows": [r.as_dict() for r in rows],
        "pass": all(r.passed for r in rows),
        "uncertified": sum(1 for r in rows if not r.certified),
    }
    if extra:
        payload["extra"] = extra
    text = json.dumps(payload, indent=2, sort_keys=True, allow_nan=False,
                      default=_json_default)
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text)
        fh.write("\n")
    return text


def _json_default(obj):
    if isinstance(obj, LogFloat):
        return obj.as_json()
    if hasattr(obj, "tolist"):
        return obj.tolist()
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    raise TypeError(f"cannot serialize {type(obj).__name__}")
