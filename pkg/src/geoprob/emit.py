"""Serialize an :class:`ExperimentReport` as CSV, JSON or a text table."""

from __future__ import annotations

import csv
import io
import json
from typing import Optional

from .runner import METRICS, ExperimentReport

CSV_COLUMNS = ("method", "metric", "mean", "median", "min", "max", "variance", "skewness")
STAT_FIELDS = CSV_COLUMNS[2:]


def _csv(report: ExperimentReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.results:
        # The P row carries the probability in the mean column.
        w.writerow([r.name, "P", repr(r.p), "", "", "", "", ""])
        for metric in METRICS if r.stats else ():
            s = r.stats.get(metric)
            if s is None:
                w.writerow([r.name, metric] + [""] * len(STAT_FIELDS))
            else:
                d = s.as_dict()
                w.writerow([r.name, metric] + [repr(d[f]) for f in STAT_FIELDS])
    return buf.getvalue()


def parse_csv(text: str) -> dict[str, dict[str, dict[str, Optional[float]]]]:
    """Inverse of the CSV emitter: ``{method: {metric: {column: value}}}``."""
    out: dict = {}
    for row in csv.DictReader(io.StringIO(text)):
        vals = {f: (float(row[f]) if row[f] else None) for f in STAT_FIELDS}
        out.setdefault(row["method"], {})[row["metric"]] = vals
    return out


def _json(report: ExperimentReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def _fmt(x: float) -> str:
    return format(round(x, 2) + 0.0, "g")


def _table(report: ExperimentReport) -> str:
    lines = [f"seed={report.seed} trials={report.trials} version={report.version}"]
    header = "Method \\ Metrics".ljust(26) + "".join(f"{h:>9}" for h in ("mu", "Md", "Min", "Max", "var", "Skew"))
    lines.append(header)
    for r in report.results:
        p = format(round(r.p, 4), "g")
        extra = ""
        if r.analytic is not None:
            extra = f"   (analytic {r.analytic:.6f}, |diff| {r.abs_error:.2g}, 4SE {4 * r.se:.2g})"
        lines.append(f"{r.name:<26}P = {p}{extra}")
        for metric in METRICS if r.stats else ():
            s = r.stats.get(metric)
            if s is None:
                continue
            d = s.as_dict()
            lines.append(f"  {metric:<24}" + "".join(f"{_fmt(d[f]):>9}" for f in STAT_FIELDS))
    return "\n".join(lines) + "\n"


def emit(report: ExperimentReport, fmt: str = "json") -> bytes:
    if fmt == "csv":
        text = _csv(report)
    elif fmt == "json":
        text = _json(report)
    elif fmt == "table":
        text = _table(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode("utf-8")
