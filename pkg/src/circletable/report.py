"""Row records and CSV/JSON emitters for sweeps and comparisons."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import __version__

QUANTITIES = ("f", "g", "greedy_expected", "greedy_per_person", "greedy_perfect")
METHODS = ("closed_form", "enumeration", "recursion", "montecarlo")


def fmt_exact(value: Fraction | None) -> str:
    if value is None:
        return "NA"
    return f"{value.numerator}/{value.denominator}"


def fmt_float(x: float) -> str:
    # 12 significant digits, but keep a trailing ".0" on integral values
    return repr(float(format(x, ".12g")))


@dataclass(frozen=True)
class SweepRow:
    n: int
    quantity: str
    exact: str
    float: str
    method: str
    samples: int = 0
    seed: int | None = None

    @classmethod
    def exact_row(cls, n: int, quantity: str, value: Fraction, method: str) -> SweepRow:
        return cls(n, quantity, fmt_exact(value), fmt_float(float(value)), method)

    @classmethod
    def sampled_row(cls, n: int, quantity: str, estimate: float, samples: int, seed: int) -> SweepRow:
        return cls(n, quantity, "NA", fmt_float(estimate), "montecarlo", samples, seed)

    def csv_cells(self) -> list[str]:
        return ["" if v is None else str(v) for v in asdict(self).values()]


SWEEP_COLUMNS = [f.name for f in fields(SweepRow)]


def meta_header(command: str, extra: dict[str, Any] | None = None) -> dict[str, Any]:
    meta = {
        "tool": "circletable",
        "version": __version__,
        "command": command,
        "generated": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    meta.update(extra or {})
    return meta


def render_csv(columns: Sequence[str], rows: Iterable[Sequence[Any]], meta: dict | None) -> str:
    buf = io.StringIO()
    if meta is not None:
        buf.write("# " + json.dumps(meta, sort_keys=True) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def render_json(columns: Sequence[str], rows: Iterable[Sequence[Any]], meta: dict | None) -> str:
    records = [dict(zip(columns, r)) for r in rows]
    doc: Any = records if meta is None else {"meta": meta, "rows": records}
    return json.dumps(doc, indent=2) + "\n"


def render_sweep(rows: Sequence[SweepRow], fmt: str, meta: dict | None) -> str:
    if fmt == "csv":
        return render_csv(SWEEP_COLUMNS, (r.csv_cells() for r in rows), meta)
    return render_json(SWEEP_COLUMNS, (list(asdict(r).values()) for r in rows), meta)


def render(columns: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str, meta: dict | None) -> str:
    if fmt == "csv":
        return render_csv(columns, rows, meta)
    return render_json(columns, rows, meta)
