"""Report encoding: exact JSON and pandas tables.

Exact quantities never pass through floats in JSON: integers become decimal
strings and rationals "p/q" strings. Floats keep their shortest round-trip
repr (at most 17 significant digits); complex numbers become [re, im].
"""

import dataclasses
import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pandas as pd

from verifier.polynomials import MultiPoly


def to_jsonable(obj):
    if obj is None or isinstance(obj, (bool, np.bool_, str)):
        return bool(obj) if isinstance(obj, np.bool_) else obj
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.17g}")
    if isinstance(obj, (complex, np.complexfloating)):
        return [to_jsonable(float(obj.real)), to_jsonable(float(obj.imag))]
    if isinstance(obj, MultiPoly):
        return str(obj)
    if isinstance(obj, pd.DataFrame):
        return [to_jsonable(row) for row in obj.to_dict(orient="records")]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def dumps(report) -> str:
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True)


def write_json(report, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(report) + "\n")
    return path


def _cell(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return f"{value.real:.10g}{value.imag:+.10g}j"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    return value


def render_table(rows) -> str:
    """Plain-text table; rows is a DataFrame or a list of dicts."""
    df = rows if isinstance(rows, pd.DataFrame) else pd.DataFrame(rows)
    if df.empty:
        return "(no rows)"
    return df.apply(lambda col: col.map(_cell)).to_string(index=False)
