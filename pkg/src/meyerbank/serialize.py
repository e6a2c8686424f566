"""File formats: filter-bank JSON, coefficient JSON and signal CSV.

Floats are written with 17 significant digits so every value round-trips
exactly; keys are emitted in a fixed order.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .synthesis import Filter, FilterBank
from .transform import CoefficientSet, Pyramid


class FormatError(ValueError):
    """Input file does not follow the expected schema."""


def fmt_float(x: float) -> str:
    x = float(x)
    if not np.isfinite(x):
        raise ValueError(f"cannot serialise non-finite value {x}")
    return format(x, ".17g")


def _encode(obj, level: int, indent: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, level + 1, indent)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(isinstance(v, (int, float, np.floating, np.integer)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, level + 1, indent) for v in obj) + "]"
        if not obj:
            return "[]"
        return "[\n" + ",\n".join(pad + _encode(v, level + 1, indent) for v in obj) + "\n" + end + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if obj is None:
        return "null"
    return json.dumps(obj)


def dumps(obj, indent: int = 2) -> str:
    return _encode(obj, 0, indent) + "\n"


def bank_to_dict(bank: FilterBank) -> dict:
    d = {"factor": bank.factor, "provenance": bank.provenance}
    if bank.composite_factors is not None:
        d["ordering"] = "k*M+l"
    d["bands"] = [
        {
            "band": f.band,
            "offset": f.offset,
            "re": [float(v) for v in f.coeffs.real],
            "im": [float(v) for v in f.coeffs.imag],
            "tail_energy": float(f.tail_energy),
        }
        for f in bank.filters
    ]
    return d


def bank_from_dict(d: dict) -> FilterBank:
    try:
        factor = int(d["factor"])
        filters = []
        for b in d["bands"]:
            re = np.asarray(b["re"], dtype=float)
            im = np.asarray(b["im"], dtype=float)
            if re.shape != im.shape or re.ndim != 1:
                raise FormatError("re/im arrays must be flat and of equal length")
            filters.append(Filter(re + 1j * im, int(b["offset"]), factor, int(b["band"]), float(b.get("tail_energy", 0.0))))
        return FilterBank(factor, filters, str(d.get("provenance", "custom")))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed filter bank: {exc}") from exc


def write_bank(bank: FilterBank, path) -> None:
    Path(path).write_text(dumps(bank_to_dict(bank)))


def read_bank(path) -> FilterBank:
    return bank_from_dict(_load_json(path))


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def _pairs(a: np.ndarray) -> list:
    return [[float(v.real), float(v.imag)] for v in a]


def _unpairs(rows) -> np.ndarray:
    arr = np.asarray(rows, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise FormatError("coefficients must be [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def coeffs_to_dict(c: CoefficientSet) -> dict:
    """``{"factor": N, "bands": [[[re, im], ...], ...]}``."""
    return {"factor": c.factor, "bands": [_pairs(b) for b in c.bands]}


def coeffs_from_dict(d: dict) -> CoefficientSet:
    try:
        factor = int(d["factor"])
        bands = [_unpairs(b) if len(b) else np.zeros(0, dtype=complex) for b in d["bands"]]
        return CoefficientSet(factor, bands, factor * len(bands[0]))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed coefficient set: {exc}") from exc


def write_coeffs(c: CoefficientSet, path) -> None:
    Path(path).write_text(dumps(coeffs_to_dict(c)))


def read_coeffs(path) -> CoefficientSet:
    return coeffs_from_dict(_load_json(path))


def pyramid_to_dict(p: Pyramid) -> dict:
    return {
        "factor": p.factor,
        "levels": p.levels,
        "length": p.length,
        "approximation": _pairs(p.approximation),
        "details": [[_pairs(b) for b in level] for level in p.details],
    }


def pyramid_from_dict(d: dict) -> Pyramid:
    try:
        details = tuple(tuple(_unpairs(b) for b in level) for level in d["details"])
        return Pyramid(int(d["factor"]), details, _unpairs(d["approximation"]), int(d["length"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed pyramid: {exc}") from exc


def write_pyramid(p: Pyramid, path) -> None:
    Path(path).write_text(dumps(pyramid_to_dict(p)))


def read_pyramid(path) -> Pyramid:
    return pyramid_from_dict(_load_json(path))


def write_signal(x, path) -> None:
    """One sample per line: ``re`` for real signals, ``re,im`` otherwise."""
    x = np.asarray(x, dtype=complex)
    real = not np.any(x.imag)
    lines = [fmt_float(v.real) if real else f"{fmt_float(v.real)},{fmt_float(v.imag)}" for v in x]
    Path(path).write_text("\n".join(lines) + "\n")


def read_signal(path) -> np.ndarray:
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        try:
            if len(parts) == 1:
                out.append(complex(float(parts[0]), 0.0))
            elif len(parts) == 2:
                out.append(complex(float(parts[0]), float(parts[1])))
            else:
                raise ValueError("expected 're' or 're,im'")
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: {exc}") from exc
    if not out:
        raise FormatError(f"{path}: no samples")
    return np.asarray(out, dtype=complex)
