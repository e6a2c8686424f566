"""Numerical orthogonality certificate for a filter bank.

A bank is orthogonal when its modulation matrix
``M[k, s](w) = H^k(w - 2 pi s / N)`` is unitary for every ``w``.  The check
samples ``w`` on a uniform grid shifted by an irrational fraction of a step:
grid points then avoid the band edges and the jump of an even-N last band,
and never coincide with a power-of-two FFT synthesis grid (where a
synthesised filter reproduces its samples exactly and aliasing is invisible).
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import InvalidArgument
from .synthesis import FilterBank, dtft_uniform, eval_dtft


@dataclass
class VerificationReport:
    factor: int
    grid_size: int
    max_unitarity_defect: float
    per_row_norm_defect: list[float]
    adjacent_row_orthogonality_defect: list[float]
    passed: bool
    tolerance: float

    def to_dict(self) -> dict:
        d = asdict(self)
        # wire name of the verdict
        d["pass"] = d.pop("passed")
        return {
            k: d[k]
            for k in (
                "factor",
                "grid_size",
                "max_unitarity_defect",
                "per_row_norm_defect",
                "adjacent_row_orthogonality_defect",
                "pass",
                "tolerance",
            )
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def modulation_matrices(bank: FilterBank, w) -> np.ndarray:
    """Stack of modulation matrices, shape ``w.shape + (N, N)``."""
    w = np.asarray(w, dtype=float)
    N = bank.factor
    shifts = w[..., None] - 2.0 * math.pi * np.arange(N) / N
    rows = [eval_dtft(f, shifts) for f in bank.filters]
    return np.stack(rows, axis=-2)


def modulation_matrix(bank: FilterBank, w: float) -> np.ndarray:
    return modulation_matrices(bank, np.asarray(float(w)))


GRID_OFFSET = (math.sqrt(5.0) - 1.0) / 2.0


def verification_grid(grid: int) -> np.ndarray:
    return 2.0 * math.pi * (np.arange(grid) + GRID_OFFSET) / grid - math.pi


def _grid_matrices(bank: FilterBank, grid: int) -> np.ndarray:
    N = bank.factor
    start = 2.0 * math.pi * GRID_OFFSET / grid - math.pi
    rows = [
        np.stack([dtft_uniform(f, start - 2.0 * math.pi * s / N, grid) for s in range(N)], axis=-1)
        for f in bank.filters
    ]
    return np.stack(rows, axis=-2)


def verify_bank(bank: FilterBank, grid: int = 1024, tol: float = 1e-6) -> VerificationReport:
    if grid < 64:
        raise InvalidArgument(f"grid must be >= 64, got {grid}")
    N = bank.factor
    mats = _grid_matrices(bank, grid)
    gram = mats @ np.conj(np.swapaxes(mats, -1, -2))
    defect = np.abs(gram - np.eye(N))
    row_norm = np.abs(np.real(np.diagonal(gram, axis1=-2, axis2=-1)) - 1.0).max(axis=0)
    adjacent = [float(np.abs(gram[:, k, k + 1]).max()) for k in range(N - 1)]
    worst = float(defect.max())
    return VerificationReport(
        factor=N,
        grid_size=grid,
        max_unitarity_defect=worst,
        per_row_norm_defect=[float(x) for x in row_norm],
        adjacent_row_orthogonality_defect=adjacent,
        passed=worst <= tol,
        tolerance=tol,
    )
