"""N-band decomposition and reconstruction on finite (circular) signals.

With ``x`` extended periodically, one level of analysis is

    a^k_m = sum_n conj(h^k_n) x_{(n + N m) mod L},      m = 0 .. L/N - 1

and synthesis is

    x_n = sum_k sum_m h^k_{n - N m} a^k_m.

Filters longer than the signal are folded modulo ``L`` first; on periodic
data this is the same as the bi-infinite sums, so perfect reconstruction
holds for any signal length divisible by the factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument
from .synthesis import FilterBank, eval_dtft


@dataclass(frozen=True, eq=False)
class CoefficientSet:
    """One level of coefficients: ``factor`` bands of ``length // factor`` entries."""

    factor: int
    bands: tuple
    length: int

    def __post_init__(self):
        bands = tuple(np.asarray(b, dtype=complex) for b in self.bands)
        object.__setattr__(self, "bands", bands)
        if len(bands) != self.factor:
            raise InvalidArgument(f"expected {self.factor} bands, got {len(bands)}")
        per = self.length // self.factor
        if self.length % self.factor or any(len(b) != per for b in bands):
            raise InvalidArgument(f"every band must hold {self.length}/{self.factor} entries")

    def __getitem__(self, k: int) -> np.ndarray:
        return self.bands[k]

    def __len__(self) -> int:
        return self.factor

    def energy(self) -> float:
        return float(sum(np.sum(np.abs(b) ** 2) for b in self.bands))

    def real_view(self) -> list[np.ndarray]:
        """Real parts of even bands, moduli of odd bands.

        Odd Meyer bands have imaginary filters, so their coefficients on a real
        signal are imaginary; the modulus drops the sign.
        """
        return [np.real(b) if k % 2 == 0 else np.abs(b) for k, b in enumerate(self.bands)]

    def zeros_like(self) -> "CoefficientSet":
        return CoefficientSet(self.factor, [np.zeros_like(b) for b in self.bands], self.length)


def as_signal(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex).reshape(-1)
    if len(x) < 1:
        raise InvalidArgument("signal must have at least one sample")
    return x


def _check_divisible(length: int, factor: int):
    if length % factor:
        pad = (-length) % factor
        raise InvalidArgument(
            f"signal length {length} is not divisible by {factor}; pad with {pad} sample(s) to {length + pad}"
        )


def zero_pad(x, factor: int) -> np.ndarray:
    """Append zeros up to the next multiple of ``factor`` (no PR guarantee at the seam)."""
    x = as_signal(x)
    return np.concatenate([x, np.zeros((-len(x)) % factor, dtype=complex)])


def _analyse(x: np.ndarray, filt, factor: int) -> np.ndarray:
    L = len(x)
    hf = np.conj(filt.folded(L))
    m = factor * np.arange(L // factor)
    out = np.zeros(L // factor, dtype=complex)
    for r in np.flatnonzero(hf):
        out += hf[r] * x[(r + m) % L]
    return out


def decompose(x, bank: FilterBank) -> CoefficientSet:
    x = as_signal(x)
    L, N = len(x), bank.factor
    _check_divisible(L, N)
    return CoefficientSet(N, [_analyse(x, f, N) for f in bank.filters], L)


def reconstruct(coeffs: CoefficientSet, bank: FilterBank) -> np.ndarray:
    N = bank.factor
    if coeffs.factor != N:
        raise InvalidArgument(f"coefficient set has {coeffs.factor} bands, bank has {N}")
    L = coeffs.length
    m = N * np.arange(L // N)
    x = np.zeros(L, dtype=complex)
    for filt, a in zip(bank.filters, coeffs.bands):
        hf = filt.folded(L)
        for r in np.flatnonzero(hf):
            # indices (r + N m) mod L are distinct over m
            x[(r + m) % L] += hf[r] * a
    return x


def decompose_modulation(x, bank: FilterBank) -> CoefficientSet:
    """Frequency-domain route: alias-sum of filtered spectra at the roots of unity.

    With ``X_q`` the DFT of ``x`` and ``F_q = sum_n conj(h_n) exp(2 pi i q n / L)``
    the band spectrum is ``A_q = (1/N) sum_s F_{q + s L/N} X_{q + s L/N}``.
    ``F`` is evaluated from the filter's DTFT directly, not by folding.
    """
    x = as_signal(x)
    L, N = len(x), bank.factor
    _check_divisible(L, N)
    P = L // N
    X = np.fft.fft(x)
    w = 2.0 * math.pi * np.arange(L) / L
    bands = []
    for filt in bank.filters:
        F = math.sqrt(N) * np.conj(eval_dtft(filt, w))
        prod = (F * X).reshape(N, P)
        bands.append(np.fft.ifft(prod.sum(axis=0) / N))
    return CoefficientSet(N, bands, L)


def cascade_decompose(x, inner: FilterBank, outer: FilterBank) -> list[list[np.ndarray]]:
    """Inner N-bank first, then the outer M-bank on every band.

    Returns ``A[k][l]``; ``compose_banks(outer, inner)`` band ``k*M + l`` is the
    single-stage equivalent.
    """
    x = as_signal(x)
    _check_divisible(len(x), inner.factor * outer.factor)
    first = decompose(x, inner)
    return [list(decompose(a, outer).bands) for a in first.bands]


def flatten_cascade(matrix: list[list[np.ndarray]]) -> list[np.ndarray]:
    return [a for row in matrix for a in row]


def cascade_reconstruct(matrix: list[list[np.ndarray]], inner: FilterBank, outer: FilterBank) -> np.ndarray:
    firsts = []
    for row in matrix:
        length = len(row[0]) * outer.factor
        firsts.append(reconstruct(CoefficientSet(outer.factor, row, length), outer))
    length = len(firsts[0]) * inner.factor
    return reconstruct(CoefficientSet(inner.factor, firsts, length), inner)


@dataclass(frozen=True, eq=False)
class Pyramid:
    """Multilevel result: ``details[j]`` holds bands 1..N-1 of level ``j + 1``."""

    factor: int
    details: tuple
    approximation: np.ndarray
    length: int

    @property
    def levels(self) -> int:
        return len(self.details)


def max_levels(length: int, factor: int) -> int:
    j = 0
    while length % factor == 0 and length >= factor:
        length //= factor
        j += 1
    return j


def multilevel(x, bank: FilterBank, levels: int) -> Pyramid:
    x = as_signal(x)
    N = bank.factor
    if levels < 1 or len(x) % N**levels:
        raise InvalidArgument(
            f"length {len(x)} does not allow {levels} level(s) of factor {N}; "
            f"at most {max_levels(len(x), N)} possible"
        )
    details = []
    approx = x
    for _ in range(levels):
        c = decompose(approx, bank)
        details.append(tuple(c.bands[1:]))
        approx = c.bands[0]
    return Pyramid(N, tuple(details), approx, len(x))


def multilevel_reconstruct(pyr: Pyramid, bank: FilterBank) -> np.ndarray:
    approx = pyr.approximation
    for det in reversed(pyr.details):
        length = len(approx) * pyr.factor
        approx = reconstruct(CoefficientSet(pyr.factor, (approx,) + tuple(det), length), bank)
    return approx
