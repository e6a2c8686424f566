"""Time-domain filters from frequency functions, and composite MN banks.

A frequency function ``H`` with factor ``N`` is tied to its filter by
``H(w) = N**-0.5 * sum_n h_n exp(-i n w)``.  Coefficients are obtained by
sampling ``H`` on a uniform grid of ``S`` points and inverting that relation
with one FFT, then trimming the outermost coefficients while the discarded
l2 mass stays below ``threshold**2`` times the total.

Filters are always stored complex: odd bands produce purely imaginary
coefficients and the classical two-band wavelet genuinely complex ones.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidArgument
from .meyer import (
    DEFAULT_AUX,
    AuxiliaryFunction,
    Classical,
    ClassicalN2,
    CompositeFrequency,
    FrequencyDescriptor,
)

DEFAULT_SAMPLES = 8192
DEFAULT_THRESHOLD = 1e-10
MAX_FACTOR = 2**16


@dataclass(frozen=True, eq=False)
class Filter:
    """One coefficient sequence ``h_n`` for ``n = offset .. offset + len - 1``."""

    coeffs: np.ndarray
    offset: int
    factor: int
    band: int
    tail_energy: float = 0.0
    sample_count: int = 0

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex).copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + len(self.coeffs))

    @property
    def energy(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def coefficient(self, n: int) -> complex:
        i = n - self.offset
        return complex(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0j

    def dtft(self, w):
        return eval_dtft(self, w)

    def folded(self, length: int) -> np.ndarray:
        """Periodise onto ``length`` points: entry ``r`` is ``sum_{n = r mod length} h_n``."""
        out = np.zeros(length, dtype=complex)
        np.add.at(out, self.indices % length, self.coeffs)
        return out


@dataclass(frozen=True, eq=False)
class FilterBank:
    """``factor`` filters, band 0 being the scaling filter.

    ``provenance`` is one of ``direct(N)``, ``classical2``, ``composite(M,N)``
    or ``custom``.  Composite band ``j`` holds the pair ``(k, l) = divmod(j, M)``
    where ``k`` indexes the inner N-bank and ``l`` the outer M-bank.
    """

    factor: int
    filters: tuple
    provenance: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "filters", tuple(self.filters))
        if int(self.factor) != self.factor or self.factor < 1:
            raise InvalidArgument(f"bad factor {self.factor!r}")
        if len(self.filters) != self.factor:
            raise InvalidArgument(f"factor {self.factor} bank needs {self.factor} filters, got {len(self.filters)}")

    def __len__(self) -> int:
        return self.factor

    def __getitem__(self, band: int) -> Filter:
        return self.filters[band]

    def __iter__(self):
        return iter(self.filters)

    @property
    def composite_factors(self) -> tuple[int, int] | None:
        """``(M, N)`` for a composite bank, else ``None``."""
        m = re.fullmatch(r"composite\((\d+),(\d+)\)", self.provenance)
        return (int(m.group(1)), int(m.group(2))) if m else None

    def band_label(self, band: int) -> str:
        mn = self.composite_factors
        if mn is None:
            return str(band)
        k, l = divmod(band, mn[0])
        return f"{k}{l}"

    @property
    def max_tail_energy(self) -> float:
        return max(f.tail_energy for f in self.filters)

    def with_filter(self, band: int, filt: Filter) -> "FilterBank":
        filters = list(self.filters)
        filters[band] = filt
        return replace(self, filters=tuple(filters))


def _check_samples(samples: int):
    if int(samples) != samples or samples < 256 or samples & (samples - 1):
        raise InvalidArgument(f"samples must be a power of two >= 256, got {samples!r}")


def _check_threshold(threshold: float):
    if not 0.0 < threshold < 1.0:
        raise InvalidArgument(f"threshold must lie in (0, 1), got {threshold!r}")


def sample_grid(func, samples: int) -> np.ndarray:
    """Values of ``func`` at ``2 pi j / samples``.

    The sample at ``pi`` takes the mean of the one-sided limits, which is the
    Fourier-series value at a jump and leaves continuous functions unchanged.
    """
    w = 2.0 * math.pi * np.arange(samples) / samples
    vals = np.asarray(func(w), dtype=complex)
    half = samples // 2
    left = complex(np.asarray(func(np.nextafter(math.pi, 0.0))))
    right = complex(np.asarray(func(np.nextafter(-math.pi, 0.0))))
    vals[half] = 0.5 * (left + right)
    return vals


def trim(coeffs: np.ndarray, offset: int, threshold: float) -> tuple[np.ndarray, int, float]:
    """Drop end coefficients, smallest end first, within the energy budget.

    Returns ``(kept, new_offset, discarded_energy)``.
    """
    energy = np.abs(coeffs) ** 2
    budget = threshold**2 * float(energy.sum())
    lo, hi = 0, len(coeffs) - 1
    discarded = 0.0
    while lo < hi:
        e = energy[lo] if energy[lo] <= energy[hi] else energy[hi]
        if discarded + e > budget:
            break
        discarded += e
        if energy[lo] <= energy[hi]:
            lo += 1
        else:
            hi -= 1
    return coeffs[lo : hi + 1].copy(), offset + lo, discarded


def synthesize_filter(
    func,
    samples: int = DEFAULT_SAMPLES,
    threshold: float = DEFAULT_THRESHOLD,
    *,
    factor: int | None = None,
    band: int | None = None,
) -> Filter:
    """Fourier-series coefficients of a 2*pi-periodic frequency function.

    ``func`` is any vectorised callable; ``factor`` and ``band`` default to the
    attributes of the same name on ``func`` (``FrequencyDescriptor`` and
    ``ClassicalN2`` carry both).

    Coefficients are kept for ``n = -S/2 .. S/2 - 1`` and computed as
    ``h_n = sqrt(N)/S * sum_j H(w_j) exp(i n w_j)`` before trimming.
    """
    _check_samples(samples)
    _check_threshold(threshold)
    factor = getattr(func, "factor") if factor is None else factor
    band = getattr(func, "band", 0) if band is None else band

    vals = sample_grid(func, samples)
    # ifft already carries the 1/S.
    h = math.sqrt(factor) * np.fft.ifft(vals)
    half = samples // 2
    h = np.concatenate([h[half:], h[:half]])
    kept, offset, tail = trim(h, -half, threshold)
    return Filter(kept, offset, factor, band, tail_energy=tail, sample_count=samples)


def frequency_functions(factor: int, classical2: bool | None = None, aux: AuxiliaryFunction = DEFAULT_AUX) -> list:
    """Analytic frequency functions of the bank ``synthesize_bank`` builds."""
    if classical2 is None:
        classical2 = factor == 2
    if classical2:
        if factor != 2:
            raise InvalidArgument("the classical variant exists only for factor 2")
        return [ClassicalN2(Classical.SCALING, aux), ClassicalN2(Classical.WAVELET, aux)]
    return [FrequencyDescriptor(factor, k, aux) for k in range(factor)]


def composite_frequency_functions(
    outer_factor: int, inner_factor: int, aux: AuxiliaryFunction = DEFAULT_AUX
) -> list[CompositeFrequency]:
    """Analytic counterparts of ``compose_banks`` bands, in band order ``k*M + l``."""
    outer = frequency_functions(outer_factor, aux=aux)
    inner = frequency_functions(inner_factor, aux=aux)
    return [CompositeFrequency(g, h, outer_factor, inner_factor) for h in inner for g in outer]


def synthesize_bank(
    factor: int,
    samples: int = DEFAULT_SAMPLES,
    threshold: float = DEFAULT_THRESHOLD,
    *,
    classical2: bool | None = None,
    aux: AuxiliaryFunction = DEFAULT_AUX,
) -> FilterBank:
    """Meyer bank for ``factor``.

    For ``factor == 2`` the classical pair is used unless ``classical2=False``
    asks for the parity-extended construction (whose wavelet band jumps at pi).
    """
    if int(factor) != factor or factor < 2:
        raise InvalidArgument(f"factor must be an integer >= 2, got {factor!r}")
    funcs = frequency_functions(factor, classical2, aux)
    filters = [synthesize_filter(f, samples, threshold, factor=factor, band=k) for k, f in enumerate(funcs)]
    is_classical = isinstance(funcs[0], ClassicalN2)
    return FilterBank(factor, filters, "classical2" if is_classical else f"direct({factor})")


def compose_banks(outer: FilterBank, inner: FilterBank) -> FilterBank:
    """Factor ``M*N`` bank from an outer M-bank and an inner N-bank.

    ``h^{kl}_n = sum_m g^l_m h^k_{n - m N}``, i.e. the inner filter convolved
    with the outer filter upsampled by N.  Band ``k*M + l`` holds ``(k, l)``.
    """
    M, N = outer.factor, inner.factor
    if M * N > MAX_FACTOR:
        raise InvalidArgument(f"composite factor {M * N} exceeds {MAX_FACTOR}")
    filters = []
    for k, h in enumerate(inner.filters):
        for l, g in enumerate(outer.filters):
            up = np.zeros((len(g) - 1) * N + 1, dtype=complex)
            up[::N] = g.coeffs
            coeffs = np.convolve(up, h.coeffs)
            filters.append(
                Filter(
                    coeffs,
                    g.offset * N + h.offset,
                    M * N,
                    k * M + l,
                    # first-order bound: both factors have unit l2 norm
                    tail_energy=g.tail_energy + h.tail_energy,
                    sample_count=max(g.sample_count, h.sample_count),
                )
            )
    return FilterBank(M * N, filters, f"composite({M},{N})")


def eval_dtft(f: Filter, w, chunk: int = 2048):
    """``N**-0.5 * sum_n h_n exp(-i n w)`` (scalar or array ``w``)."""
    w = np.asarray(w, dtype=float)
    flat = w.reshape(-1)
    n = f.indices.astype(float)
    out = np.empty(flat.shape, dtype=complex)
    for start in range(0, len(flat), chunk):
        ws = flat[start : start + chunk]
        out[start : start + chunk] = np.exp(-1j * np.outer(ws, n)) @ f.coeffs
    out /= math.sqrt(f.factor)
    if w.ndim == 0:
        return complex(out[0])
    return out.reshape(w.shape)


def dtft_uniform(f: Filter, start: float, count: int) -> np.ndarray:
    """``eval_dtft`` at ``start + 2 pi j / count``, ``j = 0 .. count - 1``, via one FFT."""
    c = f.coeffs * np.exp(-1j * f.indices * start)
    folded = np.zeros(count, dtype=complex)
    np.add.at(folded, f.indices % count, c)
    return np.fft.fft(folded) / math.sqrt(f.factor)


def tail_energy_beyond(f: Filter, radius: int) -> float:
    """l2 mass of the stored coefficients with ``|n| > radius``."""
    mask = np.abs(f.indices) > radius
    return float(np.sum(np.abs(f.coeffs[mask]) ** 2))


def default_radii(f: Filter) -> list[int]:
    reach = int(np.max(np.abs(f.indices))) if len(f) else 0
    radii = [0]
    decade = 1
    while decade <= max(reach, 1):
        radii.extend(r for r in (decade, 2 * decade, 5 * decade) if r <= max(reach, 1))
        decade *= 10
    return radii


def decay_profile(f: Filter, radii=None) -> list[tuple[int, float]]:
    """``(radius, tail energy beyond radius)`` on a 1-2-5 schedule by default."""
    radii = default_radii(f) if radii is None else radii
    return [(int(r), tail_energy_beyond(f, r)) for r in radii]


def impulse_filter(factor: int, band: int = 0, scale: complex = 1.0) -> Filter:
    return Filter(np.array([scale], dtype=complex), 0, factor, band)
