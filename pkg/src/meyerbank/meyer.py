"""Analytic Meyer frequency functions for an arbitrary integer scaling factor.

Everything here is evaluated in closed form: the smoothing profile ``nu``,
the Fourier transform of the Meyer scaling function, and the 2*pi-periodic
frequency functions ``H^k`` of an N-band Meyer system.  All evaluators accept
scalars or arrays and return the same shape (a Python scalar for scalar input).

Band ``k`` of factor ``N`` is built from its restriction to ``[0, pi]`` and
extended to ``[-pi, 0]`` evenly for even ``k`` and oddly for odd ``k``.  For even
``N`` the last band is odd and jumps from +1 to -1 at ``pi``; the value returned
exactly at ``pi`` is the one obtained after reducing ``pi`` to ``-pi`` (i.e. -1).

``nu`` is clamped to 0 for ``x <= 0`` and to 1 for ``x >= 1``; any other upper
clamp would make ``nu`` discontinuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import InvalidArgument

TWO_PI = 2.0 * math.pi


class AuxKind(str, Enum):
    POLYNOMIAL = "polynomial-degree-7"
    USER = "user-supplied"


def _poly7(x: np.ndarray) -> np.ndarray:
    # Evaluated on [0, 1/2] only and mirrored, so nu(x) + nu(1 - x) = 1 holds
    # to rounding and the cancellation near x = 1 is avoided.
    def p(t):
        return t**4 * (35.0 - 84.0 * t + 70.0 * t**2 - 20.0 * t**3)

    return np.where(x <= 0.5, p(np.minimum(x, 0.5)), 1.0 - p(np.minimum(1.0 - x, 0.5)))


@dataclass(frozen=True)
class AuxiliaryFunction:
    """Smoothing profile ``nu`` with ``nu = 0`` below 0, ``nu = 1`` above 1 and
    ``nu(x) + nu(1 - x) = 1``.

    ``profile`` is only used for ``AuxKind.USER``; it receives an array of
    points in ``[0, 1]`` and must be vectorised.  The clamping outside the unit
    interval is always applied here, so a user profile only has to be valid
    on ``[0, 1]``.
    """

    kind: AuxKind = AuxKind.POLYNOMIAL
    profile: Callable[[np.ndarray], np.ndarray] | None = None

    def __post_init__(self):
        if self.kind is AuxKind.USER and self.profile is None:
            raise InvalidArgument("user-supplied auxiliary function needs a profile")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        inner = np.clip(x, 0.0, 1.0)
        core = _poly7(inner) if self.kind is AuxKind.POLYNOMIAL else np.asarray(self.profile(inner), dtype=float)
        return np.where(x <= 0.0, 0.0, np.where(x >= 1.0, 1.0, core))


DEFAULT_AUX = AuxiliaryFunction()


def _finite(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidArgument(f"{name} must be finite")
    return arr


def _out(val, like):
    val = np.asarray(val)
    if np.ndim(like) == 0:
        return val.item()
    return val


def reduce_angle(w):
    """Map ``w`` into ``[-pi, pi)`` modulo the floating-point value of 2*pi.

    ``fmod`` is exact, so ``reduce_angle(w + 2*pi) == reduce_angle(w)`` whenever
    ``w + 2*pi`` is itself representable.
    """
    w = np.asarray(w, dtype=float)
    r = np.fmod(w, TWO_PI)
    r = np.where(r >= math.pi, r - TWO_PI, r)
    r = np.where(r < -math.pi, r + TWO_PI, r)
    return r


def eval_nu(aux: AuxiliaryFunction, x):
    xa = _finite(x, "x")
    return _out(aux(xa), x)


def eval_phi_hat(aux: AuxiliaryFunction, w):
    """Fourier transform of the Meyer scaling function (not periodised)."""
    wa = _finite(w, "w")
    a = np.abs(wa)
    ramp = np.cos(0.5 * math.pi * aux(3.0 * a / TWO_PI - 1.0))
    val = np.where(a <= TWO_PI / 3.0, 1.0, np.where(a <= 2.0 * TWO_PI / 3.0, ramp, 0.0))
    return _out(val, w)


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class FrequencyDescriptor:
    """Frequency function ``H^band`` of the N-band Meyer system.

    Instances are callable; ``desc(w)`` is ``eval_H(desc, w)``.
    """

    factor: int
    band: int
    aux: AuxiliaryFunction = DEFAULT_AUX

    def __post_init__(self):
        if int(self.factor) != self.factor or self.factor < 2:
            raise InvalidArgument(f"factor must be an integer >= 2, got {self.factor!r}")
        if not 0 <= self.band < self.factor:
            raise InvalidArgument(f"band must lie in [0, {self.factor - 1}], got {self.band!r}")

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.band % 2 == 0 else Parity.ODD

    def __call__(self, w):
        return eval_H(self, w)

    def positive_part(self, x: np.ndarray) -> np.ndarray:
        """Restriction to ``[0, pi]`` (vectorised, no argument checks)."""
        N, k, nu = self.factor, self.band, self.aux
        x = np.asarray(x, dtype=float)
        if k == 0:
            ramp = np.cos(0.5 * math.pi * nu(3.0 * N * x / TWO_PI - 1.0))
            return np.where(x <= TWO_PI / (3 * N), 1.0, np.where(x <= 2.0 * TWO_PI / (3 * N), ramp, 0.0))

        d = math.pi / (3 * N)
        lo = k * math.pi / N - d
        lo_flat = k * math.pi / N + d
        rise = np.sin(0.5 * math.pi * nu(3.0 * N * x / TWO_PI - (3 * k - 1) / 2.0))
        if k == N - 1:
            return np.where(x < lo, 0.0, np.where(x < lo_flat, rise, np.where(x <= math.pi, 1.0, 0.0)))

        hi_flat = (k + 1) * math.pi / N - d
        hi = (k + 1) * math.pi / N + d
        fall = np.cos(0.5 * math.pi * nu(3.0 * N * x / TWO_PI - (3 * (k + 1) - 1) / 2.0))
        return np.select(
            [x < lo, x < lo_flat, x < hi_flat, x < hi],
            [0.0, rise, 1.0, fall],
            default=0.0,
        )


def eval_H(desc: FrequencyDescriptor, w):
    """Evaluate ``H^k(w)``: reduce to ``[-pi, pi)``, then apply the parity rule."""
    wa = np.asarray(w, dtype=float)
    r = reduce_angle(wa)
    val = desc.positive_part(np.abs(r))
    if desc.parity is Parity.ODD:
        val = np.sign(r) * val
    return _out(val, w)


class Classical(str, Enum):
    SCALING = "scaling"
    WAVELET = "wavelet"


def eval_H_classical_N2(which, w, aux: AuxiliaryFunction = DEFAULT_AUX):
    """Classical two-band Meyer pair.

    ``scaling`` is the N=2 scaling function; ``wavelet`` is
    ``e^{iw} * conj(H0(w + pi))``, which is genuinely complex.
    """
    which = Classical(which)
    wa = _finite(w, "w")
    h0 = FrequencyDescriptor(2, 0, aux)
    if which is Classical.SCALING:
        val = np.asarray(eval_H(h0, wa), dtype=complex)
    else:
        val = np.exp(1j * wa) * np.conj(np.asarray(eval_H(h0, wa + math.pi), dtype=complex))
    return _out(val, w)


@dataclass(frozen=True)
class ClassicalN2:
    """Callable handle for one function of the classical two-band pair."""

    which: Classical
    aux: AuxiliaryFunction = DEFAULT_AUX

    factor = 2

    @property
    def band(self) -> int:
        return 0 if Classical(self.which) is Classical.SCALING else 1

    def __call__(self, w):
        return eval_H_classical_N2(self.which, w, self.aux)


def row_norm_defect(func, factor: int, w) -> np.ndarray:
    """``|sum_s |f(w - 2 pi s / N)|^2 - 1|`` on the points ``w``."""
    w = np.asarray(w, dtype=float)
    total = sum(np.abs(np.asarray(func(w - TWO_PI * s / factor))) ** 2 for s in range(factor))
    return np.abs(total - 1.0)


def row_inner_product(f, g, factor: int, w) -> np.ndarray:
    """Hermitian product ``sum_s f(w - 2 pi s/N) conj(g(w - 2 pi s/N))``."""
    w = np.asarray(w, dtype=float)
    return sum(
        np.asarray(f(w - TWO_PI * s / factor)) * np.conj(np.asarray(g(w - TWO_PI * s / factor)))
        for s in range(factor)
    )


@dataclass(frozen=True)
class CompositeFrequency:
    """``H^{kl}(w) = G^l(N w) * H^k(w)`` for an outer M-band ``G^l`` and inner N-band ``H^k``.

    ``band`` follows the composite bank layout ``k * M + l``.
    """

    outer: object
    inner: object
    outer_factor: int
    inner_factor: int

    @property
    def factor(self) -> int:
        return self.outer_factor * self.inner_factor

    @property
    def band(self) -> int:
        return self.inner.band * self.outer_factor + self.outer.band

    def __call__(self, w):
        wa = np.asarray(w, dtype=float)
        val = np.asarray(self.outer(self.inner_factor * wa)) * np.asarray(self.inner(wa))
        return _out(val, w)
