"""Bipartite superposed coherent states and their quasi-Werner mixtures.

Everything is expressed in the orthonormal two-mode cat basis, ordered as::

    0: |+a, +b>    1: |+a, -b>    2: |-a, +b>    3: |-a, -b>

where ``|+a>``/``|-a>`` are the even/odd cat states of mode X and ``|+b>``/``|-b>``
those of mode Y. Mode X is the first tensor factor. With this ordering the
even-parity state populates positions 0 and 3 and the odd-parity state
positions 1 and 2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateMode, DegenerateState, InvalidParams, MixingOutOfRange


class Parity(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self) -> int:
        return 1 if self is Parity.PLUS else -1

    @classmethod
    def parse(cls, value) -> "Parity":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"+": "plus", "-": "minus", "p": "plus", "m": "minus"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise InvalidParams(f"unknown parity {value!r}") from None


@dataclass(frozen=True)
class CoherentParams:
    """Mean photon numbers ``|alpha|^2`` and ``|beta|^2`` of the two modes."""

    alpha_sq: float
    beta_sq: float

    def __post_init__(self):
        for name in ("alpha_sq", "beta_sq"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise InvalidParams(f"{name} must be a real number, got {value!r}") from None
            if not math.isfinite(value) or value < 0.0:
                raise InvalidParams(f"{name} must be finite and >= 0, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def x_alpha(self) -> float:
        return math.exp(-self.alpha_sq)

    @property
    def x_beta(self) -> float:
        return math.exp(-self.beta_sq)

    def swapped(self) -> "CoherentParams":
        return CoherentParams(self.beta_sq, self.alpha_sq)


@dataclass(frozen=True)
class NormalizationSet:
    """Normalization constants of the bipartite state and of the four cats.

    ``n_minus_a`` / ``n_minus_b`` are ``None`` for a vacuum mode, where the
    odd cat state does not exist; :meth:`require_odd` raises in that case.
    """

    n: float
    n_plus_a: float
    n_minus_a: Optional[float]
    n_plus_b: float
    n_minus_b: Optional[float]

    def require_odd(self) -> tuple[float, float]:
        if self.n_minus_a is None:
            raise DegenerateMode("odd cat state of mode X is undefined for alpha_sq = 0")
        if self.n_minus_b is None:
            raise DegenerateMode("odd cat state of mode Y is undefined for beta_sq = 0")
        return self.n_minus_a, self.n_minus_b


@dataclass(frozen=True)
class PureSCS:
    amplitudes: np.ndarray
    parity: Parity


@dataclass(frozen=True)
class QuasiWernerState:
    rho: np.ndarray
    mixing: float
    params: CoherentParams
    parity: Parity


def check_mixing(a) -> float:
    a = float(a)
    if not (0.0 <= a <= 1.0):
        raise MixingOutOfRange(f"mixing parameter must lie in [0, 1], got {a!r}")
    return a


def normalization_constants(params: CoherentParams, parity) -> NormalizationSet:
    parity = Parity.parse(parity)
    xa2 = params.x_alpha ** 2
    xb2 = params.x_beta ** 2
    overlap = xa2 * xb2
    if parity is Parity.MINUS and overlap >= 1.0:
        raise DegenerateState("odd bipartite superposition vanishes for alpha_sq = beta_sq = 0")
    n = (2.0 * (1.0 + parity.sign * overlap)) ** -0.5
    n_minus_a = (2.0 * (1.0 - xa2)) ** -0.5 if xa2 < 1.0 else None
    n_minus_b = (2.0 * (1.0 - xb2)) ** -0.5 if xb2 < 1.0 else None
    return NormalizationSet(
        n=n,
        n_plus_a=(2.0 * (1.0 + xa2)) ** -0.5,
        n_minus_a=n_minus_a,
        n_plus_b=(2.0 * (1.0 + xb2)) ** -0.5,
        n_minus_b=n_minus_b,
    )


def basis_positions(parity) -> tuple[int, int]:
    """Indices of the two populated cat-basis states for ``parity``."""
    return (0, 3) if Parity.parse(parity) is Parity.PLUS else (1, 2)


def amplitude_pair(params: CoherentParams, parity) -> tuple[float, float]:
    """The two nonzero amplitudes, in the order of :func:`basis_positions`.

    Uses ``1/N_- = sqrt(2 (1 - x^2))``, which stays finite for a vacuum mode
    (the corresponding amplitude is then exactly zero).
    """
    parity = Parity.parse(parity)
    norms = normalization_constants(params, parity)
    inv_minus_a = math.sqrt(2.0 * (1.0 - params.x_alpha ** 2))
    inv_minus_b = math.sqrt(2.0 * (1.0 - params.x_beta ** 2))
    half = norms.n / 2.0
    if parity is Parity.PLUS:
        return half / (norms.n_plus_a * norms.n_plus_b), half * inv_minus_a * inv_minus_b
    return half * inv_minus_b / norms.n_plus_a, half * inv_minus_a / norms.n_plus_b


def pure_scs_vector(params: CoherentParams, parity) -> PureSCS:
    parity = Parity.parse(parity)
    c_first, c_second = amplitude_pair(params, parity)
    amplitudes = np.zeros(4, dtype=complex)
    i, j = basis_positions(parity)
    amplitudes[i] = c_first
    amplitudes[j] = c_second
    return PureSCS(amplitudes=amplitudes, parity=parity)


def pure_concurrence(params: CoherentParams, parity) -> float:
    """Concurrence of the pure bipartite superposition, from the overlaps alone."""
    parity = Parity.parse(parity)
    xa2 = params.x_alpha ** 2
    xb2 = params.x_beta ** 2
    if parity is Parity.MINUS and xa2 * xb2 >= 1.0:
        raise DegenerateState("odd bipartite superposition vanishes for alpha_sq = beta_sq = 0")
    numerator = math.sqrt((1.0 - xa2 * xa2) * (1.0 - xb2 * xb2))
    return numerator / (1.0 + parity.sign * xa2 * xb2)


def quasi_werner_density(params: CoherentParams, parity, a) -> QuasiWernerState:
    """Mixture ``(1 - a) I/4 + a |psi><psi|`` of white noise and the pure state."""
    a = check_mixing(a)
    # the white-noise term populates all four cat states, so both odd cats must exist
    normalization_constants(params, parity).require_odd()
    psi = pure_scs_vector(params, parity)
    rho = (1.0 - a) / 4.0 * np.eye(4, dtype=complex) + a * np.outer(psi.amplitudes, psi.amplitudes.conj())
    return QuasiWernerState(rho=rho, mixing=a, params=params, parity=psi.parity)
