"""Analytic spectra, discord, concurrence and entanglement of formation.

All quantities are in bits. The discord is for a rank-one projective
measurement on mode Y parameterized by ``theta`` (the azimuth ``phi`` does
not enter any closed form for these X-shaped states).

For the odd state the outcome probabilities keep the labelling of the
analytic expressions: ``P1`` carries ``cos^2(theta)`` on the weight of
``|+a,-b>``. Relative to ``Tr[(I x Pi_j) rho]`` with the projectors of
:func:`scsdiscord.oracle.measurement_projectors` this swaps the two labels;
the pair, and hence every entropy, is the same.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from ._backend import kernels
from .states import CoherentParams, Parity, check_mixing, normalization_constants

HALF_PI = math.pi / 2.0
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class MeasurementAngles:
    """Angles of ``|pi1> = cos(theta)|+> + e^{i phi} sin(theta)|->``.

    Construction folds ``theta`` into [0, pi/2] and ``phi`` into [0, 2pi)
    using ``(theta + pi, phi) ~ (theta, phi)`` and
    ``(pi - theta, phi + pi) ~ (theta, phi)``, both of which leave the
    projector pair unchanged.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ValueError("measurement angles must be finite")
        theta = math.fmod(theta, math.pi)
        if theta < 0.0:
            theta += math.pi
        if theta > HALF_PI:
            theta = math.pi - theta
            phi += math.pi
        phi = math.fmod(phi, TWO_PI)
        if phi < 0.0:
            phi += TWO_PI
        if phi >= TWO_PI:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


class OutcomePair(NamedTuple):
    p1: float
    p2: float


@dataclass(frozen=True)
class CorrelationReport:
    mutual_info: float
    classical_corr: float
    discord: float
    delta: float
    theta_opt: float
    concurrence: float
    eof: float
    delta_minus_eof: float

    def as_dict(self) -> dict:
        return asdict(self)


class AmplitudeWeights(NamedTuple):
    """``n^2/(4 N_s^2 N_t^2)`` for the two populated states and the cross term."""

    w1: float
    w2: float
    cross: float


def amplitude_weights(params: CoherentParams, parity) -> AmplitudeWeights:
    parity = Parity.parse(parity)
    norms = normalization_constants(params, parity)
    nma, nmb = norms.require_odd()
    npa, npb = norms.n_plus_a, norms.n_plus_b
    n2 = norms.n * norms.n
    if parity is Parity.PLUS:
        w1 = n2 / (4.0 * npa**2 * npb**2)
        w2 = n2 / (4.0 * nma**2 * nmb**2)
    else:
        w1 = n2 / (4.0 * npa**2 * nmb**2)
        w2 = n2 / (4.0 * nma**2 * npb**2)
    cross = n2 / (4.0 * npa * npb * nma * nmb)
    return AmplitudeWeights(w1, w2, cross)


def _printed_scale(params: CoherentParams, parity: Parity) -> float:
    # misprinted odd-parity P2 carries n_+^2 instead of n_-^2
    if parity is Parity.PLUS:
        return 1.0
    n_plus = normalization_constants(params, Parity.PLUS).n
    n_minus = normalization_constants(params, Parity.MINUS).n
    return (n_plus * n_plus) / (n_minus * n_minus)


def joint_eigenvalues(a) -> np.ndarray:
    """Spectrum of the full two-mode state, descending."""
    a = check_mixing(a)
    low = (1.0 - a) / 4.0
    return np.array([(1.0 + 3.0 * a) / 4.0, low, low, low])


def reduced_eigenvalues(params: CoherentParams, parity, a) -> tuple[float, float]:
    a = check_mixing(a)
    w = amplitude_weights(params, parity)
    return (1.0 - a) / 2.0 + a * w.w1, (1.0 - a) / 2.0 + a * w.w2


def outcome_probabilities(params: CoherentParams, parity, a, theta, *, printed_eq23=False) -> OutcomePair:
    a = check_mixing(a)
    parity = Parity.parse(parity)
    w = amplitude_weights(params, parity)
    k2 = _printed_scale(params, parity) if printed_eq23 else 1.0
    return OutcomePair(*kernels.outcome_probabilities(a, w.w1, w.w2, k2, float(theta)))


def conditional_entropy(params: CoherentParams, parity, a, theta) -> float:
    a = check_mixing(a)
    w = amplitude_weights(params, parity)
    return kernels.conditional_entropy(a, w.w1, w.w2, 1.0, float(theta))


def discord(params: CoherentParams, parity, a, theta, *, printed_eq23=False) -> float:
    """Discord for the measurement at angle ``theta`` on mode Y.

    ``printed_eq23=True`` evaluates the odd-parity expression with the
    second outcome probability exactly as misprinted (``n_+^2``); it exists
    only to demonstrate the discrepancy against the brute-force route.
    """
    a = check_mixing(a)
    parity = Parity.parse(parity)
    w = amplitude_weights(params, parity)
    k2 = _printed_scale(params, parity) if printed_eq23 else 1.0
    return kernels.discord(a, w.w1, w.w2, k2, float(theta))


def discord_scan(params: CoherentParams, parity, a, thetas) -> np.ndarray:
    a = check_mixing(a)
    w = amplitude_weights(params, parity)
    return kernels.discord_scan(a, w.w1, w.w2, thetas)


def mutual_information(params: CoherentParams, parity, a) -> float:
    # both reduced states share one spectrum, so I = 2 S(rho_Y) - S(rho_XY)
    r1, r2 = reduced_eigenvalues(params, parity, a)
    s_reduced = -kernels.xlog2x(r1) - kernels.xlog2x(r2)
    s_joint = -sum(kernels.xlog2x(float(v)) for v in joint_eigenvalues(a))
    return 2.0 * s_reduced - s_joint


def classical_correlation(params: CoherentParams, parity, a, theta) -> float:
    return mutual_information(params, parity, a) - discord(params, parity, a, theta)


def sqrt_eigenvalues_rho_rhotilde(params: CoherentParams, parity, a) -> np.ndarray:
    """Square roots of the spectrum of ``rho (sy x sy) rho* (sy x sy)``, descending."""
    a = check_mixing(a)
    w = amplitude_weights(params, parity)
    low = (1.0 - a) / 4.0
    d1 = low + a * w.w1
    d2 = low + a * w.w2
    geo = math.sqrt(d1 * d2)
    values = [low, low, geo + a * w.cross, max(0.0, geo - a * w.cross)]
    return np.array(sorted(values, reverse=True))


def concurrence_mixed(params: CoherentParams, parity, a) -> float:
    lam = sqrt_eigenvalues_rho_rhotilde(params, parity, a)
    c = 2.0 * float(lam[0]) - float(np.sum(lam))
    return min(1.0, max(0.0, c))


def entanglement_of_formation(params: CoherentParams, parity, a) -> float:
    return kernels.entanglement_of_formation(concurrence_mixed(params, parity, a))


def werner_limit_measures(a, theta=0.0) -> tuple[float, float]:
    """Discord and EoF of the perfect Werner state reached at large photon numbers.

    ``theta`` is accepted for symmetry with :func:`discord`; it drops out.
    """
    a = check_mixing(a)
    d = kernels.discord(a, 0.5, 0.5, 1.0, float(theta))
    c = max(0.0, (3.0 * a - 1.0) / 2.0)
    return d, kernels.entanglement_of_formation(c)
