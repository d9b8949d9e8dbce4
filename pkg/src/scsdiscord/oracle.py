"""Brute-force two-qubit engine used as ground truth for the closed forms.

Works on arbitrary 4x4 density matrices (mode X is the first tensor factor)
and never looks at the structure of the quasi-Werner states.
"""
from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import NotHermitian, ZeroProbabilityOutcome

HERMITIAN_TOL = 1e-10
ZERO_PROBABILITY = 1e-14

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)
I2 = np.eye(2, dtype=complex)


class ProjectorPair(NamedTuple):
    pi1: np.ndarray
    pi2: np.ndarray


def _check_hermitian(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {m.shape}")
    defect = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if defect > HERMITIAN_TOL:
        raise NotHermitian(f"Hermiticity defect {defect:.3e} exceeds {HERMITIAN_TOL:g}")
    return m


def eigvals_hermitian(m) -> np.ndarray:
    """Real spectrum of a Hermitian matrix, descending."""
    m = _check_hermitian(m)
    return np.linalg.eigvalsh(m)[::-1]


def von_neumann_entropy(spectrum) -> float:
    """``-sum(l log2 l)`` in bits, with ``0 log 0 = 0`` and tiny negatives dropped."""
    lam = np.asarray(spectrum, dtype=float)
    lam = lam[lam > 0.0]
    return float(-np.sum(lam * np.log2(lam)))


def entropy(rho) -> float:
    return von_neumann_entropy(eigvals_hermitian(rho))


def partial_trace_X(rho) -> np.ndarray:
    """Reduced state ``rho_X`` of mode X (mode Y traced out)."""
    r = _check_hermitian(rho).reshape(2, 2, 2, 2)
    return np.einsum("ijkj->ik", r)


def partial_trace_Y(rho) -> np.ndarray:
    """Reduced state ``rho_Y`` of mode Y (mode X traced out)."""
    r = _check_hermitian(rho).reshape(2, 2, 2, 2)
    return np.einsum("ijil->jl", r)


def measurement_projectors(theta, phi=0.0) -> ProjectorPair:
    phase = np.exp(1j * phi)
    v1 = np.array([math.cos(theta), phase * math.sin(theta)])
    v2 = np.array([math.sin(theta), -phase * math.cos(theta)])
    return ProjectorPair(np.outer(v1, v1.conj()), np.outer(v2, v2.conj()))


def conditional_state(rho, pi) -> tuple[float, np.ndarray]:
    """Outcome probability and post-measurement state of X for projector ``pi`` on Y."""
    rho = _check_hermitian(rho)
    op = np.kron(I2, np.asarray(pi, dtype=complex))
    projected = op @ rho @ op
    p = float(np.real(np.trace(projected)))
    if p <= ZERO_PROBABILITY:
        raise ZeroProbabilityOutcome(f"outcome probability {p:.3e}")
    rho_x = np.einsum("ijkj->ik", projected.reshape(2, 2, 2, 2)) / p
    return p, rho_x


def mutual_information(rho) -> float:
    return entropy(partial_trace_X(rho)) + entropy(partial_trace_Y(rho)) - entropy(rho)


def measured_conditional_entropy(rho, theta, phi=0.0) -> float:
    total = 0.0
    for pi in measurement_projectors(theta, phi):
        try:
            p, rho_x = conditional_state(rho, pi)
        except ZeroProbabilityOutcome:
            continue
        total += p * entropy(rho_x)
    return total


def classical_correlation(rho, theta, phi=0.0) -> float:
    return entropy(partial_trace_X(rho)) - measured_conditional_entropy(rho, theta, phi)


def discord_by_definition(rho, theta, phi=0.0) -> float:
    """``S(rho_Y) - S(rho_XY) + S(X | {Pi_j^Y})`` assembled numerically."""
    return entropy(partial_trace_Y(rho)) - entropy(rho) + measured_conditional_entropy(rho, theta, phi)


def spin_flip(rho) -> np.ndarray:
    rho = _check_hermitian(rho)
    return SPIN_FLIP @ rho.conj() @ SPIN_FLIP


def rho_rhotilde_eigenvalues(rho) -> np.ndarray:
    """Raw (complex) spectrum of the non-Hermitian product ``rho rho~``."""
    rho = _check_hermitian(rho)
    return np.linalg.eigvals(rho @ spin_flip(rho))


def wootters_sqrt_spectrum(rho) -> np.ndarray:
    """Square roots of the spectrum of ``rho rho~``, descending.

    Computed as the singular values of ``W^dagger (sy x sy) W*`` with
    ``rho = W W^dagger``, which shares its squared singular values with
    the nonzero spectrum of ``rho rho~`` but avoids taking square roots of
    roundoff-level eigenvalues.
    """
    rho = _check_hermitian(rho)
    lam, vecs = np.linalg.eigh(rho)
    w = vecs * np.sqrt(np.clip(lam, 0.0, None))
    tau = w.conj().T @ SPIN_FLIP @ w.conj()
    return np.linalg.svd(tau, compute_uv=False)


def wootters_concurrence(rho) -> float:
    lam = wootters_sqrt_spectrum(rho)
    return float(min(1.0, max(0.0, 2.0 * lam[0] - np.sum(lam))))


def entanglement_of_formation(rho) -> float:
    c = wootters_concurrence(rho)
    x = (1.0 + math.sqrt(1.0 - c * c)) / 2.0
    return von_neumann_entropy([x, 1.0 - x])
