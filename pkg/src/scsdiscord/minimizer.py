"""Minimum discord over the measurement basis on mode Y.

The discord is pi/2-periodic in theta and symmetric about pi/4, so the
search runs over [0, pi/4]: a 46-node grid, then golden-section refinement
inside the bracket around the best node until the objective values in the
bracket agree to ``tol`` bits. Values within 1e-12 are treated as ties and
resolved towards the smaller angle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import closed_form
from ._backend import kernels
from .errors import ConvergenceError
from .states import CoherentParams, Parity, check_mixing

GRID_POINTS = 46
VALUE_TOL = 1e-10
MAX_EVALUATIONS = 200


@dataclass(frozen=True)
class MinimizationResult:
    delta: float
    theta_opt: float
    evaluations: int
    converged: bool


def minimize_discord(params: CoherentParams, parity, a, *, tol=VALUE_TOL,
                     max_evaluations=MAX_EVALUATIONS) -> MinimizationResult:
    a = check_mixing(a)
    w = closed_form.amplitude_weights(params, parity)
    delta, theta, evals, converged = kernels.minimize_discord(
        a, w.w1, w.w2, GRID_POINTS, tol, max_evaluations)
    if not converged:
        raise ConvergenceError(
            f"discord minimization did not reach {tol:g} within {max_evaluations} evaluations "
            f"(alpha_sq={params.alpha_sq}, beta_sq={params.beta_sq}, a={a})")
    return MinimizationResult(delta=delta, theta_opt=theta, evaluations=evals, converged=True)


def delta_minus_eof(params: CoherentParams, parity, a) -> float:
    return (minimize_discord(params, parity, a).delta
            - closed_form.entanglement_of_formation(params, parity, a))


def correlation_report(params: CoherentParams, parity, a,
                       theta: Optional[float] = None) -> closed_form.CorrelationReport:
    """Every correlation measure at one parameter point.

    ``discord`` and ``classical_corr`` are evaluated at ``theta``; without
    it they are evaluated at the optimal angle, so ``discord == delta``.
    """
    parity = Parity.parse(parity)
    a = check_mixing(a)
    best = minimize_discord(params, parity, a)
    mutual = closed_form.mutual_information(params, parity, a)
    if theta is None:
        d = best.delta
    else:
        d = closed_form.discord(params, parity, a, theta)
    c = closed_form.concurrence_mixed(params, parity, a)
    e = kernels.entanglement_of_formation(c)
    return closed_form.CorrelationReport(
        mutual_info=mutual,
        classical_corr=mutual - d,
        discord=d,
        delta=best.delta,
        theta_opt=best.theta_opt,
        concurrence=c,
        eof=e,
        delta_minus_eof=best.delta - e,
    )
