"""Pure-Python scalar kernels; mirror of ``_ckernels.pyx`` line for line.

The amplitude weights ``w1``/``w2`` are the two populated diagonal weights
``n^2 / (4 N_s^2 N_t^2)`` of the pure state. ``k2`` scales the weight term
of the second outcome probability and is 1.0 except when reproducing the
misprinted odd-parity probability.
"""
from math import cos, log2, sin, sqrt

import numpy as np

GOLDEN = (sqrt(5.0) - 1.0) / 2.0
QUARTER_PI = 0.7853981633974483
TIE_TOL = 1e-12

BACKEND = "python"


def xlog2x(x):
    if x <= 0.0:
        return 0.0
    return x * log2(x)


def binary_entropy(p):
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -xlog2x(p) - xlog2x(1.0 - p)


def outcome_probabilities(a, w1, w2, k2, theta):
    c = cos(theta)
    s = sin(theta)
    c2 = c * c
    s2 = s * s
    base = (1.0 - a) / 2.0
    p1 = base + a * (w1 * c2 + w2 * s2)
    p2 = base + a * k2 * (w2 * c2 + w1 * s2)
    return p1, p2


def _branch(q, p):
    # P_j * H2(q / P_j) written as in the closed form, 0 log 0 := 0
    if p <= 0.0:
        return 0.0
    r = q / p
    out = 0.0
    if q > 0.0:
        out -= q * log2(r)
    rest = p - q
    if rest > 0.0:
        out -= rest * log2(1.0 - r)
    return out


def conditional_entropy(a, w1, w2, k2, theta):
    q = (1.0 - a) / 4.0
    p1, p2 = outcome_probabilities(a, w1, w2, k2, theta)
    return _branch(q, p1) + _branch(q, p2)


def discord(a, w1, w2, k2, theta):
    q = (1.0 - a) / 4.0
    r1 = (1.0 - a) / 2.0 + a * w1
    r2 = (1.0 - a) / 2.0 + a * w2
    s_y = -xlog2x(r1) - xlog2x(r2)
    neg_s_xy = 3.0 * xlog2x(q) + xlog2x((1.0 + 3.0 * a) / 4.0)
    return s_y + neg_s_xy + conditional_entropy(a, w1, w2, k2, theta)


def discord_scan(a, w1, w2, thetas):
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    out = np.empty(thetas.shape[0], dtype=np.float64)
    for i in range(thetas.shape[0]):
        out[i] = discord(a, w1, w2, 1.0, thetas[i])
    return out


def entanglement_of_formation(c):
    if c <= 0.0:
        return 0.0
    if c > 1.0:
        c = 1.0
    x = (1.0 + sqrt(1.0 - c * c)) / 2.0
    return binary_entropy(x)


def _better(f, t, fbest, tbest):
    if f < fbest - TIE_TOL:
        return True
    return f <= fbest + TIE_TOL and t < tbest


def minimize_discord(a, w1, w2, grid_points, tol, max_evals):
    """Grid scan of [0, pi/4] then golden-section refinement around the best node.

    Returns ``(delta, theta_opt, evaluations, converged)``.
    """
    n = grid_points
    step = QUARTER_PI / (n - 1)
    grid_f = [0.0] * n
    best = 0
    for i in range(n):
        grid_f[i] = discord(a, w1, w2, 1.0, i * step)
        if i and _better(grid_f[i], i * step, grid_f[best], best * step):
            best = i
    evals = n
    fbest = grid_f[best]
    tbest = best * step

    lo_i = best - 1 if best > 0 else 0
    hi_i = best + 1 if best < n - 1 else n - 1
    lo = lo_i * step
    hi = hi_i * step
    flo = grid_f[lo_i]
    fhi = grid_f[hi_i]
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1 = discord(a, w1, w2, 1.0, x1)
    f2 = discord(a, w1, w2, 1.0, x2)
    evals += 2
    converged = False
    while True:
        if _better(f1, x1, fbest, tbest):
            fbest, tbest = f1, x1
        if _better(f2, x2, fbest, tbest):
            fbest, tbest = f2, x2
        spread = max(flo, f1, f2, fhi) - min(flo, f1, f2, fhi)
        if spread <= tol or hi - lo <= 1e-15:
            converged = True
            break
        if evals >= max_evals:
            break
        if f1 <= f2:
            hi, fhi = x2, f2
            x2, f2 = x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = discord(a, w1, w2, 1.0, x1)
        else:
            lo, flo = x1, f1
            x1, f1 = x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = discord(a, w1, w2, 1.0, x2)
        evals += 1
    return fbest, tbest, evals, converged
