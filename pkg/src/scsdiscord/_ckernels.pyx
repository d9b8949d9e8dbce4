# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels; same signatures and arithmetic order as _pykernels."""
from libc.math cimport cos, log2, sin, sqrt

import numpy as np

cdef double GOLDEN = (sqrt(5.0) - 1.0) / 2.0
cdef double QUARTER_PI = 0.7853981633974483
cdef double TIE_TOL = 1e-12

BACKEND = "cython"


cdef inline double _xlog2x(double x) nogil:
    if x <= 0.0:
        return 0.0
    return x * log2(x)


cdef inline double _binary_entropy(double p) nogil:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -_xlog2x(p) - _xlog2x(1.0 - p)


cdef inline void _probs(double a, double w1, double w2, double k2, double theta,
                        double* p1, double* p2) nogil:
    cdef double c = cos(theta)
    cdef double s = sin(theta)
    cdef double c2 = c * c
    cdef double s2 = s * s
    cdef double base = (1.0 - a) / 2.0
    p1[0] = base + a * (w1 * c2 + w2 * s2)
    p2[0] = base + a * k2 * (w2 * c2 + w1 * s2)


cdef inline double _branch(double q, double p) nogil:
    cdef double r, out, rest
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


cdef inline double _cond(double a, double w1, double w2, double k2, double theta) nogil:
    cdef double q = (1.0 - a) / 4.0
    cdef double p1, p2
    _probs(a, w1, w2, k2, theta, &p1, &p2)
    return _branch(q, p1) + _branch(q, p2)


cdef inline double _discord(double a, double w1, double w2, double k2, double theta) nogil:
    cdef double q = (1.0 - a) / 4.0
    cdef double r1 = (1.0 - a) / 2.0 + a * w1
    cdef double r2 = (1.0 - a) / 2.0 + a * w2
    cdef double s_y = -_xlog2x(r1) - _xlog2x(r2)
    cdef double neg_s_xy = 3.0 * _xlog2x(q) + _xlog2x((1.0 + 3.0 * a) / 4.0)
    return s_y + neg_s_xy + _cond(a, w1, w2, k2, theta)


cdef inline bint _better(double f, double t, double fbest, double tbest) nogil:
    if f < fbest - TIE_TOL:
        return True
    return f <= fbest + TIE_TOL and t < tbest


def xlog2x(double x):
    return _xlog2x(x)


def binary_entropy(double p):
    return _binary_entropy(p)


def outcome_probabilities(double a, double w1, double w2, double k2, double theta):
    cdef double p1, p2
    _probs(a, w1, w2, k2, theta, &p1, &p2)
    return p1, p2


def conditional_entropy(double a, double w1, double w2, double k2, double theta):
    return _cond(a, w1, w2, k2, theta)


def discord(double a, double w1, double w2, double k2, double theta):
    return _discord(a, w1, w2, k2, theta)


def discord_scan(double a, double w1, double w2, thetas):
    cdef double[::1] th = np.ascontiguousarray(thetas, dtype=np.float64)
    out = np.empty(th.shape[0], dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(th.shape[0]):
            o[i] = _discord(a, w1, w2, 1.0, th[i])
    return out


def entanglement_of_formation(double c):
    cdef double x
    if c <= 0.0:
        return 0.0
    if c > 1.0:
        c = 1.0
    x = (1.0 + sqrt(1.0 - c * c)) / 2.0
    return _binary_entropy(x)


def minimize_discord(double a, double w1, double w2, int grid_points, double tol, int max_evals):
    cdef int n = grid_points
    cdef double step = QUARTER_PI / (n - 1)
    cdef double[::1] grid_f = np.empty(n, dtype=np.float64)
    cdef int i, best = 0, lo_i, hi_i, evals
    cdef double fbest, tbest, lo, hi, flo, fhi, x1, x2, f1, f2, spread, fmax, fmin
    cdef bint converged = False
    for i in range(n):
        grid_f[i] = _discord(a, w1, w2, 1.0, i * step)
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
    f1 = _discord(a, w1, w2, 1.0, x1)
    f2 = _discord(a, w1, w2, 1.0, x2)
    evals += 2
    while True:
        if _better(f1, x1, fbest, tbest):
            fbest = f1
            tbest = x1
        if _better(f2, x2, fbest, tbest):
            fbest = f2
            tbest = x2
        fmax = max(max(flo, f1), max(f2, fhi))
        fmin = min(min(flo, f1), min(f2, fhi))
        spread = fmax - fmin
        if spread <= tol or hi - lo <= 1e-15:
            converged = True
            break
        if evals >= max_evals:
            break
        if f1 <= f2:
            hi = x2
            fhi = f2
            x2 = x1
            f2 = f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = _discord(a, w1, w2, 1.0, x1)
        else:
            lo = x1
            flo = f1
            x1 = x2
            f1 = f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = _discord(a, w1, w2, 1.0, x2)
        evals += 1
    return fbest, tbest, evals, converged
