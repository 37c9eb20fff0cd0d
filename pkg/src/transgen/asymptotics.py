"""Analytic bound functions behind the exponential decay of G_n, T_n, V_n.

All functions are extended to the closed domain with ``0**0 = 1`` and
``0*log(0) = 0``; products of powers are evaluated in log space through
:func:`scipy.special.xlogy`.
"""

from dataclasses import dataclass, asdict
import math

import numpy as np
from scipy.optimize import brentq
from scipy.special import xlogy

from .errors import DomainError, NumericError

__all__ = [
    'lambert_w',
    'omega',
    'F_single',
    'decay_rate_G',
    'F1',
    'F2',
    'F3',
    'F_two_var',
    'G_three_var',
    'x0_F1',
    'y0_F2_half',
    'gamma_of_alpha',
    'stationary_point_G',
    'golden_section_max',
    'BoundEval',
    'maximize_F_single',
    'maximize_F_two_var',
    'maximize_G',
    'bounds_report',
]


def lambert_w(x, tol=1e-15, max_iter=100):
    """Principal branch of ``w * exp(w) = x`` for ``x > 0``.

    Halley iteration kept inside a shrinking bracket; a step that leaves
    the bracket is replaced by bisection.
    """
    x = float(x)
    if not x > 0 or math.isinf(x):
        raise DomainError(f'lambert_w needs a finite x > 0, got {x}')
    lo, hi = 0.0, max(1.0, math.log(x))
    w = math.log1p(x) if x < math.e else math.log(x) - math.log(math.log(x))
    w = min(max(w, lo), hi)
    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        if f == 0:
            return w
        if f > 0:
            hi = w
        else:
            lo = w
        d1 = ew * (w + 1)
        step = f / (d1 - (w + 2) * f / (2 * w + 2))
        new = w - step
        if not lo <= new <= hi:
            new = 0.5 * (lo + hi)
        if abs(new - w) <= tol * max(1.0, abs(new)):
            return new
        w = new
    raise NumericError(f'lambert_w did not converge for x={x}')


def omega():
    """The omega constant ``W(1)``."""
    return lambert_w(1.0)


def F_single(x):
    """``x*log(1/x - 1) + x`` on the open interval ``(0, 1)``."""
    x = float(x)
    if not 0 < x < 1:
        raise DomainError(f'F_single needs 0 < x < 1, got {x}')
    return x * math.log(1 / x - 1) + x


def decay_rate_G():
    """Limit of ``log(G_n)/n``, namely ``Omega - 1``."""
    return omega() - 1


def _log_F1(x):
    return 2 * xlogy(1 - x, x) - 2 * xlogy(1 - x, 1 - x)


def _log_F2(x, y):
    return (xlogy(1 - 2 * x * y, y) - x * (1 + y)
            - 2 * xlogy(x * (1 - y), 1 - y))


def F1(x):
    """``x^(2(1-x)) / (1-x)^(2(1-x))`` on ``[0, 1]``."""
    return np.exp(_log_F1(np.asarray(x, dtype=float)))[()]


def F2(x, y):
    """``y^(1-2xy) / (e^(x(1+y)) (1-y)^(2x(1-y)))`` on ``[0, 1]^2``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.exp(_log_F2(x, y))[()]


def F3(y):
    """``-1 - y - 2(1-y)log(1-y) - 2y log(y)``; the x-log-derivative of F2."""
    y = np.asarray(y, dtype=float)
    return (-1 - y - 2 * xlogy(1 - y, 1 - y) - 2 * xlogy(y, y))[()]


def F_two_var(x, y):
    """Base of the exponential bound on ``T_n``; equals ``F1(x) * F2(x, y)``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.exp(_log_F1(x) + _log_F2(x, y))[()]


def _log_G(x, y, z):
    return (xlogy(1 - x, x) + xlogy(1 - y, y) + xlogy(1 - 2 * z, z)
            - (x + y + z)
            - 2 * xlogy(1 - x, 1 - x) - 2 * xlogy(1 - y, 1 - y)
            - xlogy(x - z, x - z) - xlogy(y - z, y - z))


def G_three_var(x, y, z):
    """Base of the exponential bound on ``V_n``.

    Defined for ``x, y`` in ``[0, 1]`` and ``0 <= z <= min(x, y)``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    eps = 1e-12
    if (np.any(x < -eps) or np.any(x > 1 + eps) or np.any(y < -eps)
            or np.any(y > 1 + eps) or np.any(z < -eps)
            or np.any(z > np.minimum(x, y) + eps)):
        raise DomainError('G_three_var needs x, y in [0,1] and 0 <= z <= min(x, y)')
    x = np.clip(x, 0, 1)
    y = np.clip(y, 0, 1)
    z = np.clip(z, 0, np.minimum(x, y))
    return np.exp(_log_G(x, y, z))[()]


def x0_F1():
    """Interior stationary point of ``F1``: ``1/(1 + W(1/e))``."""
    return 1 / (1 + lambert_w(math.exp(-1)))


def y0_F2_half():
    """Interior stationary point of ``y -> F2(1/2, y)``: ``1/(1 + W(e^-1/2))``."""
    return 1 / (1 + lambert_w(math.exp(-0.5)))


def gamma_of_alpha(a):
    """``z`` coordinate of a stationary point ``(a, a, z)`` of G."""
    return a - math.exp(1 / a) * (1 - a) ** 2 / (math.e * a)


def _stationary_residual(a):
    # 1/z + 2 log((a - z)/z) - 1 with z = gamma_of_alpha(a)
    d = math.exp(1 / a) * (1 - a) ** 2
    denom = math.e * a * a - d
    return math.e * a / denom + 2 * math.log(d / denom) - 1


def stationary_point_G(lo=0.587, hi=1.0):
    """Return ``(alpha, gamma)`` with ``(alpha, alpha, gamma)`` stationary for G.

    ``gamma_of_alpha`` is increasing with a single zero in ``(lo, hi)``;
    the residual is positive just above that zero and negative near 1, so
    the root is bracketed there.
    """
    try:
        a_min = brentq(gamma_of_alpha, lo, hi - 1e-9, xtol=1e-15)
        alpha = brentq(_stationary_residual, a_min + 1e-9, hi - 1e-9,
                       xtol=1e-15, rtol=4 * np.finfo(float).eps)
    except ValueError as exc:
        raise NumericError(f'stationary point not bracketed: {exc}') from exc
    return alpha, gamma_of_alpha(alpha)


_INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section_max(f, a, b, tol=1e-12):
    """Maximiser of a unimodal ``f`` on ``[a, b]``."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while abs(b - a) > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


@dataclass
class BoundEval:
    function_id: str
    argmax: tuple
    max_value: float
    grid_resolution: int
    refined: bool

    def to_dict(self):
        return asdict(self)


def maximize_F_single(resolution=10 ** 6, refine=True):
    xs = np.linspace(0, 1, resolution + 1)[1:-1]
    vals = xs * np.log(1 / xs - 1) + xs
    i = int(np.argmax(vals))
    best_x, best = float(xs[i]), float(vals[i])
    if refine:
        h = 1 / resolution
        x = golden_section_max(F_single, max(best_x - h, h / 2),
                               min(best_x + h, 1 - h / 2))
        if F_single(x) > best:
            best_x, best = x, F_single(x)
    return BoundEval('F1d', (best_x,), best, resolution, refine)


def _refine(f, point, lows, highs, h, sweeps=4):
    # coordinate-wise golden section in a box of half-width h
    p = list(point)
    for _ in range(sweeps):
        for i in range(len(p)):
            lo = max(lows[i](p), p[i] - h)
            hi = min(highs[i](p), p[i] + h)
            if hi <= lo:
                continue

            def g(t, i=i):
                q = list(p)
                q[i] = t
                return float(f(*q))

            t = golden_section_max(g, lo, hi)
            if g(t) >= f(*p):
                p[i] = t
    return tuple(p), float(f(*p))


def maximize_F_two_var(resolution=2000, refine=True):
    """Grid scan of ``F_two_var`` over ``[0, 1]^2`` with ``resolution`` points per axis."""
    grid = np.linspace(0.0, 1.0, resolution)
    best, arg = -np.inf, None
    for x in grid:
        row = F_two_var(x, grid)
        j = int(np.argmax(row))
        if row[j] > best:
            best, arg = float(row[j]), (float(x), float(grid[j]))
    if refine:
        h = 1 / max(resolution - 1, 1)
        zero = lambda p: 0.0  # noqa: E731
        one = lambda p: 1.0  # noqa: E731
        p, v = _refine(F_two_var, arg, [zero, zero], [one, one], h)
        if v > best:
            best, arg = v, p
    return BoundEval('F2var', arg, best, resolution, refine)


def maximize_G(resolution=300, refine=True):
    """Grid scan of ``G_three_var`` over ``z <= min(x, y)`` on a cube grid."""
    grid = np.linspace(0.0, 1.0, resolution)
    Y, Z = np.meshgrid(grid, grid, indexing='ij')
    best, arg = -np.inf, None
    for x in grid:
        feasible = Z <= np.minimum(x, Y)
        vals = np.full(Y.shape, -np.inf)
        vals[feasible] = np.exp(_log_G(x, Y[feasible], Z[feasible]))
        k = int(np.argmax(vals))
        if vals.flat[k] > best:
            best, arg = float(vals.flat[k]), (float(x), float(Y.flat[k]), float(Z.flat[k]))
    if refine:
        h = 1 / max(resolution - 1, 1)
        zero = lambda p: 0.0  # noqa: E731
        one = lambda p: 1.0  # noqa: E731
        zmax = lambda p: min(p[0], p[1])  # noqa: E731
        xmin = lambda p: p[2]  # noqa: E731
        p, v = _refine(G_three_var, arg, [xmin, xmin, zero], [one, one, zmax], h)
        if v > best:
            best, arg = v, p
    return BoundEval('G3var', arg, best, resolution, refine)


def bounds_report(f_resolution=400, g_resolution=100):
    """Constants and their published brackets, each with a pass flag."""
    om = omega()
    a_single = om / (1 + om)
    x0 = x0_F1()
    y0 = y0_F2_half()
    alpha, gamma = stationary_point_G()
    g_stat = float(G_three_var(alpha, alpha, gamma))
    f3_arg = 1 / (1 + math.sqrt(math.e))
    f_max = maximize_F_two_var(f_resolution)
    g_max = maximize_G(g_resolution)
    values = {
        'omega': om,
        'alpha_F_single': a_single,
        'F_single_at_alpha': F_single(a_single),
        'decay_rate_G': decay_rate_G(),
        'x0': x0,
        'F1_at_x0': float(F1(x0)),
        'y0': y0,
        'F2_half_at_y0': float(F2(0.5, y0)),
        'F3_max': float(F3(f3_arg)),
        'alpha': alpha,
        'gamma': gamma,
        'G_at_stationary': g_stat,
        'F_two_var_max': f_max.to_dict(),
        'G_max': g_max.to_dict(),
    }
    checks = {
        'omega ~ 0.5671439': abs(om - 0.5671439) < 5e-8,
        'omega * e^omega == 1': abs(om * math.exp(om) - 1) < 1e-12,
        'F(alpha) == omega': abs(F_single(a_single) - om) < 1e-9,
        'x0 > 0.78': x0 > 0.78,
        'F1(x0) < 1.75': float(F1(x0)) < 1.75,
        'F2(1/2, y0) < 0.56': float(F2(0.5, y0)) < 0.56,
        'F3 max == 2log(1+sqrt(e)) - 2 < 0':
            abs(float(F3(f3_arg)) - (2 * math.log(1 + math.sqrt(math.e)) - 2)) < 1e-9
            and float(F3(f3_arg)) < 0,
        '0.68152 < alpha < 0.68153': 0.68152 < alpha < 0.68153,
        '0.44403 < gamma < 0.44407': 0.44403 < gamma < 0.44407,
        'G(alpha, alpha, gamma) < 0.999': g_stat < 0.999,
        'max F(x, y) <= 0.98': f_max.max_value <= 0.98 + 1e-3,
        'max G < 1': g_max.max_value < 1,
    }
    return {'values': values,
            'checks': {name: 'pass' if ok else 'fail' for name, ok in checks.items()}}
