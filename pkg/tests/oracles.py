"""Slow, independent reference computations used only by the tests.

Nothing here imports from ``tsax``. Quantiles come from mpmath, statistics
from the ``statistics`` module and slopes from the closed-form OLS formula.
"""

import bisect
import math
import statistics

import mpmath

mpmath.mp.dps = 40


def normal_quantile(p):
    return float(mpmath.sqrt(2) * mpmath.erfinv(2 * mpmath.mpf(p) - 1))


def breakpoints(alpha):
    return [normal_quantile(mpmath.mpf(i) / alpha) for i in range(1, alpha)]


def normal_cdf(x):
    return float((1 + mpmath.erf(mpmath.mpf(x) / mpmath.sqrt(2))) / 2)


def symbol_distance(r, c, beta):
    if abs(r - c) <= 1:
        return 0.0
    return beta[max(r, c) - 1] - beta[min(r, c)]


def znorm(values):
    mu = statistics.fmean(values)
    sd = statistics.pstdev(values)
    if sd < 1e-12:
        return [0.0] * len(values)
    return [(v - mu) / sd for v in values]


def segments(n, m):
    size, extra = divmod(n, m)
    out, start = [], 0
    for i in range(m):
        stop = start + size + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def ols_slope(ys):
    n = len(ys)
    xs = range(1, n + 1)
    sx, sy = sum(xs), sum(ys)
    sxy = sum(x * y for x, y in zip(xs, ys))
    sxx = sum(x * x for x in xs)
    return (n * sxy - sx * sy) / (n * sxx - sx * sx)


def tsax(values, m, beta):
    z = znorm(values)
    word, trend = [], []
    for a, b in segments(len(z), m):
        seg = z[a:b]
        word.append(bisect.bisect_left(beta, sum(seg) / len(seg)))
        trend.append(ols_slope(seg) >= 0 if len(seg) > 1 else True)
    return word, trend


def mindist(w1, w2, n, beta):
    m = len(w1)
    total = sum(symbol_distance(a, b, beta) ** 2 for a, b in zip(w1, w2))
    return math.sqrt(n / m) * math.sqrt(total)


def tsax_distance(r1, r2, n, beta, rew, pen):
    (w1, t1), (w2, t2) = r1, r2
    k1 = sum(1 for a, b in zip(t1, t2) if a == b)
    k2 = len(t1) - k1
    return mindist(w1, w2, n, beta) + rew * k1 + pen * k2


def loo_error(X, y, m, alpha, distance="tsax", rew=-1.0, pen=1.0):
    """Leave-one-out 1NN error by explicit enumeration of every pair."""
    beta = breakpoints(alpha)
    reps = [tsax(list(x), m, beta) for x in X]
    n = len(X[0])
    wrong = 0
    for i, q in enumerate(reps):
        best, best_d = None, math.inf
        for j, r in enumerate(reps):
            if i == j:
                continue
            if distance == "sax":
                d = mindist(q[0], r[0], n, beta)
            else:
                d = tsax_distance(q, r, n, beta, rew, pen)
            if d < best_d:
                best, best_d = j, d
        wrong += y[best] != y[i]
    return wrong / len(X)
