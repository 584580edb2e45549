"""Compiled loops over piece pairs and triples.

Every kernel works on plain float64 arrays: a symmetric piece distance table
``D`` (pieces x pieces), piece ``starts``/``ends`` and lengths. Without numba
the same functions run as ordinary Python loops.
"""
import math
import numpy as np

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        """Identity decorator used when numba is not installed."""
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(fn):
            return fn
        return wrap


@njit(cache=True)
def holder_max(D, starts, ends, mu, max_span):
    """max over a<b<c of min(D[a,b], D[b,c]) / (starts[c] - ends[a])^mu.

    Triples whose infimum span is not below ``max_span`` are skipped when
    ``max_span`` is positive.
    """
    n = D.shape[0]
    best = 0.0
    for a in range(n):
        for c in range(a + 2, n):
            span = starts[c] - ends[a]
            if max_span > 0.0 and span >= max_span:
                continue
            inner = 0.0
            for b in range(a + 1, c):
                m = min(D[a, b], D[b, c])
                if m > inner:
                    inner = m
            if inner > 0.0:
                val = inner / span ** mu
                if val > best:
                    best = val
    return best


@njit(cache=True)
def hat_max(D, starts, ends, mu):
    """max over midpoint-feasible triples of Delta / (infimum span)^mu."""
    n = D.shape[0]
    best = 0.0
    for a in range(n):
        a0 = starts[a]
        a1 = ends[a]
        for b in range(a + 1, n):
            b0 = starts[b]
            b1 = ends[b]
            for c in range(b + 1, n):
                m = min(D[a, b], D[b, c])
                if m <= 0.0:
                    continue
                c0 = starts[c]
                c1 = ends[c]
                # s in [a0, a1), u in [c0, c1), (s + u) / 2 in [b0, b1)
                if not (a0 + c0 < 2.0 * b1 and a1 + c1 > 2.0 * b0):
                    continue
                span = max(c0 - a1, 2.0 * (b0 - a1), 2.0 * (c0 - b1))
                val = m / span ** mu
                if val > best:
                    best = val
    return best


@njit(cache=True)
def n_range_table(D):
    """N over every piece range [i, j] (window from piece i to piece j).

    N[i, j] = min over cuts c in i..j of
    max(max_{i<=k<c} D[i, k], max_{c<=k<=j} D[k, j]).
    """
    n = D.shape[0]
    out = np.zeros((n, n))
    prefix = np.zeros(n + 1)
    for i in range(n):
        # prefix[c] = max of D[i, k] for i <= k < c
        prefix[i] = 0.0
        for c in range(i + 1, n + 1):
            prefix[c] = max(prefix[c - 1], D[i, c - 1])
        for j in range(i + 1, n):
            suffix = 0.0
            best = np.inf
            for c in range(j, i - 1, -1):
                suffix = max(suffix, D[c, j])
                val = max(prefix[c], suffix)
                if val < best:
                    best = val
            out[i, j] = best
    return out


@njit(cache=True)
def besov_triple_sum(D, starts, ends, lengths, mu_p, p, product_form):
    """Compensated sum over a<b<c of weight * |P_b| * K(a, c).

    The weight is min(D[a,b], D[b,c])^p, or (D[a,b] * D[b,c])^(p/2) when
    ``product_form`` is set. K(a, c) integrates (u - s)^-(mu_p + 3) over
    piece a times piece c.
    """
    n = D.shape[0]
    norm = 1.0 / ((mu_p + 1.0) * (mu_p + 2.0))
    total = 0.0
    comp = 0.0
    for a in range(n):
        s1 = starts[a]
        s2 = ends[a]
        for c in range(a + 2, n):
            u1 = starts[c]
            u2 = ends[c]
            mid = 0.0
            for b in range(a + 1, c):
                if product_form:
                    w = (D[a, b] * D[b, c]) ** (0.5 * p)
                else:
                    w = min(D[a, b], D[b, c]) ** p
                mid += w * lengths[b]
            if mid == 0.0:
                continue
            kern = norm * ((u2 - s1) ** (-(mu_p + 1.0)) - (u2 - s2) ** (-(mu_p + 1.0))
                           - (u1 - s1) ** (-(mu_p + 1.0)) + (u1 - s2) ** (-(mu_p + 1.0)))
            term = mid * kern
            # Kahan
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
    return total


@njit(cache=True)
def _dist(x, y):
    acc = 0.0
    for k in range(x.shape[0]):
        diff = x[k] - y[k]
        acc += diff * diff
    return math.sqrt(acc)


@njit(cache=True)
def grid_sup_kernel(vals, first, last, mu):
    """Brute force over sampled runs: max Delta / (first[c] - last[a])^mu."""
    n = vals.shape[0]
    best = 0.0
    for a in range(n):
        for c in range(a + 2, n):
            span = first[c] - last[a]
            if span <= 0.0:
                continue
            for b in range(a + 1, c):
                m = min(_dist(vals[a], vals[b]), _dist(vals[b], vals[c]))
                val = m / span ** mu
                if val > best:
                    best = val
    return best


@njit(cache=True)
def grid_integral_kernel(vals, left, right, mu_p, p, nodes, weights):
    """Sum over cells i<j<k of h_j * Delta^p * Q(i, k).

    Q is a tensor Gauss-Legendre rule for (u - s)^-(mu_p + 3) over cell i
    (in s) and cell k (in u); nodes/weights are given on [-1, 1].
    """
    n = vals.shape[0]
    alpha = mu_p + 3.0
    q = nodes.shape[0]
    total = 0.0
    comp = 0.0
    for i in range(n):
        hi = right[i] - left[i]
        ci = 0.5 * (right[i] + left[i])
        for k in range(i + 2, n):
            mid = 0.0
            for j in range(i + 1, k):
                m = min(_dist(vals[i], vals[j]), _dist(vals[j], vals[k]))
                if m > 0.0:
                    mid += (right[j] - left[j]) * m ** p
            if mid == 0.0:
                continue
            hk = right[k] - left[k]
            ck = 0.5 * (right[k] + left[k])
            quad = 0.0
            for x in range(q):
                s = ci + 0.5 * hi * nodes[x]
                for y in range(q):
                    u = ck + 0.5 * hk * nodes[y]
                    quad += weights[x] * weights[y] * (u - s) ** (-alpha)
            term = mid * quad * 0.25 * hi * hk
            y_ = term - comp
            t = total + y_
            comp = (t - total) - y_
            total = t
    return total


@njit(cache=True)
def eta_grid_kernel(vals, first, last, mu):
    """max over run pairs A < C of N(runs A..C) / (first[C] - last[A])^mu."""
    n = vals.shape[0]
    best = 0.0
    prefix = np.zeros(n + 1)
    for i in range(n):
        prefix[i] = 0.0
        for c in range(i + 1, n + 1):
            prefix[c] = max(prefix[c - 1], _dist(vals[i], vals[c - 1]))
        for j in range(i + 2, n):
            span = first[j] - last[i]
            if span <= 0.0:
                continue
            suffix = 0.0
            nval = np.inf
            for c in range(j, i - 1, -1):
                suffix = max(suffix, _dist(vals[c], vals[j]))
                v = max(prefix[c], suffix)
                if v < nval:
                    nval = v
            ratio = nval / span ** mu
            if ratio > best:
                best = ratio
    return best
