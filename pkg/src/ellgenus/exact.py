"""Small exact-series toolbox over the rationals.

Dense univariate truncated Taylor series as lists of Fractions, plus the
handful of universal coefficient tables the characteristic-class and twist
machinery needs (u/sinh u, u/(1-e^{-u}), log 2cosh(u/2), Stirling numbers,
reduced exterior/symmetric power-sum tables).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Q = Fraction


def ts_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def ts_add(a, b):
    n = max(len(a), len(b))
    return ts_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def ts_scale(a, c):
    return ts_trim([c * x for x in a])


def ts_mul(a, b, n):
    """Product truncated to degree < n."""
    out = [Q(0)] * n
    for i, x in enumerate(a):
        if i >= n or x == 0:
            continue
        for j, y in enumerate(b):
            if i + j >= n:
                break
            if y:
                out[i + j] += x * y
    return ts_trim(out)


def ts_inv(a, n):
    """Reciprocal of a series with a[0] != 0, to degree < n."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has no constant term")
    c0 = Q(1) / a[0]
    out = [Q(0)] * n
    out[0] = c0
    for k in range(1, n):
        s = Q(0)
        for j in range(1, min(k, len(a) - 1) + 1):
            if j < len(a) and a[j]:
                s += a[j] * out[k - j]
        out[k] = -c0 * s
    return ts_trim(out)


def ts_exp(a, n):
    """exp of a series with zero constant term, to degree < n."""
    if a and a[0] != 0:
        raise ValueError("exp needs zero constant term")
    out = [Q(0)] * n
    out[0] = Q(1)
    # e' = a' e  =>  k e_k = sum_{j>=1} j a_j e_{k-j}
    for k in range(1, n):
        s = Q(0)
        for j in range(1, min(k, len(a) - 1) + 1):
            if j < len(a) and a[j]:
                s += j * a[j] * out[k - j]
        out[k] = s / k
    return ts_trim(out)


def ts_log(a, n):
    """log of a series with a[0] == 1, to degree < n."""
    if not a or a[0] != 1:
        raise ValueError("log needs constant term 1")
    da = [i * a[i] for i in range(1, len(a))]  # a'
    ia = ts_inv(a, n)
    q = ts_mul(da, ia, n)  # a'/a
    out = [Q(0)] * n
    for k in range(1, n):
        if k - 1 < len(q):
            out[k] = q[k - 1] / k
    return ts_trim(out)


@lru_cache(maxsize=None)
def stirling2(m, j):
    """Stirling number of the second kind S(m, j)."""
    if m == j:
        return 1
    if j == 0 or j > m:
        return 0
    return j * stirling2(m - 1, j) + stirling2(m - 1, j - 1)


@lru_cache(maxsize=None)
def u_over_sinh_coeffs(max_even):
    """Coefficients f_{2k} of u/sinh(u) = sum f_{2k} u^{2k}, 2k <= max_even."""
    n = max_even + 1
    # sinh(u)/u = sum u^{2k}/(2k+1)!
    fact = [Q(1)] * (2 * n + 2)
    for i in range(1, len(fact)):
        fact[i] = fact[i - 1] * i
    s = [Q(0)] * n
    for k in range(0, (max_even // 2) + 1):
        if 2 * k < n:
            s[2 * k] = Q(1, int(fact[2 * k + 1]))
    inv = ts_inv(s, n)
    return tuple(inv[i] if i < len(inv) else Q(0) for i in range(n))


@lru_cache(maxsize=None)
def todd_factor_coeffs(max_deg):
    """Coefficients g_k of u/(1-e^{-u}) = sum g_k u^k, k <= max_deg."""
    n = max_deg + 1
    fact = [Q(1)] * (n + 2)
    for i in range(1, len(fact)):
        fact[i] = fact[i - 1] * i
    # (1 - e^{-u})/u = sum_{k>=0} (-1)^k u^k/(k+1)!
    s = [Q((-1) ** k, int(fact[k + 1])) for k in range(n)]
    inv = ts_inv(s, n)
    return tuple(inv[i] if i < len(inv) else Q(0) for i in range(n))


@lru_cache(maxsize=None)
def log_2cosh_half_coeffs(max_even):
    """Coefficients a_k of log(2 cosh(u/2)) - log 2 = sum_{k>=1} a_k u^{2k}."""
    n = max_even + 1
    fact = [Q(1)] * (n + 2)
    for i in range(1, len(fact)):
        fact[i] = fact[i - 1] * i
    cosh = [Q(0)] * n
    for k in range(0, (max_even // 2) + 1):
        if 2 * k < n:
            cosh[2 * k] = Q(1, int(4 ** k) * int(fact[2 * k]))
    lg = ts_log(cosh, n)
    out = {}
    for k in range(1, (max_even // 2) + 1):
        out[k] = lg[2 * k] if 2 * k < len(lg) else Q(0)
    return dict(out)


def _exp_minus_one_powers(j, m_max):
    """(e^r - 1)^j as a list in r up to degree m_max: j! S(m,j)/m! at r^m."""
    fact = [Q(1)] * (m_max + 1)
    for i in range(1, m_max + 1):
        fact[i] = fact[i - 1] * i
    out = [Q(0)] * (m_max + 1)
    for m in range(j, m_max + 1):
        out[m] = Q(int(fact[j]) * stirling2(m, j), int(fact[m]))
    return out


@lru_cache(maxsize=None)
def reduced_lambda_linear_table(k_max, m_max):
    """c[k][m]: the p_m-linear coefficient of the k-th exterior power of a
    rank-reduced bundle, where p_m are root power sums.

    Generating identity: sum_{k,m} c[k][m] t^k r^m = log(1 + u (e^r - 1)),
    u = t/(1+t).
    """
    n = k_max + 1
    # u = t/(1+t) = t - t^2 + t^3 - ...
    u = [Q(0)] + [Q((-1) ** (i - 1)) for i in range(1, n)]
    table = [[Q(0)] * (m_max + 1) for _ in range(n)]
    uj = [Q(1)] + [Q(0)] * (n - 1)  # u^0
    for j in range(1, k_max + 1):
        uj = ts_mul(uj, u, n)
        sj = _exp_minus_one_powers(j, m_max)
        c = Q((-1) ** (j - 1), j)
        for k in range(len(uj)):
            if uj[k] == 0:
                continue
            for m in range(j, m_max + 1):
                if sj[m]:
                    table[k][m] += c * uj[k] * sj[m]
    return tuple(tuple(row) for row in table)


@lru_cache(maxsize=None)
def reduced_sym_linear_table(k_max, m_max):
    """Same as reduced_lambda_linear_table for symmetric powers:
    sum c[k][m] t^k r^m = -log(1 - v (e^r - 1)), v = t/(1-t)."""
    n = k_max + 1
    v = [Q(0)] + [Q(1)] * (n - 1)  # t/(1-t) = t + t^2 + ...
    table = [[Q(0)] * (m_max + 1) for _ in range(n)]
    vj = [Q(1)] + [Q(0)] * (n - 1)
    for j in range(1, k_max + 1):
        vj = ts_mul(vj, v, n)
        sj = _exp_minus_one_powers(j, m_max)
        c = Q(1, j)
        for k in range(len(vj)):
            if vj[k] == 0:
                continue
            for m in range(j, m_max + 1):
                if sj[m]:
                    table[k][m] += c * vj[k] * sj[m]
    return tuple(tuple(row) for row in table)
