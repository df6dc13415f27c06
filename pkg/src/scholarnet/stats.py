"""Spearman rank correlation with average ranks for ties.

The two-tailed p-value uses the usual t approximation,
``t = rho * sqrt((n - 2) / (1 - rho**2))`` with ``n - 2`` degrees of
freedom. The Student t tail is evaluated through the regularized
incomplete beta function, computed here with a Lentz continued fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateInput, InsufficientData
from .metrics import CAPITAL_MEASURES, PERFORMANCE_MEASURES, AuthorMetrics

SIGNIFICANCE_LEVEL = 0.01

_BETACF_MAX_ITER = 500
_BETACF_EPS = 1e-16
_TINY = 1e-300


@dataclass(frozen=True)
class CorrelationResult:
    measure_x: str
    measure_y: str
    rho: float | None
    p_value: float | None
    n: int

    @property
    def defined(self) -> bool:
        return self.rho is not None

    @property
    def significant(self) -> bool:
        return self.p_value is not None and self.p_value < SIGNIFICANCE_LEVEL


def _betacf(a: float, b: float, x: float) -> float:
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _BETACF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETACF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta did not converge for a={a}, b={b}, x={x}")


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta function ``I_x(a, b)``."""
    if a <= 0 or b <= 0:
        raise ValueError("betainc needs a > 0 and b > 0")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"betainc needs 0 <= x <= 1, got {x}")
    if x == 0.0 or x == 1.0:
        return x
    log_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def t_two_tailed(t: float, df: float) -> float:
    """P(|T| >= |t|) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ValueError("df must be positive")
    if math.isinf(t):
        return 0.0
    return betainc(df / 2.0, 0.5, df / (df + t * t))


def t_cdf(t: float, df: float) -> float:
    tail = t_two_tailed(t, df) / 2.0
    return 1.0 - tail if t >= 0 else tail


def average_ranks(xs: Sequence) -> list[float]:
    """1-based ranks, smallest value first; ties share their mean rank."""
    if len(xs) == 0:
        raise ValueError("cannot rank an empty sequence")
    order = sorted(range(len(xs)), key=xs.__getitem__)
    ranks = [0.0] * len(xs)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and xs[order[j + 1]] == xs[order[i]]:
            j += 1
        # positions i..j hold ranks i+1..j+1
        shared = (i + j + 2) / 2.0
        for k in range(i, j + 1):
            ranks[order[k]] = shared
        i = j + 1
    return ranks


def _pearson(rx: np.ndarray, ry: np.ndarray) -> float:
    dx = rx - rx.mean()
    dy = ry - ry.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateInput("constant input, correlation undefined")
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def rho_p_value(rho: float, n: int) -> float | None:
    """Two-tailed p for a rank correlation ``rho`` over ``n`` pairs."""
    if abs(rho) >= 1.0:
        return 0.0
    if n < 3:
        return None
    df = n - 2
    t = rho * math.sqrt(df / (1.0 - rho * rho))
    return min(1.0, max(0.0, t_two_tailed(t, df)))


def _from_ranks(rx, ry, measure_x, measure_y) -> CorrelationResult:
    n = len(rx)
    rho = _pearson(np.asarray(rx, dtype=float), np.asarray(ry, dtype=float))
    return CorrelationResult(measure_x, measure_y, rho, rho_p_value(rho, n), n)


def spearman(xs: Sequence, ys: Sequence, measure_x: str = "x", measure_y: str = "y") -> CorrelationResult:
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise InsufficientData("spearman needs at least 2 pairs")
    return _from_ranks(average_ranks(xs), average_ranks(ys), measure_x, measure_y)


def correlation_table(
    metrics: Sequence[AuthorMetrics],
    capital: Sequence[str] = CAPITAL_MEASURES,
    performance: Sequence[str] = PERFORMANCE_MEASURES,
) -> list[CorrelationResult]:
    """Spearman rho for every (capital measure, performance measure) pair.

    Pairs with a constant column are returned with ``rho`` and
    ``p_value`` set to ``None``.
    """
    n = len(metrics)
    if n < 3:
        raise InsufficientData(f"need >= 3 authors for correlation, got {n}")
    ranks = {}
    for name in (*capital, *performance):
        column = [m.get(name) for m in metrics]
        ranks[name] = average_ranks(column)

    results = []
    for x in capital:
        for y in performance:
            try:
                results.append(_from_ranks(ranks[x], ranks[y], x, y))
            except DegenerateInput:
                results.append(CorrelationResult(x, y, None, None, n))
    return results
