"""Exact and log-space binomial coefficients."""

from __future__ import annotations

import math
import threading
from fractions import Fraction

TABLE_LEVELS = 128

_rows: list[list[int]] = [[1]]
_lock = threading.Lock()


def _extend_table(n: int) -> None:
    with _lock:
        while len(_rows) <= n:
            prev = _rows[-1]
            row = [1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1]
            _rows.append(row)


def binom(n: int, k: int) -> int:
    """C(n, k), with 0 outside 0 <= k <= n.

    Levels below ``TABLE_LEVELS`` come from a Pascal-rule table; larger
    levels fall through to :func:`math.comb`.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    if n < TABLE_LEVELS:
        if n >= len(_rows):
            _extend_table(n)
        return _rows[n][k]
    return math.comb(n, k)


def binom_log(n: int, k: int) -> float:
    """Natural log of C(n, k) via log-gamma. Requires 0 <= k <= n."""
    if k < 0 or k > n:
        raise ValueError(f"binom_log needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return 0.0
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def binom_ratio_exact(n: int, k: int, r: int, s: int) -> Fraction:
    """C(n-r, k-s) / C(n, k) as an exact rational."""
    if not (0 <= s <= r <= n) or k - s < 0:
        raise ValueError(f"binom_ratio needs 0 <= s <= r <= n and k >= s, got {(n, k, r, s)}")
    den = binom(n, k)
    if den == 0:
        raise ZeroDivisionError(f"C({n},{k}) = 0")
    return Fraction(binom(n - r, k - s), den)


def binom_ratio(n: int, k: int, r: int, s: int) -> float:
    """C(n-r, k-s) / C(n, k) as a float; tends to a^s (1-a)^(r-s) when k/n -> a."""
    return float(binom_ratio_exact(n, k, r, s))
