"""Independent reference implementations used only by the tests."""

import re
from math import prod

# The word triangle as printed, levels 1..6, listed from k = n down to k = 0.
FIGURE_ROWS = [
    "b a",
    "b ba a",
    "b b^2a ba^2 a",
    "b b^3a b^2aba^2 ba^3 a",
    "b b^4a b^3ab^2aba^2 b^2aba^2ba^3 ba^4 a",
    "b b^5a b^4ab^3ab^2aba^2 b^3ab^2aba^2b^2aba^2ba^3 b^2aba^2ba^3ba^4 ba^5 a",
]


def expand_powers(text: str) -> str:
    return re.sub(r"([ab])\^(\d+)", lambda m: m.group(1) * int(m.group(2)), text)


def figure_words() -> dict:
    out = {}
    for n, row in enumerate(FIGURE_ROWS, start=1):
        for k, w in zip(range(n, -1, -1), row.split()):
            out[n, k] = expand_powers(w)
    return out


def binom_product(n: int, k: int) -> int:
    if not 0 <= k <= n:
        return 0
    num = prod(n - k + i for i in range(1, k + 1))
    den = prod(range(1, k + 1))
    return num // den


_STEP = re.compile(r"(0*)(1*)10")
_BACK = re.compile(r"(1*)(0*)01")


def regex_step(bits: str) -> str:
    """T on a finite bit string, long enough to contain the rewrite."""
    m = _STEP.match(bits)
    if m is None:
        raise ValueError("no successor inside the string")
    zeros, ones = m.group(1), m.group(2)
    return "1" * len(ones) + "0" * len(zeros) + "01" + bits[m.end():]


def regex_inverse(bits: str) -> str:
    m = _BACK.match(bits)
    if m is None:
        raise ValueError("no predecessor inside the string")
    ones, zeros = m.group(1), m.group(2)
    return "0" * len(zeros) + "1" * len(ones) + "10" + bits[m.end():]


def brute_count(block: str, word: str) -> int:
    L = len(block)
    return sum(1 for i in range(len(word) - L + 1) if word[i : i + L] == block)


def words_by_recursion(n_max: int) -> dict:
    table = {}
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            if k == 0:
                table[n, k] = "a"
            elif k == n:
                table[n, k] = "b"
            else:
                table[n, k] = table[n - 1, k] + table[n - 1, k - 1]
    return table


def factorization_count(n: int, k: int, m: int) -> int:
    """Number of level-m pieces when B(n, k) is unrolled down to level m."""
    if k == 0 or k == n or n == m:
        return 1
    return factorization_count(n - 1, k, m) + factorization_count(n - 1, k - 1, m)
